#pragma once

// Rank-4 ladder construction: two fermionic modes with conjugate complex
// frequencies Omega and Omega*, assembled from Kronecker products of the
// 2x2 raising/lowering matrices. The d-mode string carries a -sigma3
// grading factor so that d-type and b-type matrices anti-commute; with
// the grading dropped they commute instead and the metric picks up +1 in
// its (1,1) entry. Both conventions share the verification machinery.

#include <algorithm>
#include <array>

#include "complexmat.hpp"

namespace pherm {

enum class LeeWickVariant { Graded, Ungraded };

inline const char* to_string(LeeWickVariant v) {
    return v == LeeWickVariant::Graded ? "graded" : "ungraded";
}

struct LeeWickSystem {
    cplx omega{};
    LeeWickVariant variant{LeeWickVariant::Graded};
    CMat4 h;
    CMat4 dbar;  // creation, d-mode
    CMat4 bbar;  // creation, b-mode
    CMat4 d;     // annihilation, d-mode
    CMat4 b;     // annihilation, b-mode
    CMat4 eta;   // self-inverse, Hermitian, indefinite
};

// Basis order (1,1), (1,0), (0,1), (0,0) in the occupation labels (m, n);
// E_{m,n} = Omega (m - 1/2) + Omega* (n - 1/2).
inline std::array<cplx, 4> lee_wick_spectrum(cplx omega) {
    const cplx oc = std::conj(omega);
    return {0.5 * (omega + oc), 0.5 * (omega - oc), 0.5 * (oc - omega),
            -0.5 * (omega + oc)};
}

inline LeeWickSystem build_lee_wick(cplx omega,
                                    LeeWickVariant variant = LeeWickVariant::Graded) {
    if (!is_finite(omega)) throw NonFinite("lee-wick: omega must be finite");

    const CMat2 raise = CMat2::rows(0.0, 1.0, 0.0, 0.0);
    const CMat2 lower = CMat2::rows(0.0, 0.0, 1.0, 0.0);
    const CMat2 one = CMat2::identity();
    const CMat2 string = variant == LeeWickVariant::Graded
                             ? CMat2::rows(-1.0, 0.0, 0.0, 1.0)
                             : one;

    LeeWickSystem sys;
    sys.omega = omega;
    sys.variant = variant;
    sys.dbar = kron(raise, one);
    sys.bbar = kron(string, raise);
    sys.d = kron(string, lower);
    sys.b = kron(lower, one);

    const cplx oc = std::conj(omega);
    sys.h = 0.5 * omega * (sys.dbar * sys.b - sys.b * sys.dbar) +
            0.5 * oc * (sys.bbar * sys.d - sys.d * sys.bbar);

    sys.eta = CMat4::zero();
    sys.eta(0, 0) = variant == LeeWickVariant::Graded ? -1.0 : 1.0;
    sys.eta(1, 2) = 1.0;
    sys.eta(2, 1) = 1.0;
    sys.eta(3, 3) = 1.0;
    return sys;
}

// Deviations from the algebra the construction is supposed to satisfy,
// grouped by family. eta is its own inverse, so conjugation is eta A eta
// throughout. The cross-mode entries pair d with bbar and b with dbar;
// same-mode pairs anti-commute to zero under the graded convention and
// commute to zero under the ungraded one, and that bracket choice is the
// only place the two conventions verify differently.
struct LeeWickResiduals {
    double pseudo_hermiticity;  // H+ = eta H eta
    double exchange;            // ladder exchange under eta-conjugation
    double pairing;             // cross-mode pairing against 1_4
    double fermionic;           // same relations via explicit adjoints
    double nilpotency;          // squares and same-type brackets

    double max() const {
        return std::max({pseudo_hermiticity, exchange, pairing, fermionic,
                         nilpotency});
    }
};

inline LeeWickResiduals verify_lee_wick(const LeeWickSystem& sys) {
    const CMat4 one = CMat4::identity();
    const bool graded = sys.variant == LeeWickVariant::Graded;
    const auto same_mode = [&](const CMat4& a, const CMat4& b) {
        return graded ? anticommutator(a, b) : commutator(a, b);
    };

    LeeWickResiduals r{};
    r.pseudo_hermiticity = fnorm(adjoint(sys.h) - sys.eta * (sys.h * sys.eta));

    r.exchange = std::max(
        {fnorm(adjoint(sys.d) - sys.eta * (sys.dbar * sys.eta)),
         fnorm(adjoint(sys.b) - sys.eta * (sys.bbar * sys.eta)),
         fnorm(adjoint(sys.dbar) - sys.eta * (sys.d * sys.eta)),
         fnorm(adjoint(sys.bbar) - sys.eta * (sys.b * sys.eta))});

    r.pairing = std::max({fnorm(anticommutator(sys.d, sys.bbar) - one),
                          fnorm(anticommutator(sys.b, sys.dbar) - one),
                          fnorm(same_mode(sys.d, sys.dbar)),
                          fnorm(same_mode(sys.b, sys.bbar))});

    const CMat4 ddag = adjoint(sys.d);
    const CMat4 bdag = adjoint(sys.b);
    r.fermionic = std::max({fnorm(anticommutator(sys.d, ddag) - one),
                            fnorm(anticommutator(sys.b, bdag) - one),
                            fnorm(same_mode(sys.d, bdag)),
                            fnorm(same_mode(sys.b, ddag))});

    r.nilpotency = std::max(
        {fnorm(anticommutator(sys.d, sys.d)),
         fnorm(anticommutator(sys.b, sys.b)),
         fnorm(anticommutator(sys.dbar, sys.dbar)),
         fnorm(anticommutator(sys.bbar, sys.bbar)),
         fnorm(same_mode(sys.d, sys.b)),
         fnorm(same_mode(sys.dbar, sys.bbar))});
    return r;
}

}  // namespace pherm
