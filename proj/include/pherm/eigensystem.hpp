#pragma once

#include "classify.hpp"
#include "pauli.hpp"

namespace pherm {

// Sign of the square root taken for the eigenvalue splitting. Plus picks
// the positive real root in cases 1/4 and +i times the positive real
// root in cases 2/3; Minus negates it.
enum class Branch { Plus, Minus };

inline Branch flipped(Branch b) {
    return b == Branch::Plus ? Branch::Minus : Branch::Plus;
}

inline const char* to_string(Branch b) {
    return b == Branch::Plus ? "plus" : "minus";
}

// The global encircled sign on a metric: the overall +/- freedom left
// after normalization constants are fixed.
enum class CircleSign { Plus, Minus };

inline const char* to_string(CircleSign s) {
    return s == CircleSign::Plus ? "plus" : "minus";
}

inline double circle_factor(CircleSign s) {
    return s == CircleSign::Plus ? 1.0 : -1.0;
}

// Half the eigenvalue splitting, (E1 - E2)/2, with the per-case branch
// convention. Admission (realness of disc with the right sign) is the
// caller's responsibility; this only reads the real part.
inline cplx case_halfdiff(const KeyQuantities& q, Case c, Branch b) {
    const double sign = (b == Branch::Plus) ? 1.0 : -1.0;
    if (case_is_trivial(c) == case_is_pseudo(c)) {
        // cases 1 and 4: real splitting
        return cplx(sign * std::sqrt(std::max(q.disc.real(), 0.0)) / 2.0);
    }
    // cases 2 and 3: imaginary splitting
    return cplx(0, sign * std::sqrt(std::max(-q.disc.real(), 0.0)) / 2.0);
}

// Eigenvalue pair (E1, E2) = (tr/2 + halfdiff, tr/2 - halfdiff).
inline std::pair<cplx, cplx> eigenvalues(const CMat2& h, Case c, Branch b,
                                         const Tolerances& tol = {}) {
    const Classification cls = require_case(h, c, tol);
    const cplx hd = case_halfdiff(cls.q, c, b);
    return {cls.q.sum / 2.0 + hd, cls.q.sum / 2.0 - hd};
}

// The complex unit Pauli vector of H in matrix form:
//   n.sigma = (H - (tr/2) 1) / halfdiff,   n.n = 1.
inline CMat2 unit_vector_matrix(const CMat2& h, Case c, Branch b,
                                const Tolerances& tol = {}) {
    const Classification cls = require_case(h, c, tol);
    const cplx hd = case_halfdiff(cls.q, c, b);
    return (h - (cls.q.sum / 2.0) * CMat2::identity()) / hd;
}

// Unimodular eigenbasis of H. X H X^-1 = diag(E1, E2) with det X = 1
// exactly in the construction:
//   X = p (1 - K/D+),  X^-1 = p (1 + K/D+),
//   K = [[0, -H12], [H21, 0]],  D+ = halfdiff + (H11 - H22)/2,
//   p = sqrt(D+ / (2 halfdiff)).
// The adjoints are computed as literal conjugate transposes; resolving
// them through the same closed form would put conj inside a square root
// and break on the principal branch cut.
struct EigenSystem {
    Case case_label;
    Branch branch;     // effective branch; may differ from the request
                       // when the requested frame was singular
    cplx e1, e2;
    cplx halfdiff;
    CMat2 nsigma;
    CMat2 x, x_inv;
    CMat2 xdag, xdag_inv;
};

inline EigenSystem eigenbasis(const CMat2& h, Case c, Branch b,
                              const Tolerances& tol = {}) {
    const Classification cls = require_case(h, c, tol);
    const cplx half_tr = cls.q.sum / 2.0;
    const cplx a3 = (h(0, 0) - h(1, 1)) / 2.0;
    const double hscale = std::max(1.0, fnorm(h));

    EigenSystem es;
    es.case_label = c;

    // Diagonal H: the generic frame formula degenerates exactly when the
    // branch labels E1 = H22, so both orderings get explicit unimodular
    // frames here.
    if (std::abs(h(0, 1)) <= tol.eq_abs * hscale &&
        std::abs(h(1, 0)) <= tol.eq_abs * hscale) {
        const cplx hd = case_halfdiff(cls.q, c, b);
        es.branch = b;
        es.halfdiff = hd;
        es.e1 = half_tr + hd;
        es.e2 = half_tr - hd;
        if (std::abs(hd - a3) <= std::abs(hd + a3)) {
            es.x = CMat2::identity();
            es.x_inv = CMat2::identity();
        } else {
            es.x = CMat2::rows(0, 1, -1, 0);
            es.x_inv = CMat2::rows(0, -1, 1, 0);
        }
        es.xdag = adjoint(es.x);
        es.xdag_inv = adjoint(es.x_inv);
        es.nsigma = (h - half_tr * CMat2::identity()) / hd;
        return es;
    }

    Branch eff = b;
    cplx hd = case_halfdiff(cls.q, c, eff);
    cplx dplus = hd + a3;
    if (std::abs(dplus) <= 1e-8 * hscale) {
        // n3 = -1 frame: the opposite root gives D+ = -2 halfdiff, which
        // is safely away from zero for any non-exceptional H.
        eff = flipped(eff);
        hd = -hd;
        dplus = hd + a3;
        if (std::abs(dplus) <= 1e-8 * hscale)
            throw DegenerateFrame("eigenbasis: both frames singular");
    }

    const cplx p = std::sqrt(dplus / (2.0 * hd));
    const cplx k01 = h(0, 1) / dplus;
    const cplx k10 = h(1, 0) / dplus;

    es.branch = eff;
    es.halfdiff = hd;
    es.e1 = half_tr + hd;
    es.e2 = half_tr - hd;
    es.x = p * CMat2::rows(1, k01, -k10, 1);
    es.x_inv = p * CMat2::rows(1, -k01, k10, 1);
    es.xdag = adjoint(es.x);
    es.xdag_inv = adjoint(es.x_inv);
    es.nsigma = (h - half_tr * CMat2::identity()) / hd;
    return es;
}

// Generalized parity from an explicit frame: P = +/- n_perp.sigma with
// n_perp bilinearly unit and orthogonal to n.
inline CMat2 generalized_parity(const Vec3c& n, const Vec3c& n_perp,
                                CircleSign sign, const Tolerances& tol = {}) {
    const cplx nn = dot(n, n);
    const cplx pp = dot(n_perp, n_perp);
    const cplx np = dot(n, n_perp);
    const double th = tol.eq_abs + tol.eq_rel;
    if (std::abs(nn - 1.0) > 1e3 * th)
        throw InvalidPerpVector("generalized_parity: n.n != 1");
    if (std::abs(pp - 1.0) > 1e3 * th)
        throw InvalidPerpVector("generalized_parity: n_perp.n_perp != 1");
    if (std::abs(np) > 1e3 * th)
        throw InvalidPerpVector("generalized_parity: n.n_perp != 0");
    return circle_factor(sign) * sigma_dot(n_perp);
}

// The automatic frame n_perp = (n x n*) / sqrt((n x n*).(n x n*)). For
// n = a + ib this reduces to -(a x b)/|a x b|, a real unit vector, so
// the resulting parity is Hermitian. Only available when n is genuinely
// complex: a real n (up to a phase) has n x n* = 0.
inline Vec3c perp_from_cross(const Vec3c& n, const Tolerances& tol = {}) {
    const Vec3c c = cross(n, conjugate(n));
    // c is anti-self-conjugate, so its bilinear square is real and
    // non-positive exactly; evaluating the principal root on that axis
    // explicitly keeps rounding from flipping the branch.
    const double r = -dot(c, c).real();
    if (r <= tol.eq_abs)
        throw InvalidPerpVector(
            "perp_from_cross: n x n* vanishes (n real up to a phase); "
            "supply n_perp explicitly");
    return (cplx(1) / cplx(0, std::sqrt(r))) * c;
}

inline CMat2 generalized_parity(const Vec3c& n, CircleSign sign,
                                const Tolerances& tol = {}) {
    return generalized_parity(n, perp_from_cross(n, tol), sign, tol);
}

}  // namespace pherm
