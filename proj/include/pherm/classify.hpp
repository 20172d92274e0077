#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complexmat.hpp"
#include "tolerance.hpp"

namespace pherm {

// H is pseudo-Hermitian when H+ = eta H eta^-1 for some Hermitian
// invertible eta, anti-pseudo-Hermitian when H+ = -eta H eta^-1. For a
// diagonalizable 2x2 H both questions are settled by two scalars: the
// trace and the squared eigenvalue splitting tr^2 - 4 det. Realness of
// both admits the pseudo family; realness of the corresponding scalars
// of iH admits the anti family.
enum class HermiticityKind { PseudoHermitian, AntiPseudoHermitian, Both, Neither };

// Trivial: the splitting is real (real eigenvalue pair), the metric
//   family is the sigma0/sigma3 one with definite-sign option.
// NonTrivial: the splitting is imaginary (conjugate eigenvalue pair),
//   the family is the sigma1/sigma2 one, indefinite always.
// Exceptional: the splitting vanishes within tolerance; the eigensystem
//   is (numerically) defective and all construction is refused.
enum class PhaseKind { Trivial, NonTrivial, Exceptional };

// Case1: pseudo, trivial      (tr real, tr^2 > 4 det)
// Case2: pseudo, non-trivial  (tr real, tr^2 < 4 det)
// Case3: anti, trivial        (tr imaginary, tr^2 < 4 det)
// Case4: anti, non-trivial    (tr imaginary, tr^2 > 4 det)
enum class Case { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

inline bool case_is_pseudo(Case c) { return c == Case::Case1 || c == Case::Case2; }
inline bool case_is_trivial(Case c) { return c == Case::Case1 || c == Case::Case3; }

// +1 for the pseudo cases, -1 for the anti cases: the sign s in
// H+ = s eta H eta^-1.
inline int case_sign(Case c) { return case_is_pseudo(c) ? +1 : -1; }

inline Case case_for(bool pseudo, bool trivial) {
    if (pseudo) return trivial ? Case::Case1 : Case::Case2;
    return trivial ? Case::Case3 : Case::Case4;
}

inline const char* to_string(Case c) {
    switch (c) {
        case Case::Case1: return "case1";
        case Case::Case2: return "case2";
        case Case::Case3: return "case3";
        case Case::Case4: return "case4";
    }
    return "?";
}

inline const char* to_string(HermiticityKind k) {
    switch (k) {
        case HermiticityKind::PseudoHermitian: return "pseudo";
        case HermiticityKind::AntiPseudoHermitian: return "anti";
        case HermiticityKind::Both: return "both";
        case HermiticityKind::Neither: return "neither";
    }
    return "?";
}

inline const char* to_string(PhaseKind p) {
    switch (p) {
        case PhaseKind::Trivial: return "trivial";
        case PhaseKind::NonTrivial: return "non-trivial";
        case PhaseKind::Exceptional: return "exceptional";
    }
    return "?";
}

// The four scalars every admission decision reads.
//   sum    = tr H
//   disc   = tr^2 - 4 det, computed as (H11-H22)^2 + 4 H12 H21 to dodge
//            the cancellation in the textbook form
//   i_sum  = tr(iH), i_disc = disc(iH) = -disc
struct KeyQuantities {
    cplx sum;
    cplx disc;
    cplx i_sum;
    cplx i_disc;
};

inline KeyQuantities key_quantities(const CMat2& h) {
    KeyQuantities q;
    q.sum = trace(h);
    const cplx d = h(0, 0) - h(1, 1);
    q.disc = d * d + 4.0 * h(0, 1) * h(1, 0);
    q.i_sum = cplx(0, 1) * q.sum;
    q.i_disc = -q.disc;
    return q;
}

struct Classification {
    HermiticityKind kind = HermiticityKind::Neither;
    std::optional<PhaseKind> pseudo_phase;  // set iff the pseudo family is admitted
    std::optional<PhaseKind> anti_phase;    // set iff the anti family is admitted
    std::vector<Case> cases;                // admitted case labels, ascending
    KeyQuantities q{};
    bool exceptional = false;               // disc vanishes within tolerance
    double sum_scale = 0;                   // scales the realness thresholds
    double disc_scale = 0;

    bool admits(Case c) const {
        for (Case k : cases)
            if (k == c) return true;
        return false;
    }
};

// Thrown when neither family is admitted; carries the full record so the
// caller loses nothing by the throw.
struct NotClassifiable : Error {
    Classification diagnostics;

    explicit NotClassifiable(Classification diag)
        : Error("classify: neither pseudo-Hermitian nor anti-pseudo-Hermitian "
                "within tolerance (Im tr and Re tr both non-vanishing, or "
                "Im[tr^2 - 4 det] non-vanishing)"),
          diagnostics(std::move(diag)) {}
};

// Classify H by the realness pattern of its key quantities. Thresholds
// are relative to max(1, |quantity|); the exceptional test is relative
// to max(1, |H|_F^2) since disc carries two powers of H.
inline Classification classify(const CMat2& h, const Tolerances& tol = {}) {
    require_finite(h, "classify");
    const KeyQuantities q = key_quantities(h);

    Classification c;
    c.q = q;
    c.sum_scale = std::abs(q.sum);
    c.disc_scale = std::abs(q.disc);

    const double th = tol.classify_scale;
    const bool sum_real = small_against(q.sum.imag(), c.sum_scale, th);
    const bool sum_imag = small_against(q.sum.real(), c.sum_scale, th);
    const bool disc_real = small_against(q.disc.imag(), c.disc_scale, th);

    const double h2 = fnorm(h) * fnorm(h);
    c.exceptional = disc_real && small_against(std::abs(q.disc), h2, th);

    const bool pseudo = sum_real && disc_real;
    const bool anti = sum_imag && disc_real;

    if (pseudo) {
        c.pseudo_phase = c.exceptional ? PhaseKind::Exceptional
                         : (q.disc.real() > 0 ? PhaseKind::Trivial
                                              : PhaseKind::NonTrivial);
        if (!c.exceptional)
            c.cases.push_back(q.disc.real() > 0 ? Case::Case1 : Case::Case2);
    }
    if (anti) {
        c.anti_phase = c.exceptional ? PhaseKind::Exceptional
                       : (q.disc.real() < 0 ? PhaseKind::Trivial
                                            : PhaseKind::NonTrivial);
        if (!c.exceptional)
            c.cases.push_back(q.disc.real() < 0 ? Case::Case3 : Case::Case4);
    }

    if (pseudo && anti) c.kind = HermiticityKind::Both;
    else if (pseudo) c.kind = HermiticityKind::PseudoHermitian;
    else if (anti) c.kind = HermiticityKind::AntiPseudoHermitian;
    else {
        c.kind = HermiticityKind::Neither;
        throw NotClassifiable(std::move(c));
    }
    return c;
}

inline bool is_hermitian(const CMat2& h, const Tolerances& tol = {}) {
    require_finite(h, "is_hermitian");
    return fnorm(h - adjoint(h)) <=
           tol.eq_abs + tol.eq_rel * std::max(1.0, fnorm(h));
}

// Checks that `c` is admitted for H and that H is not exceptional;
// shared precondition of everything downstream of the classifier.
inline Classification require_case(const CMat2& h, Case c, const Tolerances& tol = {}) {
    const Classification cls = classify(h, tol);
    if (cls.exceptional)
        throw ExceptionalPoint("require_case: tr^2 - 4 det vanishes within tolerance");
    if (!cls.admits(c))
        throw CaseMismatch(std::string("require_case: classification does not admit ") +
                           to_string(c));
    return cls;
}

}  // namespace pherm
