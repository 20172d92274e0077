#pragma once

#include <random>

#include <pherm/pherm.hpp>

// Shared utilities for the test suites. Every generator takes its engine
// by reference and every suite seeds its own engine with a fixed constant,
// so runs are reproducible and suites stay order-independent.
namespace testutil {

using pherm::CMat2;
using pherm::cplx;
using pherm::Vec3c;

inline double urand(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline cplx crand(std::mt19937_64& g, double r = 1.0) {
    return cplx(urand(g, -r, r), urand(g, -r, r));
}

inline CMat2 random_mat(std::mt19937_64& g, double r = 1.0) {
    return CMat2::rows(crand(g, r), crand(g, r), crand(g, r), crand(g, r));
}

inline Vec3c random_vec3(std::mt19937_64& g, double r = 1.0) {
    return Vec3c{{crand(g, r), crand(g, r), crand(g, r)}};
}

// A random Hamiltonian admitted for a given case, with its ground truth.
// Built directly from the normal form: H = (tr/2) 1 + hd (n.sigma) with
// n.n = 1, so disc = 4 hd^2 with the sign pattern the case demands.
// Samples stay well inside the regime (|hd| and |tr| bounded away from
// zero, moderate non-normality) so tolerance checks are meaningful.
struct CaseSample {
    CMat2 h;
    cplx half_tr;
    cplx halfdiff;  // the Plus-branch value
    Vec3c n;
};

inline CaseSample random_case_sample(std::mt19937_64& g, pherm::Case c,
                                     double scale = 1.0) {
    using pherm::Case;
    for (;;) {
        const double t = urand(g, 0.3, 1.5) * (g() % 2 ? 1 : -1) * scale;
        const double s = urand(g, 0.2, 1.2) * scale;
        Vec3c a = random_vec3(g);
        const cplx nn = pherm::dot(a, a);
        if (std::abs(nn) < 0.25) continue;
        const Vec3c n = (cplx(1) / std::sqrt(nn)) * a;
        if (pherm::fnorm(pherm::sigma_dot(n)) > 8.0) continue;

        CaseSample out;
        out.n = n;
        out.half_tr = pherm::case_is_pseudo(c) ? cplx(t) : cplx(0, t);
        out.halfdiff = pherm::case_is_trivial(c) == pherm::case_is_pseudo(c)
                           ? cplx(s)       // cases 1 and 4: real splitting
                           : cplx(0, s);   // cases 2 and 3: imaginary splitting
        out.h = out.half_tr * CMat2::identity() +
                out.halfdiff * pherm::sigma_dot(n);
        return out;
    }
}

inline CMat2 random_case_h(std::mt19937_64& g, pherm::Case c, double scale = 1.0) {
    return random_case_sample(g, c, scale).h;
}

// Complex-ghost family: real mass m, conjugate-pair shift -/+ i eps on
// the diagonal, coupling gamma. Pseudo for every (m, eps, gamma); the
// case index follows the sign of |gamma|^2 - eps^2 and, for m = 0, the
// anti family is admitted as well.
inline CMat2 ghost(double m, double eps, cplx gamma) {
    return CMat2::rows(cplx(m, -eps), std::conj(gamma), gamma, cplx(m, eps));
}

}  // namespace testutil
