#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace pherm {

using cplx = std::complex<double>;

// Tolerance bundle threaded through every approximate decision.
//
//   eq_abs / eq_rel     mixed absolute/relative floor for equality of
//                       scalars and matrices
//   classify_scale      admission threshold for "this part vanishes"
//                       decisions (hermiticity kind, exceptional locus);
//                       always applied against a problem-size scale,
//                       never raw
struct Tolerances {
    double eq_abs = 1e-10;
    double eq_rel = 1e-10;
    double classify_scale = 1e-9;
};

inline bool approx_eq(double a, double b, const Tolerances& tol = {}) {
    return std::abs(a - b) <= tol.eq_abs + tol.eq_rel * std::max(std::abs(a), std::abs(b));
}

inline bool approx_eq(cplx a, cplx b, const Tolerances& tol = {}) {
    return std::abs(a - b) <= tol.eq_abs + tol.eq_rel * std::max(std::abs(a), std::abs(b));
}

// |x| small relative to a caller-chosen scale, floored at 1 so that
// near-zero problems don't make the test vacuously strict.
inline bool small_against(double x, double scale, double threshold) {
    return std::abs(x) <= threshold * std::max(1.0, std::abs(scale));
}

}  // namespace pherm
