#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <ostream>

#include "errors.hpp"
#include "tolerance.hpp"

namespace pherm {

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Dense 2x2 complex matrix, row-major. All operations are by value; at
// this size there is nothing to be gained from views or expression
// templates and plenty of clarity to be lost.
struct CMat2 {
    std::array<cplx, 4> e{};

    cplx& operator()(int r, int c) { return e[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[2 * r + c]; }

    static CMat2 zero() { return {}; }

    static CMat2 identity() {
        return CMat2{{cplx(1), cplx(0), cplx(0), cplx(1)}};
    }

    static CMat2 rows(cplx a, cplx b, cplx c, cplx d) {
        return CMat2{{a, b, c, d}};
    }

    static CMat2 diag(cplx a, cplx d) {
        return CMat2{{a, cplx(0), cplx(0), d}};
    }

    bool finite() const {
        for (const auto& z : e)
            if (!is_finite(z)) return false;
        return true;
    }
};

inline CMat2 operator+(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline CMat2 operator-(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline CMat2 operator-(const CMat2& a) {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = -a.e[i];
    return r;
}

inline CMat2 operator*(const CMat2& a, const CMat2& b) {
    CMat2 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline CMat2 operator*(cplx s, const CMat2& a) {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
    return r;
}

inline CMat2 operator*(const CMat2& a, cplx s) { return s * a; }

inline CMat2 operator/(const CMat2& a, cplx s) { return (cplx(1) / s) * a; }

inline CMat2 transpose(const CMat2& a) {
    return CMat2::rows(a(0, 0), a(1, 0), a(0, 1), a(1, 1));
}

inline CMat2 conjugate(const CMat2& a) {
    CMat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = std::conj(a.e[i]);
    return r;
}

inline CMat2 adjoint(const CMat2& a) { return conjugate(transpose(a)); }

inline cplx trace(const CMat2& a) { return a(0, 0) + a(1, 1); }

inline cplx det(const CMat2& a) {
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

inline double fnorm(const CMat2& a) {
    double s = 0;
    for (const auto& z : a.e) s += std::norm(z);
    return std::sqrt(s);
}

inline CMat2 adjugate(const CMat2& a) {
    return CMat2::rows(a(1, 1), -a(0, 1), -a(1, 0), a(0, 0));
}

// Inverse via the adjugate. Throws SingularMatrix when |det| is small
// against the squared matrix scale.
inline CMat2 inverse(const CMat2& a, const Tolerances& tol = {}) {
    const cplx d = det(a);
    const double scale = fnorm(a);
    if (std::abs(d) <= tol.eq_abs * std::max(1.0, scale * scale))
        throw SingularMatrix("2x2 inverse: determinant below threshold");
    return adjugate(a) / d;
}

inline CMat2 commutator(const CMat2& a, const CMat2& b) {
    return a * b - b * a;
}

inline CMat2 anticommutator(const CMat2& a, const CMat2& b) {
    return a * b + b * a;
}

inline bool approx_eq(const CMat2& a, const CMat2& b, const Tolerances& tol = {}) {
    return fnorm(a - b) <= tol.eq_abs + tol.eq_rel * std::max(fnorm(a), fnorm(b));
}

inline void require_finite(const CMat2& a, const char* who) {
    if (!a.finite()) throw NonFinite(std::string(who) + ": non-finite matrix entry");
}

inline std::ostream& operator<<(std::ostream& os, const CMat2& a) {
    os << "[[" << a(0, 0) << ", " << a(0, 1) << "], [" << a(1, 0) << ", "
       << a(1, 1) << "]]";
    return os;
}

// Dense 4x4 complex matrix, row-major. Only what the rank-4 ladder
// construction needs; no inverse (the metrics there are self-inverse).
struct CMat4 {
    std::array<cplx, 16> e{};

    cplx& operator()(int r, int c) { return e[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[4 * r + c]; }

    static CMat4 zero() { return {}; }

    static CMat4 identity() {
        CMat4 r;
        for (int i = 0; i < 4; ++i) r(i, i) = 1;
        return r;
    }

    static CMat4 diag(cplx a, cplx b, cplx c, cplx d) {
        CMat4 r;
        r(0, 0) = a;
        r(1, 1) = b;
        r(2, 2) = c;
        r(3, 3) = d;
        return r;
    }

    bool finite() const {
        for (const auto& z : e)
            if (!is_finite(z)) return false;
        return true;
    }
};

inline CMat4 operator+(const CMat4& a, const CMat4& b) {
    CMat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

inline CMat4 operator-(const CMat4& a, const CMat4& b) {
    CMat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline CMat4 operator-(const CMat4& a) {
    CMat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = -a.e[i];
    return r;
}

inline CMat4 operator*(const CMat4& a, const CMat4& b) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline CMat4 operator*(cplx s, const CMat4& a) {
    CMat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = s * a.e[i];
    return r;
}

inline CMat4 operator*(const CMat4& a, cplx s) { return s * a; }

inline CMat4 transpose(const CMat4& a) {
    CMat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = a(j, i);
    return r;
}

inline CMat4 conjugate(const CMat4& a) {
    CMat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = std::conj(a.e[i]);
    return r;
}

inline CMat4 adjoint(const CMat4& a) { return conjugate(transpose(a)); }

inline cplx trace(const CMat4& a) {
    return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
}

inline double fnorm(const CMat4& a) {
    double s = 0;
    for (const auto& z : a.e) s += std::norm(z);
    return std::sqrt(s);
}

inline CMat4 commutator(const CMat4& a, const CMat4& b) {
    return a * b - b * a;
}

inline CMat4 anticommutator(const CMat4& a, const CMat4& b) {
    return a * b + b * a;
}

inline bool approx_eq(const CMat4& a, const CMat4& b, const Tolerances& tol = {}) {
    return fnorm(a - b) <= tol.eq_abs + tol.eq_rel * std::max(fnorm(a), fnorm(b));
}

inline void require_finite(const CMat4& a, const char* who) {
    if (!a.finite()) throw NonFinite(std::string(who) + ": non-finite matrix entry");
}

inline CMat4 kron(const CMat2& a, const CMat2& b) {
    CMat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

inline std::ostream& operator<<(std::ostream& os, const CMat4& a) {
    os << "[";
    for (int i = 0; i < 4; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << a(i, j);
        os << "]";
    }
    return os << "]";
}

}  // namespace pherm
