#pragma once

#include <array>

#include "complexmat.hpp"

namespace pherm {

// Complex 3-vector in the Pauli expansion M = a0*1 + a.sigma. The dot
// product used throughout is the *bilinear* one (no conjugation): that is
// the form under which n.n = 1 defines the complex unit vectors here.
struct Vec3c {
    std::array<cplx, 3> v{};

    cplx& operator[](int i) { return v[static_cast<size_t>(i)]; }
    const cplx& operator[](int i) const { return v[static_cast<size_t>(i)]; }
};

inline Vec3c operator+(const Vec3c& a, const Vec3c& b) {
    return Vec3c{{a[0] + b[0], a[1] + b[1], a[2] + b[2]}};
}

inline Vec3c operator-(const Vec3c& a, const Vec3c& b) {
    return Vec3c{{a[0] - b[0], a[1] - b[1], a[2] - b[2]}};
}

inline Vec3c operator*(cplx s, const Vec3c& a) {
    return Vec3c{{s * a[0], s * a[1], s * a[2]}};
}

inline Vec3c conjugate(const Vec3c& a) {
    return Vec3c{{std::conj(a[0]), std::conj(a[1]), std::conj(a[2])}};
}

inline cplx dot(const Vec3c& a, const Vec3c& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3c cross(const Vec3c& a, const Vec3c& b) {
    return Vec3c{{a[1] * b[2] - a[2] * b[1],
                  a[2] * b[0] - a[0] * b[2],
                  a[0] * b[1] - a[1] * b[0]}};
}

inline CMat2 sigma(int k) {
    switch (k) {
        case 0: return CMat2::identity();
        case 1: return CMat2::rows(0, 1, 1, 0);
        case 2: return CMat2::rows(0, cplx(0, -1), cplx(0, 1), 0);
        case 3: return CMat2::rows(1, 0, 0, -1);
    }
    throw Error("sigma: index out of range");
}

inline CMat2 sigma_dot(const Vec3c& a) {
    return CMat2::rows(a[2], a[0] - cplx(0, 1) * a[1],
                       a[0] + cplx(0, 1) * a[1], -a[2]);
}

struct PauliDecomposition {
    cplx a0;
    Vec3c a;
};

inline PauliDecomposition pauli_decompose(const CMat2& m) {
    PauliDecomposition d;
    d.a0 = (m(0, 0) + m(1, 1)) / 2.0;
    d.a[0] = (m(0, 1) + m(1, 0)) / 2.0;
    d.a[1] = cplx(0, 1) * (m(0, 1) - m(1, 0)) / 2.0;
    d.a[2] = (m(0, 0) - m(1, 1)) / 2.0;
    return d;
}

inline CMat2 pauli_compose(const PauliDecomposition& d) {
    return d.a0 * CMat2::identity() + sigma_dot(d.a);
}

// Product of Pauli-vector factors, reduced back to scalar + vector form.
struct PauliProduct {
    cplx scalar;
    Vec3c vec;

    CMat2 matrix() const {
        return scalar * CMat2::identity() + sigma_dot(vec);
    }
};

// (u.sigma)(v.sigma) = (u.v) 1 + i (u x v).sigma
inline PauliProduct pauli_double_product(const Vec3c& u, const Vec3c& v) {
    return PauliProduct{dot(u, v), cplx(0, 1) * cross(u, v)};
}

// (u.sigma)(e.sigma)(v.sigma)
//   = -i (e.(u x v)) 1 + [ (u.e) v + (v.e) u - (u.v) e ].sigma
inline PauliProduct pauli_triple_product(const Vec3c& u, const Vec3c& e,
                                         const Vec3c& v) {
    PauliProduct p;
    p.scalar = cplx(0, -1) * dot(e, cross(u, v));
    p.vec = dot(u, e) * v + dot(v, e) * u - dot(u, v) * e;
    return p;
}

}  // namespace pherm
