#pragma once

#include <vector>

#include "eigensystem.hpp"

namespace pherm {

struct StateVec2 {
    cplx c1{1.0, 0.0};
    cplx c2{0.0, 0.0};

    StateVec2() = default;
    StateVec2(cplx a, cplx b) : c1(a), c2(b) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) ||
            !std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw NonFinite("StateVec2: component is not finite");
    }
};

inline StateVec2 operator*(const CMat2& m, const StateVec2& v) {
    return {m(0, 0) * v.c1 + m(0, 1) * v.c2, m(1, 0) * v.c1 + m(1, 1) * v.c2};
}

inline double norm2(const StateVec2& v) {
    return std::norm(v.c1) + std::norm(v.c2);
}

// psi+ A psi, conjugate-linear in the left slot.
inline cplx expectation(const StateVec2& psi, const CMat2& a) {
    const StateVec2 ap = a * psi;
    return std::conj(psi.c1) * ap.c1 + std::conj(psi.c2) * ap.c2;
}

// exp(-i H t) assembled from an eigenbasis of H:
//   X^-1 diag(e^{-i E1 t}, e^{-i E2 t}) X.
inline CMat2 propagator(const EigenSystem& es, double t) {
    const cplx p1 = std::exp(cplx(0, -t) * es.e1);
    const cplx p2 = std::exp(cplx(0, -t) * es.e2);
    return es.x_inv * (CMat2::diag(p1, p2) * es.x);
}

// Spectral decomposition for evolution purposes: any admitted case label
// gives the same propagator, so the first one is taken.
inline EigenSystem evolution_basis(const CMat2& h, const Tolerances& tol = {}) {
    const Classification cls = classify(h, tol);
    if (cls.exceptional)
        throw ExceptionalPoint("evolve: no spectral decomposition at an exceptional point");
    return eigenbasis(h, cls.cases.front(), Branch::Plus, tol);
}

// psi(t) = exp(-i H t) psi0, hbar = 1, exact for diagonalizable H.
inline StateVec2 evolve(const CMat2& h, const StateVec2& psi0, double t,
                        const Tolerances& tol = {}) {
    if (norm2(psi0) == 0.0)
        throw Error("evolve: zero initial state");
    return propagator(evolution_basis(h, tol), t) * psi0;
}

struct EvolutionReport {
    std::vector<double> times;
    std::vector<cplx> values;  // <psi(t)| eta B |psi(t)>
    double max_drift{0.0};     // max_k |values[k] - values[0]|
};

// Tracks <psi(t)| (eta B) |psi(t)> along the exact evolution. For eta
// satisfying the defining relation and B (anti-)commuting with H as the
// kind demands, the sequence is constant; max_drift quantifies any
// failure of that.
inline EvolutionReport stationarity_check(const CMat2& h, const CMat2& eta,
                                          const CMat2& b, const StateVec2& psi0,
                                          const std::vector<double>& times,
                                          const Tolerances& tol = {}) {
    if (norm2(psi0) == 0.0)
        throw Error("stationarity_check: zero initial state");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1]))
            throw Error("stationarity_check: times must be strictly increasing");
    require_finite(eta, "stationarity_check");
    require_finite(b, "stationarity_check");

    const EigenSystem es = evolution_basis(h, tol);
    const CMat2 a = eta * b;

    EvolutionReport rep;
    rep.times = times;
    rep.values.reserve(times.size());
    for (double t : times)
        rep.values.push_back(expectation(propagator(es, t) * psi0, a));
    for (const cplx& v : rep.values)
        rep.max_drift = std::max(rep.max_drift, std::abs(v - rep.values.front()));
    return rep;
}

}  // namespace pherm
