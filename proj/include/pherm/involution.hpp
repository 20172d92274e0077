#pragma once

#include "metric.hpp"

namespace pherm {

// Most general real parity frame entering the CPT-style construction:
//
//   P = [[cos phi_p, sin phi_p], [sin phi_p, -cos phi_p]],
//   P = P^T = P^-1,  det P = -1.
struct GeneralParity {
    double phi_p{0.0};

    GeneralParity() = default;
    explicit GeneralParity(double angle) : phi_p(angle) {
        if (!std::isfinite(angle))
            throw NonFinite("GeneralParity: angle is not finite");
    }

    CMat2 matrix() const {
        const double c = std::cos(phi_p);
        const double s = std::sin(phi_p);
        return CMat2::rows(c, s, s, -c);
    }
};

struct CResult {
    CMat2 c_matrix;
    double involution_residual{0.0};  // ||C^2 - 1||_F
    CMat2 b_used;
};

// Residual of the compatibility condition on B: [B,H] for the
// pseudo-Hermitian kind, {B,H} for the anti kind, relative to scale.
inline double commutant_residual(const CMat2& h, const CMat2& b, HermiticityKind kind) {
    require_finite(h, "commutant_residual");
    require_finite(b, "commutant_residual");
    const CMat2 g = (kind == HermiticityKind::AntiPseudoHermitian)
                        ? anticommutator(b, h)
                        : commutator(b, h);
    return fnorm(g) / std::max(1.0, fnorm(b) * fnorm(h));
}

// C = (eta B)^T P^-1. Nothing here presumes C is an involution; the
// residual reports how far C^2 is from the identity.
inline CResult c_operator(const CMat2& eta, const CMat2& b, const GeneralParity& p,
                          const Tolerances& tol = {}) {
    require_finite(eta, "c_operator");
    require_finite(b, "c_operator");
    const double scale = std::max(1.0, fnorm(eta));
    if (std::abs(det(eta)) <= tol.eq_abs * scale * scale)
        throw SingularMatrix("c_operator: eta is singular");

    CResult r;
    r.b_used = b;
    r.c_matrix = transpose(eta * b) * inverse(p.matrix(), tol);
    r.involution_residual =
        fnorm(r.c_matrix * r.c_matrix - CMat2::identity());
    return r;
}

// The conditions under which C^2 = 1 can hold for every parity angle at
// once (with B = 1): unit-modulus normalizations and a symmetric H.
struct InvolutionConstraint {
    bool n_modulus_ok{false};
    bool symmetric_ok{false};
    bool satisfiable{false};
};

inline InvolutionConstraint involution_constraint_check(const CMat2& h,
                                                        const Normalization& nn,
                                                        const Tolerances& tol = {}) {
    require_case(h, Case::Case1, tol);
    const double scale = std::max(1.0, fnorm(h));
    InvolutionConstraint r;
    r.n_modulus_ok = std::abs(std::norm(nn.n1) - 1.0) <= tol.eq_abs &&
                     std::abs(std::norm(nn.n2) - 1.0) <= tol.eq_abs;
    r.symmetric_ok = std::abs(h(0, 1) - h(1, 0)) <= tol.eq_abs * scale;
    r.satisfiable = r.n_modulus_ok && r.symmetric_ok;
    return r;
}

// Comparison against the positive metric quoted for the symmetric
// (t = s) family: the diagonal-normalization combination on the left of
// the first relation, and the sin(gamma) the second relation implies.
struct GeyerReport {
    double lhs1{0.0};       // (|N1|^2 + |N2|^2) / (2 sqrt(1 - w^2))
    double sin_gamma{0.0};  // +/- (|N1|^2 - |N2|^2) / 2
    bool bound_ok{false};   // sin(gamma)^2 + w^2 < 1,  w = (r/s) sin(theta)
};

inline GeyerReport geyer_relations(double r, double theta, double s,
                                   const Normalization& nn,
                                   Branch b = Branch::Plus) {
    const double rs = r * std::sin(theta);
    if (!(s * s > rs * rs))
        throw CaseMismatch("geyer_relations: s^2 <= (r sin theta)^2 leaves Case 1");
    const double w = rs / s;
    GeyerReport g;
    g.lhs1 = (std::norm(nn.n1) + std::norm(nn.n2)) /
             (2.0 * std::sqrt(1.0 - w * w));
    g.sin_gamma = ((b == Branch::Plus) ? 1.0 : -1.0) *
                  (std::norm(nn.n1) - std::norm(nn.n2)) / 2.0;
    g.bound_ok = g.sin_gamma * g.sin_gamma + w * w < 1.0;
    return g;
}

}  // namespace pherm
