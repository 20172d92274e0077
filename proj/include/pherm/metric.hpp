#pragma once

#include <cmath>
#include <string>

#include "classify.hpp"
#include "eigensystem.hpp"

namespace pherm {

// Diagonal eigenvector rescaling N = diag(N1, N2); the whole metric
// family is swept out by this freedom. Only four real weights of N ever
// enter a metric:
//   c0 = (|N1|^2 + |N2|^2)/2   on X+ X
//   c3 = (|N1|^2 - |N2|^2)/2   on X+ sigma3 X
//   c1 = Re(N1* N2)            on X+ (e.sigma) X
//   c2 = Im(N1* N2)            on X+ (e_perp.sigma) X
// c0, c3 reproduce N+ N = c0 + c3 sigma3; c1, c2 reproduce
// N+ (e.sigma) N = c1 (e.sigma) + c2 (e_perp.sigma), since the (1,2)
// entry of that product is N1* N2 e^{-i phi} = (c1 + i c2) e^{-i phi}.
struct Normalization {
    cplx n1{1.0, 0.0};
    cplx n2{1.0, 0.0};

    Normalization() = default;
    Normalization(cplx a, cplx b) : n1(a), n2(b) {
        if (!is_finite(a) || !is_finite(b))
            throw NonFinite("normalization: non-finite entry");
        if (std::abs(a) == 0.0 || std::abs(b) == 0.0)
            throw SingularMatrix("normalization: N must be invertible");
    }

    double c0() const { return 0.5 * (std::norm(n1) + std::norm(n2)); }
    double c3() const { return 0.5 * (std::norm(n1) - std::norm(n2)); }
    cplx w() const { return std::conj(n1) * n2; }
    double c1() const { return w().real(); }
    double c2() const { return w().imag(); }
    CMat2 matrix() const { return CMat2::diag(n1, n2); }
};

// In-plane unit vector e = (cos phi, sin phi, 0), phi complex allowed;
// e.e = 1 and e.e_perp = 0 hold identically in phi. P = e.sigma is the
// general involution anti-commuting with sigma3.
struct PhaseVector {
    cplx phi{0.0, 0.0};

    PhaseVector() = default;
    explicit PhaseVector(cplx angle) : phi(angle) {
        if (!is_finite(angle)) throw NonFinite("phase vector: non-finite angle");
    }

    Vec3c e() const { return Vec3c{{std::cos(phi), std::sin(phi), 0.0}}; }
    Vec3c e_perp() const { return Vec3c{{std::sin(phi), -std::cos(phi), 0.0}}; }
    CMat2 parity() const { return sigma_dot(e()); }
    CMat2 parity_perp() const { return sigma_dot(e_perp()); }
    bool real_angle() const { return phi.imag() == 0.0; }
};

enum class QKind { Identity, Parity };

inline const char* to_string(QKind q) {
    return q == QKind::Identity ? "identity" : "parity";
}

struct MetricResult {
    Case case_label;
    Branch branch;      // effective branch, as reported by the frame
    CircleSign circle;
    QKind q_kind;
    PhaseVector phase;  // meaningful for the parity kind only
    Normalization norm;
    CMat2 part_a;       // c0 X+ X        or c1 X+ (e.sigma) X
    CMat2 part_b;       // c3 X+ sigma3 X or c2 X+ (e_perp.sigma) X
    CMat2 eta;          // part_a + part_b
    int sign;           // +1 pseudo, -1 anti
    bool hermitian;
    double residual;    // defining-relation residual
};

// Closed forms for X+ sigma_k X in the entries of H (k = 0 is X+ X),
// Hermitian entry by entry. They cost a handful of real products against
// two matrix multiplies for the literal sandwich. The forms are 0/0 on
// the degenerate frame D+ = 0 (diagonal H labeled against the generic
// formula), where the literal product takes over.
inline CMat2 xdag_sigma_x(const CMat2& h, const EigenSystem& es, int k,
                          const Tolerances& tol = {}) {
    (void)tol;
    const cplx a3 = (h(0, 0) - h(1, 1)) / 2.0;
    const cplx dplus = es.halfdiff + a3;
    const double hscale = std::max(1.0, fnorm(h));
    if (std::abs(dplus) <= 1e-8 * hscale)
        return es.xdag * (sigma(k) * es.x);

    const double d2 = std::norm(dplus);
    const double rd = dplus.real();
    const double id = dplus.imag();
    const cplx h12 = h(0, 1), h21 = h(1, 0);
    const cplx c12 = std::conj(h12), c21 = std::conj(h21);
    const double ahd = std::abs(es.halfdiff);
    const double ad = std::abs(dplus);

    switch (k) {
        case 0:
            return (1.0 / (2.0 * ahd * ad)) *
                   CMat2::rows(d2 + std::norm(h21),
                               rd * (h12 - c21) - cplx(0, id) * (h12 + c21),
                               -rd * (h21 - c12) + cplx(0, id) * (h21 + c12),
                               d2 + std::norm(h12));
        case 3:
            return (1.0 / (2.0 * ahd * ad)) *
                   CMat2::rows(d2 - std::norm(h21),
                               rd * (h12 + c21) - cplx(0, id) * (h12 - c21),
                               rd * (h21 + c12) - cplx(0, id) * (h21 - c12),
                               std::norm(h12) - d2);
        case 1:
            return (1.0 / (ahd * ad)) *
                   CMat2::rows(-rd * h21.real() - id * h21.imag(),
                               0.5 * (d2 - h12 * c21),
                               0.5 * (d2 - h21 * c12),
                               rd * h12.real() + id * h12.imag());
        case 2:
            return (1.0 / (ahd * ad)) *
                   CMat2::rows(-rd * h21.imag() + id * h21.real(),
                               cplx(0, -0.5) * (d2 + h12 * c21),
                               cplx(0, 0.5) * (d2 + h21 * c12),
                               -rd * h12.imag() + id * h12.real());
        default:
            throw Error("xdag_sigma_x: k must be 0..3");
    }
}

// ||H+ -/+ eta H eta^-1||_F / max(1, ||H||_F) for sign = +1 / -1.
inline double verify_pseudo_hermiticity(const CMat2& h, const CMat2& eta, int sign,
                                        const Tolerances& tol = {}) {
    require_finite(h, "verify_pseudo_hermiticity");
    require_finite(eta, "verify_pseudo_hermiticity");
    const CMat2 eta_inv = inverse(eta, tol);
    const CMat2 resid = adjoint(h) - double(sign) * (eta * (h * eta_inv));
    return fnorm(resid) / std::max(1.0, fnorm(h));
}

inline MetricResult metric_trivial(const CMat2& h, const Normalization& nn, Case c,
                                   Branch b, CircleSign circle = CircleSign::Plus,
                                   const Tolerances& tol = {}) {
    if (!case_is_trivial(c))
        throw CaseMismatch("metric_trivial: only Case1 and Case3 carry Q = 1");
    const EigenSystem es = eigenbasis(h, c, b, tol);
    const double f = circle_factor(circle);

    MetricResult r;
    r.case_label = c;
    r.branch = es.branch;
    r.circle = circle;
    r.q_kind = QKind::Identity;
    r.norm = nn;
    r.part_a = (f * nn.c0()) * xdag_sigma_x(h, es, 0, tol);
    r.part_b = (f * nn.c3()) * xdag_sigma_x(h, es, 3, tol);
    r.eta = r.part_a + r.part_b;
    r.sign = case_sign(c);
    r.hermitian = approx_eq(r.eta, adjoint(r.eta), tol);
    r.residual = verify_pseudo_hermiticity(h, r.eta, r.sign, tol);
    return r;
}

inline MetricResult metric_nontrivial(const CMat2& h, const Normalization& nn,
                                      const PhaseVector& pv, Case c, Branch b,
                                      CircleSign circle = CircleSign::Plus,
                                      const Tolerances& tol = {}) {
    if (case_is_trivial(c))
        throw CaseMismatch("metric_nontrivial: only Case2 and Case4 carry Q = P");
    const EigenSystem es = eigenbasis(h, c, b, tol);
    const CMat2 s1 = xdag_sigma_x(h, es, 1, tol);
    const CMat2 s2 = xdag_sigma_x(h, es, 2, tol);
    const cplx cp = std::cos(pv.phi);
    const cplx sp = std::sin(pv.phi);
    const double f = circle_factor(circle);

    MetricResult r;
    r.case_label = c;
    r.branch = es.branch;
    r.circle = circle;
    r.q_kind = QKind::Parity;
    r.phase = pv;
    r.norm = nn;
    r.part_a = (f * nn.c1()) * (cp * s1 + sp * s2);
    r.part_b = (f * nn.c2()) * (sp * s1 - cp * s2);
    r.eta = r.part_a + r.part_b;
    r.sign = case_sign(c);
    r.hermitian = approx_eq(r.eta, adjoint(r.eta), tol);
    r.residual = verify_pseudo_hermiticity(h, r.eta, r.sign, tol);
    return r;
}

// Dispatch on (kind, Q) and check the assembled parts against the
// defining product (NX)+ Q (NX) itself.
inline MetricResult metric_general(const CMat2& h, const Normalization& nn, QKind q,
                                   const PhaseVector& pv, HermiticityKind kind,
                                   Branch b, CircleSign circle = CircleSign::Plus,
                                   const Tolerances& tol = {}) {
    if (kind != HermiticityKind::PseudoHermitian &&
        kind != HermiticityKind::AntiPseudoHermitian)
        throw CaseMismatch("metric_general: kind must be pseudo or anti");
    const Case c = case_for(kind == HermiticityKind::PseudoHermitian,
                            q == QKind::Identity);
    const MetricResult r = (q == QKind::Identity)
                               ? metric_trivial(h, nn, c, b, circle, tol)
                               : metric_nontrivial(h, nn, pv, c, b, circle, tol);

    const EigenSystem es = eigenbasis(h, c, b, tol);
    const CMat2 nx = nn.matrix() * es.x;
    const CMat2 qm = (q == QKind::Identity) ? CMat2::identity() : pv.parity();
    const CMat2 direct = circle_factor(circle) * (adjoint(nx) * (qm * nx));
    if (!approx_eq(direct, r.eta, tol))
        throw Error("metric_general: assembly disagrees with (NX)+ Q (NX)");
    return r;
}

// det eta is fixed by the construction alone: det X = 1 and
// det(e.sigma) = -(e.e) = -1 give det eta = +|N1 N2|^2 for Q = 1 and
// -|N1 N2|^2 for Q = P, for either circle sign. The closed-form inverse
// is therefore the adjugate over that determinant.
inline CMat2 inverse_metric_trivial(const CMat2& h, const Normalization& nn, Case c,
                                    Branch b, CircleSign circle = CircleSign::Plus,
                                    const Tolerances& tol = {}) {
    const MetricResult r = metric_trivial(h, nn, c, b, circle, tol);
    return adjugate(r.eta) / std::norm(nn.n1 * nn.n2);
}

inline CMat2 inverse_metric_nontrivial(const CMat2& h, const Normalization& nn,
                                       const PhaseVector& pv, Case c, Branch b,
                                       CircleSign circle = CircleSign::Plus,
                                       const Tolerances& tol = {}) {
    if (!pv.real_angle()) {
        // The complex-angle inverse can be organized around the ratios
        // c2/c1 and c1/c2; keep that parameterization's domain.
        const double scale = std::max(1.0, std::norm(nn.n1) + std::norm(nn.n2));
        if (std::abs(nn.c1()) <= tol.eq_abs * scale ||
            std::abs(nn.c2()) <= tol.eq_abs * scale)
            throw DegenerateNormalizationRatio(
                "inverse_metric_nontrivial: N2* N1 +/- N1* N2 vanishes on a "
                "complex angle");
    }
    const MetricResult r = metric_nontrivial(h, nn, pv, c, b, circle, tol);
    return adjugate(r.eta) / (-std::norm(nn.n1 * nn.n2));
}

}  // namespace pherm
