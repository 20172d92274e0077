#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace pherm;
using testutil::ghost;
using testutil::random_case_sample;
using testutil::urand;

namespace {

const Case all_cases[] = {Case::Case1, Case::Case2, Case::Case3, Case::Case4};
const Branch both_branches[] = {Branch::Plus, Branch::Minus};
const CircleSign both_circles[] = {CircleSign::Plus, CircleSign::Minus};

Normalization random_norm(std::mt19937_64& g, double lo = 0.2, double hi = 3.0) {
    auto draw = [&] {
        return std::polar(urand(g, lo, hi), urand(g, 0.0, 6.283185307179586));
    };
    return Normalization(draw(), draw());
}

MetricResult metric_for(const CMat2& h, const Normalization& nn, const PhaseVector& pv,
                        Case c, Branch b, CircleSign s) {
    return case_is_trivial(c) ? metric_trivial(h, nn, c, b, s)
                              : metric_nontrivial(h, nn, pv, c, b, s);
}

// Both eigenvalues of a Hermitian 2x2, ascending.
std::pair<double, double> herm_eigs(const CMat2& m) {
    const double tr = trace(m).real();
    const double d = det(m).real();
    const double gap = std::sqrt(std::max(0.0, tr * tr - 4.0 * d));
    return {(tr - gap) / 2.0, (tr + gap) / 2.0};
}

}  // namespace

TEST_CASE("Hermitian Hamiltonian gets the identity metric", "[metric]") {
    const CMat2 h = ghost(1.0, 0.0, cplx(0.8, 0.3));
    for (Branch b : both_branches) {
        const MetricResult r = metric_trivial(h, Normalization(), Case::Case1, b);
        CHECK(approx_eq(r.eta, CMat2::identity()));
        CHECK(approx_eq(r.part_b, CMat2::zero()));
        CHECK(r.hermitian);
        CHECK(r.residual < 1e-13);
    }
    const MetricResult g = metric_general(h, Normalization(), QKind::Identity,
                                          PhaseVector(), HermiticityKind::PseudoHermitian,
                                          Branch::Plus);
    CHECK(approx_eq(g.eta, CMat2::identity()));
    CHECK(g.sign == +1);
    CHECK(g.q_kind == QKind::Identity);
}

TEST_CASE("Pinned trivial-phase closed form on the ghost family", "[metric]") {
    // eta0 = c0 |gamma| / sqrt(|gamma|^2 - eps^2) *
    //        [[1, i gamma* eps / |gamma|^2], [-i gamma eps / |gamma|^2, 1]]
    std::mt19937_64 g(0x6d657472u);
    for (int i = 0; i < 200; ++i) {
        const double m = urand(g, -1.5, 1.5);
        const double eps = urand(g, 0.1, 0.9);
        const cplx gamma = std::polar(urand(g, 1.05, 3.0) * eps, urand(g, 0.0, 6.28));
        const Normalization nn = random_norm(g);

        const double g2 = std::norm(gamma);
        const double pref = std::sqrt(g2) / std::sqrt(g2 - eps * eps);
        const CMat2 expect =
            (nn.c0() * pref) * CMat2::rows(1.0, cplx(0, 1) * std::conj(gamma) * eps / g2,
                                           cplx(0, -1) * gamma * eps / g2, 1.0);

        const MetricResult r =
            metric_trivial(ghost(m, eps, gamma), nn, Case::Case1, Branch::Plus);
        CHECK(fnorm(r.part_a - expect) <= 1e-12 * fnorm(expect));
    }
}

TEST_CASE("Assembly equals the defining product (NX)+ Q (NX)", "[metric]") {
    std::mt19937_64 g(0x51646972u);
    for (Case c : all_cases) {
        for (Branch b : both_branches) {
            for (int i = 0; i < 100; ++i) {
                const CMat2 h = random_case_sample(g, c).h;
                const Normalization nn = random_norm(g);
                const PhaseVector pv(urand(g, -3.1, 3.1));
                const CircleSign s = (i % 2) ? CircleSign::Minus : CircleSign::Plus;
                const MetricResult r = metric_for(h, nn, pv, c, b, s);

                const EigenSystem es = eigenbasis(h, c, b);
                const CMat2 nx = nn.matrix() * es.x;
                const CMat2 q = case_is_trivial(c) ? CMat2::identity() : pv.parity();
                const CMat2 direct = circle_factor(s) * (adjoint(nx) * (q * nx));
                CHECK(fnorm(direct - r.eta) <= 1e-12 * std::max(1.0, fnorm(r.eta)));

                // the parts against their literal sandwiches
                const double f = circle_factor(s);
                const CMat2 pa =
                    case_is_trivial(c)
                        ? (f * nn.c0()) * (es.xdag * es.x)
                        : (f * nn.c1()) * (es.xdag * (pv.parity() * es.x));
                const CMat2 pb =
                    case_is_trivial(c)
                        ? (f * nn.c3()) * (es.xdag * (sigma(3) * es.x))
                        : (f * nn.c2()) * (es.xdag * (pv.parity_perp() * es.x));
                CHECK(approx_eq(r.part_a, pa));
                CHECK(approx_eq(r.part_b, pb));

                // dispatch agrees and performs the same check internally
                const HermiticityKind kind = case_is_pseudo(c)
                                                 ? HermiticityKind::PseudoHermitian
                                                 : HermiticityKind::AntiPseudoHermitian;
                const QKind qk = case_is_trivial(c) ? QKind::Identity : QKind::Parity;
                const MetricResult rg = metric_general(h, nn, qk, pv, kind, b, s);
                CHECK(approx_eq(rg.eta, r.eta));
                CHECK(rg.case_label == c);
            }
        }
    }
}

TEST_CASE("Closed-form sandwiches match the literal products", "[metric]") {
    std::mt19937_64 g(0x73647778u);
    for (Case c : all_cases) {
        for (Branch b : both_branches) {
            for (int i = 0; i < 60; ++i) {
                const CMat2 h = random_case_sample(g, c).h;
                const EigenSystem es = eigenbasis(h, c, b);
                for (int k = 0; k < 4; ++k) {
                    const CMat2 lhs = xdag_sigma_x(h, es, k);
                    const CMat2 rhs = es.xdag * (sigma(k) * es.x);
                    CHECK(fnorm(lhs - rhs) <= 1e-13 * std::max(1.0, fnorm(rhs)));
                    CHECK(approx_eq(lhs, adjoint(lhs)));
                }
            }
        }
    }
}

TEST_CASE("Defining relation holds across the family", "[metric]") {
    std::mt19937_64 g(0x64656669u);
    for (Case c : all_cases) {
        for (Branch b : both_branches) {
            for (CircleSign s : both_circles) {
                for (int i = 0; i < 60; ++i) {
                    const CMat2 h = random_case_sample(g, c).h;
                    const Normalization nn = random_norm(g);
                    const PhaseVector pv(urand(g, -3.1, 3.1));
                    const MetricResult r = metric_for(h, nn, pv, c, b, s);
                    CHECK(r.residual <= 1e-9);
                    CHECK(r.hermitian);
                    CHECK(verify_pseudo_hermiticity(h, r.eta, r.sign) == r.residual);
                }
            }
        }
    }
}

TEST_CASE("Determinant sign follows the kind of Q", "[metric]") {
    std::mt19937_64 g(0x64657473u);
    for (Case c : all_cases) {
        for (CircleSign s : both_circles) {
            for (int i = 0; i < 80; ++i) {
                const CMat2 h = random_case_sample(g, c).h;
                const Normalization nn = random_norm(g);
                const PhaseVector pv(urand(g, -3.1, 3.1));
                const MetricResult r = metric_for(h, nn, pv, c, Branch::Plus, s);

                const cplx d = det(r.eta);
                const double expect = std::norm(nn.n1 * nn.n2);
                CHECK(std::abs(d.imag()) <= 1e-10 * std::abs(d));
                if (case_is_trivial(c)) {
                    CHECK(d.real() > 0.0);
                    CHECK(std::abs(d.real() - expect) <= 1e-11 * expect);
                } else {
                    CHECK(d.real() < 0.0);
                    CHECK(std::abs(d.real() + expect) <= 1e-11 * expect);
                }
            }
        }
    }
}

TEST_CASE("Trivial phase with the plus circle is positive definite", "[metric]") {
    std::mt19937_64 g(0x706f7369u);
    for (Case c : {Case::Case1, Case::Case3}) {
        for (int i = 0; i < 150; ++i) {
            const CMat2 h = random_case_sample(g, c).h;
            const Normalization nn = random_norm(g, 0.1, 10.0);
            const MetricResult rp = metric_trivial(h, nn, c, Branch::Plus);
            const auto [lo, hi] = herm_eigs(rp.eta);
            CHECK(lo > 0.0);
            CHECK(hi >= lo);

            const MetricResult rm =
                metric_trivial(h, nn, c, Branch::Plus, CircleSign::Minus);
            CHECK(herm_eigs(rm.eta).second < 0.0);
            CHECK(fnorm(rm.eta + rp.eta) == 0.0);
        }
    }
}

TEST_CASE("Non-trivial metric is Hermitian exactly for a real angle", "[metric]") {
    std::mt19937_64 g(0x68657268u);
    for (Case c : {Case::Case2, Case::Case4}) {
        for (int i = 0; i < 60; ++i) {
            const CMat2 h = random_case_sample(g, c).h;
            const Normalization nn = random_norm(g);
            const double re = urand(g, -3.1, 3.1);

            const MetricResult real_r =
                metric_nontrivial(h, nn, PhaseVector(re), c, Branch::Plus);
            CHECK(real_r.hermitian);
            CHECK(fnorm(real_r.eta - adjoint(real_r.eta)) <=
                  1e-11 * std::max(1.0, fnorm(real_r.eta)));
            const auto [lo, hi] = herm_eigs(real_r.eta);
            CHECK(lo < 0.0);
            CHECK(hi > 0.0);

            const MetricResult cplx_r =
                metric_nontrivial(h, nn, PhaseVector(cplx(re, 0.4)), c, Branch::Plus);
            CHECK_FALSE(cplx_r.hermitian);
            CHECK(fnorm(cplx_r.eta - adjoint(cplx_r.eta)) > 1e-4);
            CHECK(cplx_r.residual <= 1e-9);
        }
    }
}

TEST_CASE("Equal normalizations at zero angle drop the odd part", "[metric]") {
    std::mt19937_64 g(0x65716e6fu);
    for (int i = 0; i < 40; ++i) {
        const CMat2 h = random_case_sample(g, Case::Case2).h;
        const cplx n = testutil::crand(g, 2.0) + cplx(3.0, 0);
        const MetricResult r = metric_nontrivial(h, Normalization(n, n), PhaseVector(),
                                                 Case::Case2, Branch::Plus);
        CHECK(fnorm(r.part_b) == 0.0);
        CHECK(approx_eq(r.eta, r.part_a));
    }
}

TEST_CASE("Rescaling N scales the metric quadratically", "[metric]") {
    std::mt19937_64 g(0x72657363u);
    for (Case c : all_cases) {
        const CMat2 h = random_case_sample(g, c).h;
        const Normalization nn = random_norm(g);
        const PhaseVector pv(urand(g, -3.1, 3.1));
        const double lam = urand(g, 0.3, 2.5);
        const Normalization scaled(lam * nn.n1, lam * nn.n2);

        const MetricResult r0 = metric_for(h, nn, pv, c, Branch::Plus, CircleSign::Plus);
        const MetricResult r1 =
            metric_for(h, scaled, pv, c, Branch::Plus, CircleSign::Plus);
        CHECK(approx_eq(r1.eta, (lam * lam) * r0.eta));
        CHECK(approx_eq(r1.part_a, (lam * lam) * r0.part_a));
        CHECK(approx_eq(r1.part_b, (lam * lam) * r0.part_b));
        CHECK(r1.residual <= 1e-12);
    }
}

TEST_CASE("Closed-form inverse round-trips in the trivial phase", "[metric]") {
    std::mt19937_64 g(0x696e7674u);
    for (Case c : {Case::Case1, Case::Case3}) {
        for (Branch b : both_branches) {
            for (CircleSign s : both_circles) {
                for (int i = 0; i < 50; ++i) {
                    const CMat2 h = random_case_sample(g, c).h;
                    const Normalization nn = random_norm(g);
                    const MetricResult r = metric_trivial(h, nn, c, b, s);
                    const CMat2 vi = inverse_metric_trivial(h, nn, c, b, s);
                    CHECK(fnorm(vi * r.eta - CMat2::identity()) <= 1e-12);
                    CHECK(fnorm(vi - inverse(r.eta)) <= 1e-11 * fnorm(vi));
                }
            }
        }
    }
}

TEST_CASE("Closed-form inverse round-trips in the non-trivial phase", "[metric]") {
    std::mt19937_64 g(0x696e766eu);
    for (Case c : {Case::Case2, Case::Case4}) {
        for (Branch b : both_branches) {
            for (int i = 0; i < 50; ++i) {
                const CMat2 h = random_case_sample(g, c).h;
                Normalization nn = random_norm(g);
                while (std::abs(nn.c1()) < 0.05 || std::abs(nn.c2()) < 0.05)
                    nn = random_norm(g);

                const PhaseVector real_pv(urand(g, -3.1, 3.1));
                const MetricResult r0 = metric_nontrivial(h, nn, real_pv, c, b);
                const CMat2 v0 = inverse_metric_nontrivial(h, nn, real_pv, c, b);
                CHECK(fnorm(v0 * r0.eta - CMat2::identity()) <= 1e-12);
                CHECK(fnorm(v0 - inverse(r0.eta)) <= 1e-10 * fnorm(v0));

                const PhaseVector cplx_pv(cplx(real_pv.phi.real(), 0.3));
                const MetricResult r1 = metric_nontrivial(h, nn, cplx_pv, c, b);
                const CMat2 v1 = inverse_metric_nontrivial(h, nn, cplx_pv, c, b);
                CHECK(fnorm(v1 * r1.eta - CMat2::identity()) <= 1e-12);
                CHECK(fnorm(v1 - inverse(r1.eta)) <= 1e-10 * fnorm(v1));
            }
        }
    }
}

TEST_CASE("Complex angle with a degenerate ratio is refused", "[metric]") {
    const CMat2 h = ghost(1.0, 2.0, 1.0);  // Case 2: |gamma| < eps
    const PhaseVector pv(cplx(0.7, 0.3));

    // real N1, N2: c2 = Im(N1* N2) = 0
    CHECK_THROWS_AS(
        inverse_metric_nontrivial(h, Normalization(1.0, 1.5), pv, Case::Case2, Branch::Plus),
        DegenerateNormalizationRatio);
    // N2 = i N1: c1 = Re(N1* N2) = 0
    CHECK_THROWS_AS(
        inverse_metric_nontrivial(h, Normalization(1.0, cplx(0, 1)), pv, Case::Case2,
                                  Branch::Plus),
        DegenerateNormalizationRatio);

    // the same normalizations are fine on a real angle
    const PhaseVector real_pv(0.7);
    const CMat2 v = inverse_metric_nontrivial(h, Normalization(1.0, 1.5), real_pv,
                                              Case::Case2, Branch::Plus);
    const MetricResult r = metric_nontrivial(h, Normalization(1.0, 1.5), real_pv,
                                             Case::Case2, Branch::Plus);
    CHECK(fnorm(v * r.eta - CMat2::identity()) <= 1e-12);
}

TEST_CASE("Pinned diagonal Hamiltonian", "[metric]") {
    const CMat2 h = CMat2::diag(2.0, -1.0);
    const Normalization nn(2.0, 1.0);

    const MetricResult rp = metric_trivial(h, nn, Case::Case1, Branch::Plus);
    CHECK(approx_eq(rp.eta, CMat2::diag(4.0, 1.0)));
    CHECK(approx_eq(inverse_metric_trivial(h, nn, Case::Case1, Branch::Plus),
                    CMat2::diag(0.25, 1.0)));

    // opposite labeling runs through the permutation frame
    const MetricResult rm = metric_trivial(h, nn, Case::Case1, Branch::Minus);
    CHECK(rm.branch == Branch::Minus);
    CHECK(approx_eq(rm.eta, CMat2::diag(1.0, 4.0)));
    CHECK(rm.residual < 1e-14);
}

TEST_CASE("Residual flags a wrong metric", "[metric]") {
    const CMat2 h = ghost(1.0, 2.0, 1.0);
    const double expect = fnorm(adjoint(h) - h) / std::max(1.0, fnorm(h));
    CHECK(expect > 1.0);
    CHECK(std::abs(verify_pseudo_hermiticity(h, CMat2::identity(), +1) - expect) <= 1e-12);
    CHECK(std::abs(expect - 4.0 * std::sqrt(2.0) / fnorm(h)) <= 1e-12);
}

TEST_CASE("Metric misuse is rejected", "[metric]") {
    CHECK_THROWS_AS(Normalization(0.0, 1.0), SingularMatrix);
    CHECK_THROWS_AS(Normalization(1.0, 0.0), SingularMatrix);
    CHECK_THROWS_AS(Normalization(cplx(std::nan(""), 0), 1.0), NonFinite);

    const CMat2 case2 = ghost(1.0, 2.0, 1.0);
    CHECK_THROWS_AS(metric_trivial(case2, Normalization(), Case::Case2, Branch::Plus),
                    CaseMismatch);
    CHECK_THROWS_AS(metric_trivial(case2, Normalization(), Case::Case1, Branch::Plus),
                    CaseMismatch);
    CHECK_THROWS_AS(metric_nontrivial(case2, Normalization(), PhaseVector(), Case::Case1,
                                      Branch::Plus),
                    CaseMismatch);
    CHECK_THROWS_AS(metric_general(case2, Normalization(), QKind::Identity, PhaseVector(),
                                   HermiticityKind::PseudoHermitian, Branch::Plus),
                    CaseMismatch);
    CHECK_THROWS_AS(metric_general(case2, Normalization(), QKind::Identity, PhaseVector(),
                                   HermiticityKind::Both, Branch::Plus),
                    CaseMismatch);

    // exceptional point: |gamma| = eps collapses the splitting
    CHECK_THROWS_AS(metric_trivial(ghost(1.0, 1.0, 1.0), Normalization(), Case::Case1,
                                   Branch::Plus),
                    ExceptionalPoint);

    const EigenSystem es = eigenbasis(case2, Case::Case2, Branch::Plus);
    CHECK_THROWS_AS(xdag_sigma_x(case2, es, 4), Error);
}
