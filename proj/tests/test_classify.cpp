#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace pherm;
using testutil::ghost;
using testutil::random_case_h;

namespace {

Case swapped(Case c) {
    switch (c) {
        case Case::Case1: return Case::Case3;
        case Case::Case2: return Case::Case4;
        case Case::Case3: return Case::Case1;
        case Case::Case4: return Case::Case2;
    }
    return c;
}

}  // namespace

TEST_CASE("Key quantities on pinned inputs", "[classify]") {
    {
        const KeyQuantities q = key_quantities(ghost(1, 2, 1));
        CHECK(approx_eq(q.sum, cplx(2)));
        CHECK(approx_eq(q.disc, cplx(-12)));
        CHECK(approx_eq(q.i_sum, cplx(0, 2)));
        CHECK(approx_eq(q.i_disc, cplx(12)));
    }
    {
        const KeyQuantities q = key_quantities(CMat2::diag(1, 2));
        CHECK(approx_eq(q.sum, cplx(3)));
        CHECK(approx_eq(q.disc, cplx(1)));
    }
    {
        // disc = 4(|gamma|^2 - eps^2) for the ghost family, any m
        std::mt19937_64 g(2001);
        for (int k = 0; k < 100; ++k) {
            const double m = testutil::urand(g, -2, 2);
            const double eps = testutil::urand(g, 0, 2);
            const cplx gamma = testutil::crand(g, 2.0);
            const KeyQuantities q = key_quantities(ghost(m, eps, gamma));
            CHECK(approx_eq(q.sum, cplx(2 * m)));
            CHECK(approx_eq(q.disc, cplx(4 * (std::norm(gamma) - eps * eps))));
        }
    }
}

TEST_CASE("Classification of pinned inputs", "[classify]") {
    {
        const Classification c = classify(ghost(1, 2, 1));
        CHECK(c.kind == HermiticityKind::PseudoHermitian);
        REQUIRE(c.pseudo_phase.has_value());
        CHECK(*c.pseudo_phase == PhaseKind::NonTrivial);
        CHECK_FALSE(c.anti_phase.has_value());
        CHECK(c.cases == std::vector<Case>{Case::Case2});
    }
    {
        const Classification c = classify(CMat2::diag(1, 2));
        CHECK(c.kind == HermiticityKind::PseudoHermitian);
        CHECK(*c.pseudo_phase == PhaseKind::Trivial);
        CHECK(c.cases == std::vector<Case>{Case::Case1});
    }
    {
        const Classification c = classify(CMat2::rows(cplx(0, 1), 1, 1, cplx(0, 1)));
        CHECK(c.kind == HermiticityKind::AntiPseudoHermitian);
        CHECK(*c.anti_phase == PhaseKind::NonTrivial);
        CHECK(c.cases == std::vector<Case>{Case::Case4});
    }
    {
        // traceless: both families at once, opposite phases
        const Classification c = classify(CMat2::rows(cplx(0, 0.5), 2, 0.5, cplx(0, -0.5)));
        CHECK(c.kind == HermiticityKind::Both);
        CHECK(*c.pseudo_phase == PhaseKind::Trivial);
        CHECK(*c.anti_phase == PhaseKind::NonTrivial);
        CHECK(c.cases == std::vector<Case>{Case::Case1, Case::Case4});
    }
    {
        const Classification c = classify(CMat2::rows(cplx(0, 0.5), -2, 0.5, cplx(0, -0.5)));
        CHECK(c.kind == HermiticityKind::Both);
        CHECK(c.cases == std::vector<Case>{Case::Case2, Case::Case3});
    }
    {
        // m = 0 ghost with |gamma| > eps: real spectrum and traceless
        const Classification c = classify(ghost(0, 1, 2));
        CHECK(c.kind == HermiticityKind::Both);
        CHECK(c.cases == std::vector<Case>{Case::Case1, Case::Case4});
    }
}

TEST_CASE("Hermitian matrices land in the trivial pseudo phase", "[classify]") {
    std::mt19937_64 g(2002);
    for (int k = 0; k < 200; ++k) {
        const double a = testutil::urand(g, -2, 2), d = testutil::urand(g, -2, 2);
        const cplx b = testutil::crand(g, 2.0);
        const CMat2 h = CMat2::rows(a, b, std::conj(b), d);
        REQUIRE(is_hermitian(h));
        const Classification c = classify(h);
        if (c.exceptional) continue;
        CHECK(c.admits(Case::Case1));
        CHECK(*c.pseudo_phase == PhaseKind::Trivial);
    }
}

TEST_CASE("Exceptional points are flagged and refuse case admission", "[classify]") {
    const CMat2 jordan = CMat2::rows(1, 1, 0, 1);
    const Classification c = classify(jordan);
    CHECK(c.exceptional);
    CHECK(c.kind == HermiticityKind::PseudoHermitian);
    CHECK(*c.pseudo_phase == PhaseKind::Exceptional);
    CHECK(c.cases.empty());
    CHECK_THROWS_AS(require_case(jordan, Case::Case1), ExceptionalPoint);

    // near-exceptional within the admission threshold
    const CMat2 near = CMat2::rows(1, 1, 1e-12, 1);
    CHECK(classify(near).exceptional);
}

TEST_CASE("Unclassifiable matrices throw with full diagnostics", "[classify]") {
    const CMat2 bad = CMat2::rows(cplx(1, 1), 0, 0, 2);
    try {
        classify(bad);
        FAIL("expected NotClassifiable");
    } catch (const NotClassifiable& e) {
        CHECK(e.diagnostics.kind == HermiticityKind::Neither);
        CHECK(e.diagnostics.cases.empty());
        CHECK(approx_eq(e.diagnostics.q.sum, cplx(3, 1)));
    }

    std::mt19937_64 g(2003);
    int rejected = 0;
    for (int k = 0; k < 100; ++k) {
        // complex trace with non-real disc: generically unclassifiable
        const CMat2 h = testutil::random_mat(g, 2.0);
        const KeyQuantities q = key_quantities(h);
        const bool sum_ok = std::abs(q.sum.imag()) < 1e-6 || std::abs(q.sum.real()) < 1e-6;
        const bool disc_ok = std::abs(q.disc.imag()) < 1e-6;
        if (sum_ok && disc_ok) continue;
        CHECK_THROWS_AS(classify(h), NotClassifiable);
        ++rejected;
    }
    CHECK(rejected > 50);
}

TEST_CASE("Multiplying by i swaps the two families", "[classify]") {
    std::mt19937_64 g(2004);
    for (Case c : {Case::Case1, Case::Case2, Case::Case3, Case::Case4}) {
        for (int k = 0; k < 100; ++k) {
            const CMat2 h = random_case_h(g, c);
            REQUIRE(classify(h).admits(c));
            const Classification ci = classify(cplx(0, 1) * h);
            CHECK(ci.admits(swapped(c)));
        }
    }
}

TEST_CASE("Classification is scale invariant well inside a regime", "[classify]") {
    std::mt19937_64 g(2005);
    for (Case c : {Case::Case1, Case::Case2, Case::Case3, Case::Case4}) {
        for (int k = 0; k < 50; ++k) {
            const CMat2 h = random_case_h(g, c);
            for (double s : {1e-3, 1e3}) {
                const Classification cs = classify(cplx(s) * h);
                CHECK(cs.admits(c));
                CHECK_FALSE(cs.exceptional);
            }
        }
    }
}

TEST_CASE("is_hermitian agrees with the adjoint within tolerance", "[classify]") {
    CHECK(is_hermitian(CMat2::rows(1, cplx(0, 1), cplx(0, -1), 2)));
    CHECK_FALSE(is_hermitian(CMat2::rows(1, 1, 0, 1)));
    CHECK_FALSE(is_hermitian(ghost(1, 2, 1)));
    CHECK(is_hermitian(ghost(1, 0, cplx(0.3, 0.4))));
}
