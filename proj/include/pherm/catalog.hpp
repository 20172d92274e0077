#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "metric.hpp"

namespace pherm {

// Worked two-level families. Each entry couples one concrete Hamiltonian
// shape with its metric family in tabulated closed form, the eigenvalue
// displays and the admission predicates. The tables are kept
// block-for-block as published for these models, so every entry doubles
// as an independent regression oracle for the constructive builders: a
// transcription slip surfaces as an equivalence failure instead of
// silently matching. Sign adjustments made while validating the tables
// against (NX)+ Q (NX) are confined to explicit factors in the code.
struct CatalogEntry {
    std::string name;
    std::vector<std::pair<std::string, cplx>> params;
    CMat2 h;
    std::string regime;           // admission predicates, spelled out
    std::vector<Case> admitted;   // cases the given parameters fall into
    std::vector<Case> tabulated;  // subset of admitted with a closed form

    // Tabulated eta. Signature mirrors the metric constructors; the
    // parity angle is read for the non-trivial cases only.
    std::function<CMat2(Case, const Normalization&, const PhaseVector&, Branch,
                        CircleSign)>
        oracle_metric;
    // Displayed eigenvalue on the given branch.
    std::function<cplx(Case, Branch)> eigenvalue;

    bool admits(Case c) const {
        return std::find(admitted.begin(), admitted.end(), c) != admitted.end();
    }
    bool tabulates(Case c) const {
        return std::find(tabulated.begin(), tabulated.end(), c) != tabulated.end();
    }
};

namespace catalog_detail {

inline double branch_factor(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

inline void require_case(const char* name, const std::vector<Case>& tabulated,
                         Case c) {
    if (std::find(tabulated.begin(), tabulated.end(), c) == tabulated.end())
        throw CaseMismatch(std::string("catalog ") + name + ": case " +
                           std::to_string(static_cast<int>(c)) +
                           " has no tabulated form for these parameters");
}

// The anti cases ask for a purely imaginary trace; mirror the
// classifier's scale-relative test so admission agrees with classify.
inline bool trace_vanishes(double re_tr, const CMat2& h) {
    return std::abs(re_tr) <=
           Tolerances{}.classify_scale * std::max(1.0, fnorm(h));
}

}  // namespace catalog_detail

// Two modes with bare masses m -/+ i eps coupled by gamma. Cases 1/4
// live at |gamma|^2 > eps^2, cases 2/3 at eps^2 > |gamma|^2; the anti
// cases 3/4 additionally need m = 0. The tables break at gamma = 0
// (prefactors 1/|gamma|), although the constructive metric is fine there.
inline CatalogEntry complex_ghost(double m, double eps, cplx gamma) {
    if (!std::isfinite(m) || !std::isfinite(eps) || !is_finite(gamma))
        throw NonFinite("complex-ghost: parameters must be finite");

    CatalogEntry e;
    e.name = "complex-ghost";
    e.params = {{"m", m}, {"eps", eps}, {"gamma", gamma}};
    e.h = CMat2::rows(cplx(m, -eps), std::conj(gamma), gamma, cplx(m, eps));
    e.regime =
        "cases 1/4: |gamma|^2 > eps^2; cases 2/3: eps^2 > |gamma|^2; "
        "cases 3/4 additionally require m = 0";

    const double g2 = std::norm(gamma);
    const double e2 = eps * eps;
    const bool anti = catalog_detail::trace_vanishes(2.0 * m, e.h);
    if (g2 > e2) e.admitted.push_back(Case::Case1);
    if (e2 > g2) e.admitted.push_back(Case::Case2);
    if (anti && e2 > g2) e.admitted.push_back(Case::Case3);
    if (anti && g2 > e2) e.admitted.push_back(Case::Case4);
    e.tabulated = e.admitted;

    const std::vector<Case> tab = e.tabulated;
    e.oracle_metric = [eps, gamma, tab](Case c, const Normalization& nn,
                                        const PhaseVector& pv, Branch b,
                                        CircleSign circle) -> CMat2 {
        catalog_detail::require_case("complex-ghost", tab, c);
        const double gn = std::abs(gamma);
        if (gn == 0.0)
            throw SingularMatrix("complex-ghost: tables need gamma != 0");
        const double kap = catalog_detail::branch_factor(b);
        const double enc = circle_factor(circle);
        const cplx gc = std::conj(gamma);

        const CMat2 m_gamma = CMat2::rows(0.0, gc / gn, gamma / gn, 0.0);
        const CMat2 m_zero =
            CMat2::rows(1.0, cplx(0, 1) * gc * eps / (gn * gn),
                        cplx(0, -1) * gamma * eps / (gn * gn), 1.0);
        const CMat2 m_eps =
            CMat2::rows(eps, cplx(0, 1) * gc, cplx(0, -1) * gamma, eps);

        // in-plane components of the parity direction along/against gamma
        const cplx ca = std::cos(pv.phi) * gamma.real() +
                        std::sin(pv.phi) * gamma.imag();
        const cplx cb = std::sin(pv.phi) * gamma.real() -
                        std::cos(pv.phi) * gamma.imag();

        switch (c) {
            case Case::Case1: {
                const double w = std::sqrt(std::norm(gamma) - eps * eps);
                return enc * (nn.c0() * (gn / w) * m_zero +
                              kap * nn.c3() * m_gamma);
            }
            case Case::Case2: {
                const double wp = std::sqrt(eps * eps - std::norm(gamma));
                const CMat2 br1 = (ca / gn) * m_gamma + (kap / wp) * cb * m_zero;
                const CMat2 br2 = (cb / gn) * m_gamma - (kap / wp) * ca * m_zero;
                // the tabulated frame scalar squares to (w' - kap eps)/(2w'),
                // negative on the upper branch; restoring |.|^2 costs -kap
                return (enc * -kap) * (nn.c1() * br1 + nn.c2() * br2);
            }
            case Case::Case3: {
                const double wp = std::sqrt(eps * eps - std::norm(gamma));
                return enc *
                       ((nn.c0() / wp) * m_eps - kap * nn.c3() * sigma(3));
            }
            default: {
                const double w = std::sqrt(std::norm(gamma) - eps * eps);
                const CMat2 br1 =
                    (1.0 / gn) * ((-cb / w) * m_eps - kap * ca * sigma(3));
                const CMat2 br2 =
                    (1.0 / gn) * ((ca / w) * m_eps - kap * cb * sigma(3));
                return enc * (nn.c1() * br1 + nn.c2() * br2);
            }
        }
    };
    e.eigenvalue = [m, eps, gamma, tab](Case c, Branch b) -> cplx {
        catalog_detail::require_case("complex-ghost", tab, c);
        const double kap = catalog_detail::branch_factor(b);
        const double g2l = std::norm(gamma);
        const double e2l = eps * eps;
        switch (c) {
            case Case::Case1: return m + kap * std::sqrt(g2l - e2l);
            case Case::Case2: return cplx(m, kap * std::sqrt(e2l - g2l));
            case Case::Case3: return cplx(0.0, kap * std::sqrt(e2l - g2l));
            default: return kap * std::sqrt(g2l - e2l);
        }
    };
    return e;
}

// Asymmetric hopping model with a complex-rotated diagonal. Pseudo for
// every real parameter set; anti needs r cos(theta) = 0, reached either
// at r = 0 or at theta = pi/2 + ell pi, where the alternating sign
// (-1)^ell enters the tables through the optional integer ell (it must
// match sign(sin theta) whenever r != 0). Tables carry 1/(s t) and break
// at s t = 0.
inline CatalogEntry bender_das(double r, double theta, double s, double t,
                               double phi, long ell = 0) {
    if (!std::isfinite(r) || !std::isfinite(theta) || !std::isfinite(s) ||
        !std::isfinite(t) || !std::isfinite(phi))
        throw NonFinite("bender-das: parameters must be finite");

    CatalogEntry e;
    e.name = "bender-das";
    e.params = {{"r", r},     {"theta", theta}, {"s", s},
                {"t", t},     {"phi", phi},     {"ell", cplx(double(ell), 0.0)}};
    const cplx eip = std::polar(1.0, phi);
    const cplx eim = std::conj(eip);
    e.h = CMat2::rows(r * std::polar(1.0, theta), s * eip, t * eim,
                      r * std::polar(1.0, -theta));
    e.regime =
        "case 1: s t > (r sin theta)^2; case 2: (r sin theta)^2 > s t; "
        "cases 3/4 require r cos theta = 0 and split on r^2 >< s t";

    const double rs = r * std::sin(theta);
    const bool anti = catalog_detail::trace_vanishes(2.0 * r * std::cos(theta), e.h);
    if (s * t > rs * rs) e.admitted.push_back(Case::Case1);
    if (rs * rs > s * t) e.admitted.push_back(Case::Case2);
    if (anti && r * r > s * t) e.admitted.push_back(Case::Case3);
    if (anti && s * t > r * r) e.admitted.push_back(Case::Case4);
    e.tabulated = e.admitted;

    const double lsign = (std::abs(ell) % 2 == 0) ? 1.0 : -1.0;
    const std::vector<Case> tab = e.tabulated;
    e.oracle_metric = [r, theta, s, t, phi, lsign, eip, eim, tab](
                          Case c, const Normalization& nn,
                          const PhaseVector& pv, Branch b,
                          CircleSign circle) -> CMat2 {
        catalog_detail::require_case("bender-das", tab, c);
        if (s * t == 0.0)
            throw SingularMatrix("bender-das: tables need s t != 0");
        if (!case_is_pseudo(c) && r != 0.0 &&
            std::abs(std::sin(theta) - lsign) > 1e-9)
            throw CaseMismatch(
                "bender-das: ell does not match the alternating branch of theta");
        const double kap = catalog_detail::branch_factor(b);
        const double enc = circle_factor(circle);
        const double rs = r * std::sin(theta);

        const CMat2 sb = CMat2::rows(0.0, eip, eim, 0.0);
        const CMat2 tb = CMat2::rows(t, cplx(0, -1) * rs * eip,
                                     cplx(0, 1) * rs * eim, s);
        const CMat2 db = CMat2::rows(t, 0.0, 0.0, -s);
        const CMat2 rb = CMat2::rows(lsign * r * t, cplx(0, -1) * s * t * eip,
                                     cplx(0, 1) * s * t * eim, lsign * r * s);
        const cplx cab = std::cos(pv.phi + phi);
        const cplx cbb = std::sin(pv.phi + phi);

        switch (c) {
            case Case::Case1: {
                const double w1 = std::sqrt(s * t - rs * rs);
                const double pref = std::sqrt(s * t / (w1 * w1));
                const CMat2 b0 = (s + t) / (2 * s * t) * tb +
                                 kap * (s - t) / (2 * s * t) * w1 * sb;
                const CMat2 b3 = (s - t) / (2 * s * t) * tb +
                                 kap * (s + t) / (2 * s * t) * w1 * sb;
                return enc * pref * (nn.c0() * b0 + nn.c3() * b3);
            }
            case Case::Case2: {
                const double w2 = std::sqrt(rs * rs - s * t);
                // tabulated frame scalar squares to (w2 + kap r sin theta)
                // / (2 w2); restore |.|^2 where that is negative
                const double flip = (w2 + kap * rs) >= 0.0 ? 1.0 : -1.0;
                const CMat2 br1 = cab * sb + (kap / w2) * cbb * tb;
                const CMat2 br2 = cbb * sb - (kap / w2) * cab * tb;
                return (enc * flip) * (nn.c1() * br1 + nn.c2() * br2);
            }
            case Case::Case3: {
                const double w3 = std::sqrt(r * r - s * t);
                const double flip = (w3 + kap * lsign * r) >= 0.0 ? 1.0 : -1.0;
                const CMat2 b0 = (s - t) / (2 * s * t) * db +
                                 kap * (s + t) / (2 * s * t) / w3 * rb;
                const CMat2 b3 = (s + t) / (2 * s * t) * db +
                                 kap * (s - t) / (2 * s * t) / w3 * rb;
                return (enc * flip) * (nn.c0() * b0 + nn.c3() * b3);
            }
            default: {
                const double w4 = std::sqrt(s * t - r * r);
                const double pref = std::sqrt(s * t / (w4 * w4)) / (s * t);
                const CMat2 br1 = -kap * cab * w4 * db + cbb * rb;
                const CMat2 br2 = -kap * cbb * w4 * db - cab * rb;
                return enc * pref * (nn.c1() * br1 + nn.c2() * br2);
            }
        }
    };
    e.eigenvalue = [r, theta, s, t, tab](Case c, Branch b) -> cplx {
        catalog_detail::require_case("bender-das", tab, c);
        const double kap = catalog_detail::branch_factor(b);
        const double rs = r * std::sin(theta);
        const double rc = r * std::cos(theta);
        switch (c) {
            case Case::Case1: return rc + kap * std::sqrt(s * t - rs * rs);
            case Case::Case2:
                return cplx(rc, kap * std::sqrt(rs * rs - s * t));
            case Case::Case3:
                return cplx(0.0, kap * std::sqrt(r * r - s * t));
            default: return kap * std::sqrt(s * t - r * r);
        }
    };
    return e;
}

// Four-parameter family interpolating the symmetric u = 0 model and its
// asymmetric extension. Pseudo everywhere; anti at r = 0. Cases 1/4
// live at t^2 + u^2 > s^2, cases 2/3 at the reverse.
inline CatalogEntry bmw_mostafazadeh(double r, double s, double t, double u,
                                     double phi) {
    if (!std::isfinite(r) || !std::isfinite(s) || !std::isfinite(t) ||
        !std::isfinite(u) || !std::isfinite(phi))
        throw NonFinite("bmw-mostafazadeh: parameters must be finite");

    CatalogEntry e;
    e.name = "bmw-mostafazadeh";
    e.params = {{"r", r}, {"s", s}, {"t", t}, {"u", u}, {"phi", phi}};
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    const cplx d(t * cp, -s * sp);
    e.h = CMat2::rows(r + d, cplx(0, 1) * (s * cp - u) + t * sp,
                      cplx(0, 1) * (s * cp + u) + t * sp, r - d);
    e.regime =
        "cases 1/4: t^2 + u^2 > s^2; cases 2/3: s^2 > t^2 + u^2; "
        "cases 3/4 additionally require r = 0";

    const double tu2 = t * t + u * u;
    const double s2 = s * s;
    const bool anti = catalog_detail::trace_vanishes(2.0 * r, e.h);
    if (tu2 > s2) e.admitted.push_back(Case::Case1);
    if (s2 > tu2) e.admitted.push_back(Case::Case2);
    if (anti && s2 > tu2) e.admitted.push_back(Case::Case3);
    if (anti && tu2 > s2) e.admitted.push_back(Case::Case4);
    e.tabulated = e.admitted;

    const std::vector<Case> tab = e.tabulated;
    e.oracle_metric = [s, t, u, cp, sp, tab](Case c, const Normalization& nn,
                                             const PhaseVector& pv, Branch b,
                                             CircleSign circle) -> CMat2 {
        catalog_detail::require_case("bmw-mostafazadeh", tab, c);
        const double kap = catalog_detail::branch_factor(b);
        const double enc = circle_factor(circle);
        // the tabulated frame normalization can vanish inside the regime
        // (both denominator terms zero on one branch); refuse rather than
        // hand back an infinite table
        const auto checked = [](double dc) {
            if (dc == 0.0)
                throw SingularMatrix(
                    "bmw-mostafazadeh: tabulated frame normalization vanishes "
                    "for these parameters on this branch");
            return dc;
        };

        const CMat2 mst = CMat2::rows(s, cplx(0, t), cplx(0, -t), s);
        const CMat2 mts = CMat2::rows(t, cplx(0, s), cplx(0, -s), t);
        const CMat2 mtu = CMat2::rows(t * t + u * u, cplx(0, s * t),
                                      cplx(0, -s * t), t * t + u * u);
        const CMat2 msu = CMat2::rows(t * s, cplx(0, u * u - s * s),
                                      cplx(0, s * s - u * u), t * s);
        const CMat2 pb = CMat2::rows(cp, sp, sp, -cp);
        const CMat2 pbq = CMat2::rows(-sp, cp, cp, sp);
        const cplx cv = std::cos(pv.phi);
        const cplx sv = std::sin(pv.phi);

        switch (c) {
            case Case::Case1: {
                const double w = std::sqrt(t * t + u * u - s * s);
                const double dc = checked(
                    std::sqrt((kap * w + t * cp) * (kap * w + t * cp) +
                              s * sp * s * sp));
                const CMat2 b0 = mtu + s * u * pb + kap * cp * w * mts;
                const CMat2 b3 = cp * ((t * t - s * s) * pb - u * mst) +
                                 kap * w * (t * pb + u * sigma(2));
                return enc / (w * dc) * (nn.c0() * b0 + nn.c3() * b3);
            }
            case Case::Case2: {
                const double wp = std::sqrt(s * s - t * t - u * u);
                const double dc = checked(
                    std::sqrt((kap * wp - s * sp) * (kap * wp - s * sp) +
                              t * cp * t * cp));
                const CMat2 bk1 = sp * (u * mst - (t * t - s * s) * pb) -
                                  kap * wp * (u * CMat2::identity() + s * pb);
                // the s,u block of the published second bracket carries an
                // inverted off-diagonal; restored against (NX)+ Q (NX)
                const CMat2 bk2 =
                    transpose(msu) + t * u * pb - kap * sp * wp * mts;
                return enc / (wp * dc) *
                       (nn.c1() * (cv * bk1 - sv * bk2) +
                        nn.c2() * (sv * bk1 + cv * bk2));
            }
            case Case::Case3: {
                const double wp = std::sqrt(s * s - t * t - u * u);
                const double dc = checked(
                    std::sqrt((kap * wp - s * sp) * (kap * wp - s * sp) +
                              t * cp * t * cp));
                const CMat2 b0 =
                    s * mst + s * u * pb - kap * wp * (sp * mst + u * sigma(1));
                const CMat2 b3 = (s * s - t * t - u * u) * sigma(3) +
                                 cp * ((t * t - s * s) * pb - u * mst) +
                                 kap * s * wp * pbq;
                return enc / (wp * dc) * (nn.c0() * b0 + nn.c3() * b3);
            }
            default: {
                const double w = std::sqrt(t * t + u * u - s * s);
                const double dc = checked(
                    std::sqrt((kap * w + t * cp) * (kap * w + t * cp) +
                              s * sp * s * sp));
                const CMat2 bk1 = u * (sp * mst + u * sigma(1)) +
                                  (cp * (t * t - s * s) + kap * t * w) * pbq;
                const CMat2 bk2 = t * mst + t * u * pb +
                                  kap * w * (cp * mst + u * sigma(3));
                return enc / (w * dc) *
                       (nn.c1() * (cv * bk1 - sv * bk2) +
                        nn.c2() * (sv * bk1 + cv * bk2));
            }
        }
    };
    e.eigenvalue = [r, s, t, u, tab](Case c, Branch b) -> cplx {
        catalog_detail::require_case("bmw-mostafazadeh", tab, c);
        const double kap = catalog_detail::branch_factor(b);
        const double tu2l = t * t + u * u;
        const double s2l = s * s;
        switch (c) {
            case Case::Case1: return r + kap * std::sqrt(tu2l - s2l);
            case Case::Case2: return cplx(r, kap * std::sqrt(s2l - tu2l));
            case Case::Case3: return cplx(0.0, kap * std::sqrt(s2l - tu2l));
            default: return kap * std::sqrt(tu2l - s2l);
        }
    };
    return e;
}

// Charge-doubled free mode at squared momentum p2 with mass m. The
// trace vanishes identically, so both case 1 and case 4 admit, but only
// the case-1 table is published: eta = c0 sigma3 H / omega +/- c3 sigma3
// with omega = sqrt(p2 + m^2).
inline CatalogEntry feshbach_villars(double m, double p2) {
    if (!std::isfinite(m) || !std::isfinite(p2))
        throw NonFinite("feshbach-villars: parameters must be finite");
    if (m <= 0.0) throw Error("feshbach-villars: m must be positive");
    if (p2 < 0.0) throw Error("feshbach-villars: p2 must be non-negative");

    CatalogEntry e;
    e.name = "feshbach-villars";
    e.params = {{"m", m}, {"p2", p2}};
    const double q = p2 / (2.0 * m);
    e.h = CMat2::rows(m + q, q, -q, -(m + q));
    e.regime = "case 1 for all m > 0, p2 >= 0; case 4 admits too "
               "(the trace vanishes identically) but carries no table";
    e.admitted = {Case::Case1, Case::Case4};
    e.tabulated = {Case::Case1};

    const CMat2 h = e.h;
    const std::vector<Case> tab = e.tabulated;
    e.oracle_metric = [m, p2, h, tab](Case c, const Normalization& nn,
                                      const PhaseVector&, Branch b,
                                      CircleSign circle) -> CMat2 {
        catalog_detail::require_case("feshbach-villars", tab, c);
        const double kap = catalog_detail::branch_factor(b);
        const double enc = circle_factor(circle);
        const double omega = std::sqrt(p2 + m * m);
        return enc * (nn.c0() / omega * (sigma(3) * h) +
                      kap * nn.c3() * sigma(3));
    };
    e.eigenvalue = [m, p2, tab](Case c, Branch b) -> cplx {
        catalog_detail::require_case("feshbach-villars", tab, c);
        return catalog_detail::branch_factor(b) * std::sqrt(p2 + m * m);
    };
    return e;
}

// Minisuperspace toy model with eigenvalues +/- e^tau. Requires
// Im tau = ell pi; the parameters then admit cases 1 and 4
// simultaneously, with the case-1 table published.
inline CatalogEntry znojil_wdw(cplx tau) {
    if (!is_finite(tau)) throw NonFinite("znojil-wdw: tau must be finite");
    const double pi = std::acos(-1.0);
    const long ell = std::lround(tau.imag() / pi);
    if (std::abs(tau.imag() - double(ell) * pi) >
        1e-9 * std::max(1.0, std::abs(tau)))
        throw InvalidImaginaryPart(
            "znojil-wdw: Im tau must be an integer multiple of pi");

    CatalogEntry e;
    e.name = "znojil-wdw";
    e.params = {{"tau", tau}};
    e.h = CMat2::rows(0.0, std::exp(2.0 * tau), 1.0, 0.0);
    e.regime = "cases 1 and 4 for every tau with Im tau = ell pi";
    e.admitted = {Case::Case1, Case::Case4};
    e.tabulated = {Case::Case1};

    const double lsign = (std::abs(ell) % 2 == 0) ? 1.0 : -1.0;
    const std::vector<Case> tab = e.tabulated;
    // The published branch label tracks the sign of E / e^tau, so it
    // compounds the constructive branch with the sheet factor (-1)^ell.
    // Composing the two, the tabulated +/- (-1)^ell collapses to the
    // branch factor alone and the eigenvalue picks up (-1)^ell.
    e.oracle_metric = [tau, tab](Case c, const Normalization& nn,
                                 const PhaseVector&, Branch b,
                                 CircleSign circle) -> CMat2 {
        catalog_detail::require_case("znojil-wdw", tab, c);
        const double kap = catalog_detail::branch_factor(b);
        const double enc = circle_factor(circle);
        const double er = std::exp(tau.real());
        const CMat2 b1 = CMat2::rows(1.0 / er, kap, kap, er);
        const CMat2 b2 = CMat2::rows(1.0 / er, -kap, -kap, er);
        return enc * (std::norm(nn.n1) * er / 2.0 * b1 +
                      std::norm(nn.n2) / er / 2.0 * b2);
    };
    e.eigenvalue = [tau, lsign, tab](Case c, Branch b) -> cplx {
        catalog_detail::require_case("znojil-wdw", tab, c);
        return catalog_detail::branch_factor(b) * lsign * std::exp(tau);
    };
    return e;
}

// Normalization moduli that reproduce the Hermitian comparison metric
// [[e^{-re_tau}, beta],[beta, e^{re_tau}]] within the circle-plus
// family of the minisuperspace model. Positivity of |N1|^2 and |N2|^2
// restricts beta to |beta| < 1. The published recovery carries the
// same +/- (-1)^ell compound as the metric table; in terms of the
// constructive branch it is ell-independent.
inline Normalization znojil_normalization(double beta, double re_tau,
                                          Branch b = Branch::Plus) {
    if (!std::isfinite(re_tau))
        throw NonFinite("znojil-wdw: re_tau must be finite");
    if (!(std::abs(beta) < 1.0))
        throw Error(
            "znojil-wdw: |beta| < 1 is required for positive |N1|^2, |N2|^2");
    const double kap = catalog_detail::branch_factor(b);
    const double n1sq = (1.0 + kap * beta) * std::exp(-re_tau);
    const double n2sq = (1.0 - kap * beta) * std::exp(re_tau);
    return Normalization(std::sqrt(n1sq), std::sqrt(n2sq));
}

struct ParamSpec {
    std::string name;
    bool complex_valued;
};

struct CatalogSchema {
    std::string name;
    std::vector<ParamSpec> params;
};

// Stable enumeration for discovery. lee-wick appears here for listing
// purposes even though the four-dimensional model is not a CatalogEntry.
inline const std::vector<CatalogSchema>& catalog_list() {
    static const std::vector<CatalogSchema> entries = {
        {"complex-ghost", {{"m", false}, {"eps", false}, {"gamma", true}}},
        {"bender-das",
         {{"r", false},
          {"theta", false},
          {"s", false},
          {"t", false},
          {"phi", false},
          {"ell", false}}},
        {"bmw-mostafazadeh",
         {{"r", false}, {"s", false}, {"t", false}, {"u", false}, {"phi", false}}},
        {"feshbach-villars", {{"m", false}, {"p2", false}}},
        {"znojil-wdw", {{"tau", true}}},
        {"lee-wick", {{"omega", true}}},
    };
    return entries;
}

inline const CatalogSchema& catalog_schema(const std::string& name) {
    for (const auto& s : catalog_list())
        if (s.name == name) return s;
    throw NotFound("catalog: unknown entry '" + name + "'");
}

// Name-driven construction for the CLI. bender-das accepts five values
// with ell defaulting to 0.
inline CatalogEntry catalog_build(const std::string& name,
                                  const std::vector<cplx>& values) {
    const CatalogSchema& schema = catalog_schema(name);
    if (name == "lee-wick")
        throw Error(
            "catalog: lee-wick is four-dimensional; use the dedicated "
            "lee-wick interface");
    const bool short_bd = name == "bender-das" && values.size() + 1 == schema.params.size();
    if (values.size() != schema.params.size() && !short_bd)
        throw Error("catalog: " + name + " takes " +
                    std::to_string(schema.params.size()) + " parameters");
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!schema.params[i].complex_valued && values[i].imag() != 0.0)
            throw Error("catalog: parameter '" + schema.params[i].name +
                        "' must be real");

    if (name == "complex-ghost")
        return complex_ghost(values[0].real(), values[1].real(), values[2]);
    if (name == "bender-das")
        return bender_das(values[0].real(), values[1].real(), values[2].real(),
                          values[3].real(), values[4].real(),
                          short_bd ? 0L : std::lround(values[5].real()));
    if (name == "bmw-mostafazadeh")
        return bmw_mostafazadeh(values[0].real(), values[1].real(),
                                values[2].real(), values[3].real(),
                                values[4].real());
    if (name == "feshbach-villars")
        return feshbach_villars(values[0].real(), values[1].real());
    return znojil_wdw(values[0]);
}

}  // namespace pherm
