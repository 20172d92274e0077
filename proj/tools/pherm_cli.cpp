// Command-line front end. Subcommands wrap one library call each and
// speak the JSON/CSV wire schemas; exit codes separate physics failures
// (2: the input is outside a valid regime or a residual is too large)
// from plumbing failures (3: unreadable input, malformed flags or JSON).

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pherm/json_io.hpp"

namespace {

using namespace pherm;

struct GlobalOpts {
    double tol_abs = Tolerances{}.eq_abs;
    double tol_rel = Tolerances{}.eq_rel;
    bool as_json = false;
    bool as_csv = false;
    std::string input;
    std::string output;

    Tolerances tol() const { return Tolerances{tol_abs, tol_rel, 1e-9}; }
};

// "re" or "re,im"
cplx parse_complex(const std::string& s, const std::string& field) {
    const auto comma = s.find(',');
    const auto part = [&](const std::string& t) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw ParseError(field + ": bad number '" + t + "'");
        }
        if (used != t.size())
            throw ParseError(field + ": bad number '" + t + "'");
        return v;
    };
    if (comma == std::string::npos) return cplx(part(s), 0.0);
    return cplx(part(s.substr(0, comma)), part(s.substr(comma + 1)));
}

// "lo:hi:n", n evenly spaced points inclusive of both ends
std::vector<double> parse_grid_axis(const std::string& s, const std::string& field) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3)
        throw ParseError(field + ": expected lo:hi:n, got '" + s + "'");
    const double lo = parse_complex(parts[0], field).real();
    const double hi = parse_complex(parts[1], field).real();
    long n = 0;
    try {
        n = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw ParseError(field + ": bad point count '" + parts[2] + "'");
    }
    if (n < 0) throw ParseError(field + ": negative point count");
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k)
        v.push_back(n == 1 ? lo : lo + (hi - lo) * double(k) / double(n - 1));
    return v;
}

json load_json_text(const std::string& text, const std::string& field) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError(field + ": malformed JSON");
    return j;
}

json load_input_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("input: cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return load_json_text(ss.str(), "input");
}

// Inline --h wins; otherwise the input file, either a bare matrix or an
// object with an "h" member.
CMat2 resolve_h(const std::string& inline_h, const GlobalOpts& g) {
    if (!inline_h.empty())
        return mat2_from_json(load_json_text(inline_h, "h"), "h");
    if (!g.input.empty()) {
        const json j = load_input_file(g.input);
        if (j.is_array()) return mat2_from_json(j, "h");
        if (j.is_object()) return mat2_from_json(member(j, "h"), "h");
        throw ParseError("input: expected a matrix or an object with 'h'");
    }
    throw ParseError("h: missing (give --h or --input)");
}

void emit(const std::string& text, const GlobalOpts& g) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.output);
    if (!f) throw ParseError("output: cannot open '" + g.output + "'");
    f << text;
    if (!f) throw ParseError("output: write failed on '" + g.output + "'");
}

void emit_json(const json& j, const GlobalOpts& g) { emit(j.dump(2) + "\n", g); }

void require_json_output(const GlobalOpts& g, const char* cmd) {
    if (g.as_csv)
        throw ParseError(std::string(cmd) + ": csv output is not available");
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Branch parse_branch(const std::string& s) {
    if (s == "plus") return Branch::Plus;
    if (s == "minus") return Branch::Minus;
    throw ParseError("branch: expected plus|minus, got '" + s + "'");
}

CircleSign parse_circle(const std::string& s) {
    if (s == "plus") return CircleSign::Plus;
    if (s == "minus") return CircleSign::Minus;
    throw ParseError("circle: expected plus|minus, got '" + s + "'");
}

HermiticityKind parse_kind(const std::string& s) {
    if (s == "pseudo") return HermiticityKind::PseudoHermitian;
    if (s == "anti") return HermiticityKind::AntiPseudoHermitian;
    throw ParseError("kind: expected pseudo|anti, got '" + s + "'");
}

QKind parse_q(const std::string& s) {
    if (s == "identity") return QKind::Identity;
    if (s == "parity") return QKind::Parity;
    throw ParseError("q: expected identity|parity, got '" + s + "'");
}

// Kind and Q from flags where given, from the classification where
// unambiguous. tr H = 0 admits both kinds at once and needs the flag.
struct KindChoice {
    HermiticityKind kind;
    QKind q;
};

KindChoice choose_kind(const Classification& cls, const std::string& kind_flag,
                       const std::string& q_flag) {
    KindChoice kc{};
    if (!kind_flag.empty()) {
        kc.kind = parse_kind(kind_flag);
    } else if (cls.kind == HermiticityKind::Both) {
        throw CaseMismatch("kind required: trace vanishes, both families admitted");
    } else {
        kc.kind = cls.kind;
    }

    if (!q_flag.empty()) {
        kc.q = parse_q(q_flag);
        return kc;
    }
    if (cls.exceptional)
        throw ExceptionalPoint("tr^2 - 4 det vanishes within tolerance");
    const auto& phase = kc.kind == HermiticityKind::PseudoHermitian
                            ? cls.pseudo_phase
                            : cls.anti_phase;
    if (!phase)
        throw CaseMismatch(std::string("requested kind is not admitted: ") +
                           to_string(kc.kind));
    kc.q = *phase == PhaseKind::Trivial ? QKind::Identity : QKind::Parity;
    return kc;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& h_flag, const GlobalOpts& g) {
    require_json_output(g, "classify");
    const CMat2 h = resolve_h(h_flag, g);
    emit_json(to_json(classify(h, g.tol())), g);
    return 0;
}

// ------------------------------------------------------------------ metric

struct MetricFlags {
    std::string h, kind, q, branch = "plus", circle = "plus";
    std::string phi = "0", n1 = "1", n2 = "1";
};

int cmd_metric(const MetricFlags& mf, const GlobalOpts& g) {
    require_json_output(g, "metric");
    const CMat2 h = resolve_h(mf.h, g);
    const Tolerances tol = g.tol();
    const KindChoice kc = choose_kind(classify(h, tol), mf.kind, mf.q);

    const Normalization nn(parse_complex(mf.n1, "n1"), parse_complex(mf.n2, "n2"));
    const PhaseVector pv(parse_complex(mf.phi, "phi"));
    const MetricResult r =
        metric_general(h, nn, kc.q, pv, kc.kind, parse_branch(mf.branch),
                       parse_circle(mf.circle), tol);
    emit_json(to_json(h, r), g);
    return r.residual <= tol.eq_abs ? 0 : 2;
}

// ------------------------------------------------------------------ verify

struct VerifyFlags {
    std::string h, eta;
    int sign = 0;  // 0: take from input file, default +1
};

int cmd_verify(const VerifyFlags& vf, const GlobalOpts& g) {
    require_json_output(g, "verify");
    json in;
    if (!g.input.empty()) in = load_input_file(g.input);

    const CMat2 h = !vf.h.empty()
                        ? mat2_from_json(load_json_text(vf.h, "h"), "h")
                        : mat2_from_json(member(in, "h"), "h");
    const CMat2 eta = !vf.eta.empty()
                          ? mat2_from_json(load_json_text(vf.eta, "eta"), "eta")
                          : mat2_from_json(member(in, "eta"), "eta");
    int sign = vf.sign;
    if (sign == 0 && in.is_object() && in.contains("sign"))
        sign = in["sign"].get<int>();
    if (sign == 0) sign = +1;
    if (sign != 1 && sign != -1)
        throw ParseError("sign: expected +1 or -1");

    const Tolerances tol = g.tol();
    const double residual = verify_pseudo_hermiticity(h, eta, sign, tol);
    emit_json(json{{"h", to_json(h)},
                   {"eta", to_json(eta)},
                   {"sign", sign},
                   {"residual", residual}},
              g);
    return residual <= tol.eq_abs ? 0 : 2;
}

// -------------------------------------------------------------- involution

struct InvolutionFlags {
    std::string h, b, branch = "plus";
    std::string n1 = "1", n2 = "1";
    double phi_p = 0.0;
};

int cmd_involution(const InvolutionFlags& ivf, const GlobalOpts& g) {
    require_json_output(g, "involution");
    const CMat2 h = resolve_h(ivf.h, g);
    const Tolerances tol = g.tol();
    const Normalization nn(parse_complex(ivf.n1, "n1"),
                           parse_complex(ivf.n2, "n2"));
    const CMat2 b = ivf.b.empty()
                        ? CMat2::identity()
                        : mat2_from_json(load_json_text(ivf.b, "b"), "b");

    const InvolutionConstraint constraint = involution_constraint_check(h, nn, tol);
    const MetricResult mr = metric_trivial(h, nn, Case::Case1,
                                           parse_branch(ivf.branch),
                                           CircleSign::Plus, tol);
    const CResult cr = c_operator(mr.eta, b, GeneralParity(ivf.phi_p), tol);
    emit_json(json{{"constraint", to_json(constraint)},
                   {"eta", to_json(mr.eta)},
                   {"c", to_json(cr)},
                   {"commutant_residual",
                    commutant_residual(h, b, HermiticityKind::PseudoHermitian)}},
              g);
    return 0;
}

// ----------------------------------------------------------------- catalog

struct CatalogFlags {
    std::string name;
    std::vector<std::string> params;
    std::string case_flag, branch = "plus", circle = "plus";
    std::string phi = "0", n1 = "1", n2 = "1";
    bool list = false;
};

Case parse_case(const std::string& s) {
    for (Case c : {Case::Case1, Case::Case2, Case::Case3, Case::Case4})
        if (s == to_string(c)) return c;
    throw ParseError("case: expected case1..case4, got '" + s + "'");
}

int cmd_catalog(const CatalogFlags& cf, const GlobalOpts& g) {
    require_json_output(g, "catalog");
    if (cf.list || cf.name.empty()) {
        json out = json::array();
        for (const CatalogSchema& s : catalog_list()) {
            json params = json::array();
            for (const ParamSpec& p : s.params)
                params.push_back(json{{"name", p.name},
                                      {"complex", p.complex_valued}});
            out.push_back(json{{"name", s.name}, {"params", params}});
        }
        emit_json(out, g);
        return 0;
    }

    std::vector<cplx> values;
    values.reserve(cf.params.size());
    for (std::size_t i = 0; i < cf.params.size(); ++i)
        values.push_back(
            parse_complex(cf.params[i], "params[" + std::to_string(i) + "]"));
    const CatalogEntry e = catalog_build(cf.name, values);

    json out = to_json(e);
    json eigs = json::object();
    for (Case c : e.tabulated) {
        eigs[to_string(c)] =
            json{{"plus", to_json(e.eigenvalue(c, Branch::Plus))},
                 {"minus", to_json(e.eigenvalue(c, Branch::Minus))}};
    }
    out["eigenvalues"] = eigs;

    if (!e.tabulated.empty()) {
        const Case c = cf.case_flag.empty() ? e.tabulated.front()
                                            : parse_case(cf.case_flag);
        const Branch b = parse_branch(cf.branch);
        const CircleSign circ = parse_circle(cf.circle);
        const Normalization nn(parse_complex(cf.n1, "n1"),
                               parse_complex(cf.n2, "n2"));
        const PhaseVector pv(parse_complex(cf.phi, "phi"));
        out["oracle"] = json{{"case", to_string(c)},
                             {"branch", to_string(b)},
                             {"circle", to_string(circ)},
                             {"eta", to_json(e.oracle_metric(c, nn, pv, b, circ))}};
    }
    emit_json(out, g);
    return 0;
}

// ------------------------------------------------------------------- sweep

struct SweepFlags {
    std::string name;
    std::vector<std::string> grid;
    std::vector<std::string> set;
    std::string observables = "disc,case,eigs,eta,residual";
};

struct SweepAxis {
    std::string param;
    std::size_t index;  // into the schema parameter list
    std::vector<double> values;
};

int cmd_sweep(const SweepFlags& sf, const GlobalOpts& g) {
    if (g.as_json) throw ParseError("sweep: emits csv only");
    const CatalogSchema schema = catalog_schema(sf.name);

    const auto param_index = [&](const std::string& p) {
        for (std::size_t i = 0; i < schema.params.size(); ++i)
            if (schema.params[i].name == p) return i;
        throw NotFound("sweep: no parameter '" + p + "' in " + schema.name);
    };

    std::vector<cplx> fixed(schema.params.size(), cplx(0, 0));
    std::vector<bool> have(schema.params.size(), false);
    for (const std::string& s : sf.set) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("set: expected name=value, got '" + s + "'");
        const std::size_t i = param_index(s.substr(0, eq));
        fixed[i] = parse_complex(s.substr(eq + 1), "set " + s.substr(0, eq));
        have[i] = true;
    }

    std::vector<SweepAxis> axes;
    for (const std::string& sspec : sf.grid) {
        const auto eq = sspec.find('=');
        if (eq == std::string::npos)
            throw ParseError("grid: expected name=lo:hi:n, got '" + sspec + "'");
        SweepAxis ax;
        ax.param = sspec.substr(0, eq);
        ax.index = param_index(ax.param);
        ax.values = parse_grid_axis(sspec.substr(eq + 1), "grid " + ax.param);
        axes.push_back(std::move(ax));
    }
    std::sort(axes.begin(), axes.end(),
              [](const SweepAxis& a, const SweepAxis& b) {
                  return a.param < b.param;
              });
    for (std::size_t i = 1; i < axes.size(); ++i)
        if (axes[i].param == axes[i - 1].param)
            throw ParseError("grid: duplicate axis '" + axes[i].param + "'");
    for (const SweepAxis& ax : axes) have[ax.index] = true;

    // bender-das may leave its trailing ell out (defaults to 0); every
    // other parameter must be pinned by --set or swept
    std::size_t arity = schema.params.size();
    if (schema.name == "bender-das" && !have.back()) --arity;
    for (std::size_t i = 0; i < arity; ++i)
        if (!have[i])
            throw NotFound("sweep: parameter '" + schema.params[i].name +
                           "' is neither set nor gridded");

    double total = 1;
    for (const SweepAxis& ax : axes) total *= double(ax.values.size());
    if (total > 1e6) throw Error("sweep: grid exceeds 10^6 points");

    // column layout: parameters, then the selected observable groups
    std::vector<std::string> groups;
    {
        std::stringstream ss(sf.observables);
        std::string item;
        while (std::getline(ss, item, ',')) groups.push_back(item);
        for (const std::string& o : groups)
            if (o != "disc" && o != "case" && o != "eigs" && o != "eta" &&
                o != "residual")
                throw NotFound("sweep: unknown observable '" + o + "'");
    }
    const auto want = [&](const char* o) {
        return std::find(groups.begin(), groups.end(), o) != groups.end();
    };

    std::vector<std::string> columns;
    for (std::size_t i = 0; i < arity; ++i) {
        const ParamSpec& p = schema.params[i];
        if (p.complex_valued) {
            columns.push_back(p.name + "_re");
            columns.push_back(p.name + "_im");
        } else {
            columns.push_back(p.name);
        }
    }
    if (want("disc")) columns.insert(columns.end(), {"disc_re", "disc_im"});
    if (want("case")) columns.insert(columns.end(), {"case", "exceptional"});
    if (want("eigs"))
        columns.insert(columns.end(), {"e1_re", "e1_im", "e2_re", "e2_im"});
    if (want("eta")) columns.insert(columns.end(), {"eta_min", "det_eta_sign"});
    if (want("residual")) columns.push_back("residual");
    if (columns.empty()) throw NotFound("sweep: no columns selected");

    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? "," : "\n");

    const Tolerances tol = g.tol();
    const double nan = std::nan("");

    std::vector<std::size_t> idx(axes.size(), 0);
    const bool empty = [&] {
        for (const SweepAxis& ax : axes)
            if (ax.values.empty()) return true;
        return false;
    }();

    bool done = empty;
    while (!done) {
        std::vector<cplx> values(fixed.begin(), fixed.begin() + long(arity));
        for (std::size_t a = 0; a < axes.size(); ++a)
            values[axes[a].index] =
                cplx(axes[a].values[idx[a]], fixed[axes[a].index].imag());

        const CatalogEntry e = catalog_build(schema.name, values);

        std::vector<std::string> cells;
        cells.reserve(columns.size());
        for (std::size_t i = 0; i < arity; ++i) {
            cells.push_back(fmt17(values[i].real()));
            if (schema.params[i].complex_valued)
                cells.push_back(fmt17(values[i].imag()));
        }

        const Classification cls = classify(e.h, tol);
        if (want("disc")) {
            cells.push_back(fmt17(cls.q.disc.real()));
            cells.push_back(fmt17(cls.q.disc.imag()));
        }
        if (cls.exceptional) {
            if (want("case")) cells.insert(cells.end(), {"", "1"});
            if (want("eigs"))
                cells.insert(cells.end(), 4, fmt17(nan));
            if (want("eta")) cells.insert(cells.end(), {fmt17(nan), "0"});
            if (want("residual")) cells.push_back(fmt17(nan));
        } else {
            const Case c = cls.cases.front();
            const EigenSystem es = eigenbasis(e.h, c, Branch::Plus, tol);
            const MetricResult mr = metric_general(
                e.h, Normalization(), case_is_trivial(c) ? QKind::Identity
                                                         : QKind::Parity,
                PhaseVector(), case_is_pseudo(c)
                                   ? HermiticityKind::PseudoHermitian
                                   : HermiticityKind::AntiPseudoHermitian,
                Branch::Plus, CircleSign::Plus, tol);
            const double tr = trace(mr.eta).real();
            const double dt = det(mr.eta).real();
            const double gap = std::sqrt(std::max(0.0, tr * tr - 4.0 * dt));
            if (want("case"))
                cells.insert(cells.end(), {to_string(c), "0"});
            if (want("eigs")) {
                cells.push_back(fmt17(es.e1.real()));
                cells.push_back(fmt17(es.e1.imag()));
                cells.push_back(fmt17(es.e2.real()));
                cells.push_back(fmt17(es.e2.imag()));
            }
            if (want("eta")) {
                cells.push_back(fmt17((tr - gap) / 2.0));
                cells.push_back(dt >= 0 ? "1" : "-1");
            }
            if (want("residual")) cells.push_back(fmt17(mr.residual));
        }
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << cells[i] << (i + 1 < cells.size() ? "," : "\n");

        if (axes.empty()) break;
        std::size_t a = axes.size();
        while (a > 0) {
            --a;
            if (++idx[a] < axes[a].values.size()) break;
            idx[a] = 0;
            if (a == 0) done = true;
        }
    }
    emit(out.str(), g);
    return 0;
}

// ---------------------------------------------------------------- dynamics

struct DynamicsFlags {
    std::string h, eta, b, kind, q;
    std::string psi1 = "1", psi2 = "0";
    std::string times = "0:10:101";
};

int cmd_dynamics(const DynamicsFlags& df, const GlobalOpts& g) {
    const CMat2 h = resolve_h(df.h, g);
    const Tolerances tol = g.tol();

    CMat2 eta;
    if (!df.eta.empty()) {
        eta = mat2_from_json(load_json_text(df.eta, "eta"), "eta");
    } else {
        const KindChoice kc = choose_kind(classify(h, tol), df.kind, df.q);
        eta = metric_general(h, Normalization(), kc.q, PhaseVector(), kc.kind,
                             Branch::Plus, CircleSign::Plus, tol)
                  .eta;
    }
    const CMat2 b = df.b.empty()
                        ? CMat2::identity()
                        : mat2_from_json(load_json_text(df.b, "b"), "b");
    const StateVec2 psi0(parse_complex(df.psi1, "psi1"),
                         parse_complex(df.psi2, "psi2"));
    const EvolutionReport rep = stationarity_check(
        h, eta, b, psi0, parse_grid_axis(df.times, "times"), tol);

    if (g.as_csv) {
        std::ostringstream out;
        out << "t,re,im\n";
        for (std::size_t k = 0; k < rep.times.size(); ++k)
            out << fmt17(rep.times[k]) << "," << fmt17(rep.values[k].real())
                << "," << fmt17(rep.values[k].imag()) << "\n";
        emit(out.str(), g);
    } else {
        json j = to_json(rep);
        j["eta"] = to_json(eta);
        emit_json(j, g);
    }
    return 0;
}

// ---------------------------------------------------------------- lee-wick

int cmd_leewick(const std::string& omega_flag, const std::string& variant_flag,
                const GlobalOpts& g) {
    require_json_output(g, "lee-wick");
    const cplx omega = parse_complex(omega_flag, "omega");
    LeeWickVariant variant = LeeWickVariant::Graded;
    if (variant_flag == "ungraded") variant = LeeWickVariant::Ungraded;
    else if (variant_flag != "graded")
        throw ParseError("variant: expected graded|ungraded, got '" +
                         variant_flag + "'");

    const LeeWickSystem sys = build_lee_wick(omega, variant);
    const LeeWickResiduals r = verify_lee_wick(sys);
    emit_json(to_json(sys, r), g);
    return r.max() <= 1e-13 ? 0 : 2;
}

// ------------------------------------------------------------------- main

const char* error_label(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
    if (dynamic_cast<const NotClassifiable*>(&e)) return "not_classifiable";
    if (dynamic_cast<const CaseMismatch*>(&e)) return "case_mismatch";
    if (dynamic_cast<const ExceptionalPoint*>(&e)) return "exceptional_point";
    if (dynamic_cast<const SingularMatrix*>(&e)) return "singular_matrix";
    if (dynamic_cast<const NonFinite*>(&e)) return "non_finite";
    if (dynamic_cast<const NotFound*>(&e)) return "not_found";
    if (dynamic_cast<const InvalidImaginaryPart*>(&e)) return "invalid_imaginary_part";
    if (dynamic_cast<const DegenerateNormalizationRatio*>(&e))
        return "degenerate_normalization";
    return "domain_error";
}

int report_error(const char* label, const std::string& detail, int code,
                 const json* extra = nullptr) {
    json j{{"error", label}, {"detail", detail}};
    if (extra) j["diagnostics"] = *extra;
    std::cerr << j.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-Hermitian 2x2 metric toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--tol-abs", g.tol_abs, "absolute tolerance");
    app.add_option("--tol-rel", g.tol_rel, "relative tolerance");
    app.add_flag("--json", g.as_json, "JSON output (default where available)");
    app.add_flag("--csv", g.as_csv, "CSV output (sweep, dynamics)");
    app.add_option("--input", g.input, "read H or a full record from a JSON file");
    app.add_option("--output", g.output, "write output to a file instead of stdout");

    std::string classify_h;
    CLI::App* c_classify = app.add_subcommand("classify", "classify H");
    c_classify->add_option("--H", classify_h, "2x2 matrix, JSON");

    MetricFlags mf;
    CLI::App* c_metric = app.add_subcommand("metric", "construct a metric for H");
    c_metric->add_option("--H", mf.h, "2x2 matrix, JSON");
    c_metric->add_option("--kind", mf.kind, "pseudo|anti");
    c_metric->add_option("--q", mf.q, "identity|parity");
    c_metric->add_option("--phi", mf.phi, "parity-frame angle, re[,im]");
    c_metric->add_option("--n1", mf.n1, "N1, re[,im]");
    c_metric->add_option("--n2", mf.n2, "N2, re[,im]");
    c_metric->add_option("--branch", mf.branch, "plus|minus");
    c_metric->add_option("--circle", mf.circle, "plus|minus");

    VerifyFlags vf;
    CLI::App* c_verify = app.add_subcommand(
        "verify", "residual of the defining relation for a given eta");
    c_verify->add_option("--H", vf.h, "2x2 matrix, JSON");
    c_verify->add_option("--eta", vf.eta, "2x2 matrix, JSON");
    c_verify->add_option("--sign", vf.sign, "+1 pseudo, -1 anti");

    InvolutionFlags ivf;
    CLI::App* c_involution = app.add_subcommand(
        "involution", "C-operator and the C^2 = 1 constraint record");
    c_involution->add_option("--H", ivf.h, "2x2 matrix, JSON");
    c_involution->add_option("--b", ivf.b, "commutant factor B, JSON");
    c_involution->add_option("--n1", ivf.n1, "N1, re[,im]");
    c_involution->add_option("--n2", ivf.n2, "N2, re[,im]");
    c_involution->add_option("--phi-p", ivf.phi_p, "parity angle");
    c_involution->add_option("--branch", ivf.branch, "plus|minus");

    CatalogFlags cf;
    CLI::App* c_catalog = app.add_subcommand(
        "catalog", "materialize a worked family, H and tabulated eta");
    c_catalog->add_option("name", cf.name, "entry name");
    c_catalog->add_option("--params", cf.params, "parameter values, re[,im] each");
    c_catalog->add_flag("--list", cf.list, "list entries and parameter schemas");
    c_catalog->add_option("--case", cf.case_flag, "case1..case4");
    c_catalog->add_option("--branch", cf.branch, "plus|minus");
    c_catalog->add_option("--circle", cf.circle, "plus|minus");
    c_catalog->add_option("--phi", cf.phi, "parity-frame angle, re[,im]");
    c_catalog->add_option("--n1", cf.n1, "N1, re[,im]");
    c_catalog->add_option("--n2", cf.n2, "N2, re[,im]");

    SweepFlags sf;
    CLI::App* c_sweep = app.add_subcommand(
        "sweep", "grid a catalog family, one CSV row per point");
    c_sweep->add_option("name", sf.name, "entry name")->required();
    c_sweep->add_option("--grid", sf.grid, "axis spec name=lo:hi:n");
    c_sweep->add_option("--set", sf.set, "fixed parameter name=re[,im]");
    c_sweep->add_option("--observables", sf.observables,
                        "comma list of disc,case,eigs,eta,residual");

    DynamicsFlags df;
    CLI::App* c_dynamics = app.add_subcommand(
        "dynamics", "track <psi| eta B |psi> along the evolution");
    c_dynamics->add_option("--H", df.h, "2x2 matrix, JSON");
    c_dynamics->add_option("--eta", df.eta, "metric, JSON (constructed if omitted)");
    c_dynamics->add_option("--b", df.b, "observable factor B, JSON");
    c_dynamics->add_option("--kind", df.kind, "pseudo|anti, for the constructed eta");
    c_dynamics->add_option("--q", df.q, "identity|parity, for the constructed eta");
    c_dynamics->add_option("--psi1", df.psi1, "initial state, first component");
    c_dynamics->add_option("--psi2", df.psi2, "initial state, second component");
    c_dynamics->add_option("--times", df.times, "time grid lo:hi:n");

    std::string lw_omega, lw_variant = "graded";
    CLI::App* c_leewick = app.add_subcommand(
        "lee-wick", "rank-4 ladder system, matrices and residual report");
    c_leewick->add_option("--omega", lw_omega, "complex frequency re[,im]")
        ->required();
    c_leewick->add_option("--variant", lw_variant, "graded|ungraded");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
            return app.exit(e);  // --help and friends
        return report_error("parse_error", e.what(), 3);
    }

    try {
        if (*c_classify) return cmd_classify(classify_h, g);
        if (*c_metric) return cmd_metric(mf, g);
        if (*c_verify) return cmd_verify(vf, g);
        if (*c_involution) return cmd_involution(ivf, g);
        if (*c_catalog) return cmd_catalog(cf, g);
        if (*c_sweep) return cmd_sweep(sf, g);
        if (*c_dynamics) return cmd_dynamics(df, g);
        if (*c_leewick) return cmd_leewick(lw_omega, lw_variant, g);
        return report_error("parse_error", "no subcommand", 3);
    } catch (const NotClassifiable& e) {
        const json diag = to_json(e.diagnostics);
        return report_error("not_classifiable", e.what(), 2, &diag);
    } catch (const ParseError& e) {
        return report_error("parse_error", e.what(), 3);
    } catch (const Error& e) {
        return report_error(error_label(e), e.what(), 2);
    } catch (const std::exception& e) {
        return report_error("internal_error", e.what(), 3);
    }
}
