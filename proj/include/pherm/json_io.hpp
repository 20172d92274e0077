#pragma once

// Wire format shared by the CLI commands and their tests: a complex
// number is a two-element array [re, im], matrices are nested arrays of
// those, enums go by their to_string labels. Parsing failures throw
// ParseError naming the offending field. nlohmann::json keeps object
// keys sorted, so serialized output is deterministic.

#include <json.hpp>

#include <string>
#include <vector>

#include "pherm.hpp"

namespace pherm {

using json = nlohmann::json;

inline json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const CMat2& m) {
    return json::array({json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                        json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

inline json to_json(const CMat4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

// A bare number is accepted as a real value wherever a complex one is
// expected; everything else must be [re, im].
inline cplx complex_from_json(const json& j, const std::string& field) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw ParseError(field + ": expected a number or [re, im]");
}

inline CMat2 mat2_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError(field + ": expected two rows");
    CMat2 m;
    for (int i = 0; i < 2; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != 2)
            throw ParseError(field + ": row " + std::to_string(i) +
                             ": expected two entries");
        for (int k = 0; k < 2; ++k)
            m(i, k) = complex_from_json(
                row[k], field + "[" + std::to_string(i) + "][" +
                            std::to_string(k) + "]");
    }
    return m;
}

inline const json& member(const json& j, const std::string& field) {
    const auto it = j.find(field);
    if (it == j.end()) throw ParseError(field + ": missing");
    return *it;
}

inline json to_json(const Classification& cls) {
    json cases = json::array();
    for (Case c : cls.cases) cases.push_back(to_string(c));
    json j{{"kind", to_string(cls.kind)},
           {"cases", cases},
           {"exceptional", cls.exceptional},
           {"sum", to_json(cls.q.sum)},
           {"disc", to_json(cls.q.disc)},
           {"sum_scale", cls.sum_scale},
           {"disc_scale", cls.disc_scale}};
    if (cls.pseudo_phase) j["pseudo_phase"] = to_string(*cls.pseudo_phase);
    if (cls.anti_phase) j["anti_phase"] = to_string(*cls.anti_phase);
    return j;
}

inline json to_json(const EigenSystem& es) {
    return json{{"case", to_string(es.case_label)},
                {"branch", to_string(es.branch)},
                {"e1", to_json(es.e1)},
                {"e2", to_json(es.e2)},
                {"halfdiff", to_json(es.halfdiff)},
                {"x", to_json(es.x)},
                {"x_inv", to_json(es.x_inv)},
                {"xdag", to_json(es.xdag)},
                {"xdag_inv", to_json(es.xdag_inv)}};
}

// The Hamiltonian rides along so the record is self-contained: feeding
// this object back through a verifier needs no other context.
inline json to_json(const CMat2& h, const MetricResult& r) {
    return json{{"h", to_json(h)},
                {"case", to_string(r.case_label)},
                {"branch", to_string(r.branch)},
                {"circle", to_string(r.circle)},
                {"q", to_string(r.q_kind)},
                {"phi", to_json(r.phase.phi)},
                {"n1", to_json(r.norm.n1)},
                {"n2", to_json(r.norm.n2)},
                {"part_a", to_json(r.part_a)},
                {"part_b", to_json(r.part_b)},
                {"eta", to_json(r.eta)},
                {"sign", r.sign},
                {"hermitian", r.hermitian},
                {"residual", r.residual}};
}

inline json to_json(const InvolutionConstraint& c) {
    return json{{"n_modulus_ok", c.n_modulus_ok},
                {"symmetric_ok", c.symmetric_ok},
                {"satisfiable", c.satisfiable}};
}

inline json to_json(const CResult& r) {
    return json{{"c_matrix", to_json(r.c_matrix)},
                {"involution_residual", r.involution_residual},
                {"b_used", to_json(r.b_used)}};
}

inline json to_json(const GeyerReport& g) {
    return json{{"lhs1", g.lhs1},
                {"sin_gamma", g.sin_gamma},
                {"bound_ok", g.bound_ok}};
}

inline json to_json(const EvolutionReport& rep) {
    json values = json::array();
    for (const cplx& v : rep.values) values.push_back(to_json(v));
    return json{{"times", rep.times},
                {"values", values},
                {"max_drift", rep.max_drift}};
}

inline json to_json(const CatalogEntry& e) {
    json params = json::array();
    for (const auto& [name, value] : e.params)
        params.push_back(json{{"name", name}, {"value", to_json(value)}});
    json admitted = json::array();
    for (Case c : e.admitted) admitted.push_back(to_string(c));
    json tabulated = json::array();
    for (Case c : e.tabulated) tabulated.push_back(to_string(c));
    return json{{"name", e.name},
                {"params", params},
                {"h", to_json(e.h)},
                {"regime", e.regime},
                {"admitted", admitted},
                {"tabulated", tabulated}};
}

// Rebuilds the entry from name + params, the only state the schema
// needs; the matrices and case lists are derived on the way back.
inline CatalogEntry catalog_entry_from_json(const json& j) {
    const std::string name = member(j, "name").get<std::string>();
    std::vector<cplx> values;
    for (const json& p : member(j, "params"))
        values.push_back(complex_from_json(member(p, "value"), "params.value"));
    return catalog_build(name, values);
}

inline json to_json(const LeeWickSystem& sys, const LeeWickResiduals& r) {
    json spectrum = json::array();
    for (const cplx& e : lee_wick_spectrum(sys.omega))
        spectrum.push_back(to_json(e));
    return json{{"omega", to_json(sys.omega)},
                {"variant", to_string(sys.variant)},
                {"h", to_json(sys.h)},
                {"dbar", to_json(sys.dbar)},
                {"bbar", to_json(sys.bbar)},
                {"d", to_json(sys.d)},
                {"b", to_json(sys.b)},
                {"eta", to_json(sys.eta)},
                {"spectrum", spectrum},
                {"residuals", json{{"pseudo_hermiticity", r.pseudo_hermiticity},
                                   {"exchange", r.exchange},
                                   {"pairing", r.pairing},
                                   {"fermionic", r.fermionic},
                                   {"nilpotency", r.nilpotency},
                                   {"max", r.max()}}}};
}

}  // namespace pherm
