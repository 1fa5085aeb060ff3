#pragma once

#include <json.hpp>

#include <string>

#include "foxlink/coloring.hpp"
#include "foxlink/diagram.hpp"
#include "foxlink/snf.hpp"
#include "foxlink/theory.hpp"
#include "foxlink/verify.hpp"

// JSON wire formats. Arbitrary-precision integers travel as decimal strings
// so nothing silently truncates; small residues and counts stay numeric.

namespace foxlink {

inline std::string int_to_string(const Int& v) { return v.str(); }
inline Int int_from_string(const std::string& s) { return Int(s); }

inline void to_json(nlohmann::json& j, const Coloring& c) {
    j = nlohmann::json{{"modulus", c.modulus}, {"values", c.values}};
}

inline void from_json(const nlohmann::json& j, Coloring& c) {
    j.at("modulus").get_to(c.modulus);
    j.at("values").get_to(c.values);
}

inline void to_json(nlohmann::json& j, const Crossing& c) {
    j = nlohmann::json::array({c.over, c.under_a, c.under_b});
}

inline void from_json(const nlohmann::json& j, Crossing& c) {
    c.over = j.at(0).get<int>();
    c.under_a = j.at(1).get<int>();
    c.under_b = j.at(2).get<int>();
}

inline void to_json(nlohmann::json& j, const Diagram& d) {
    j = nlohmann::json{{"name", d.name},
                       {"arcs", d.arcs},
                       {"crossings", d.crossings},
                       {"free_loops", d.free_loops}};
}

inline void from_json(const nlohmann::json& j, Diagram& d) {
    j.at("name").get_to(d.name);
    j.at("arcs").get_to(d.arcs);
    j.at("crossings").get_to(d.crossings);
    j.at("free_loops").get_to(d.free_loops);
}

inline void to_json(nlohmann::json& j, const IntMatrix& m) {
    j = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(int_to_string(m(i, c)));
        j.push_back(std::move(row));
    }
}

inline void to_json(nlohmann::json& j, const Prediction& p) {
    const char* verdict = "no-nontrivial";
    if (p.verdict == Prediction::Verdict::exact) verdict = "exact";
    if (p.verdict == Prediction::Verdict::at_least) verdict = "at-least";
    j = nlohmann::json{
        {"verdict", verdict}, {"value", p.value}, {"lcpd", int_to_string(p.lcpd)}};
}

inline void from_json(const nlohmann::json& j, Prediction& p) {
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "exact")
        p.verdict = Prediction::Verdict::exact;
    else if (verdict == "at-least")
        p.verdict = Prediction::Verdict::at_least;
    else
        p.verdict = Prediction::Verdict::no_nontrivial;
    j.at("value").get_to(p.value);
    p.lcpd = int_from_string(j.at("lcpd").get<std::string>());
}

inline void to_json(nlohmann::json& j, const RecordStatus& s) { j = std::string(to_string(s)); }

inline void from_json(const nlohmann::json& j, RecordStatus& s) {
    const std::string text = j.get<std::string>();
    if (text == "inconsistent")
        s = RecordStatus::inconsistent;
    else if (text == "bound-only")
        s = RecordStatus::bound_only;
    else
        s = RecordStatus::consistent;
}

inline void to_json(nlohmann::json& j, const VerifyRecord& r) {
    j = nlohmann::json{{"link", r.link},
                       {"r", r.r},
                       {"det", int_to_string(r.det)},
                       {"prediction", r.prediction},
                       {"status", r.status},
                       {"note", r.note}};
    if (r.min_colors)
        j["min_colors"] = *r.min_colors;
    else
        j["min_colors"] = nullptr;
}

inline void from_json(const nlohmann::json& j, VerifyRecord& r) {
    j.at("link").get_to(r.link);
    j.at("r").get_to(r.r);
    r.det = int_from_string(j.at("det").get<std::string>());
    j.at("prediction").get_to(r.prediction);
    j.at("status").get_to(r.status);
    j.at("note").get_to(r.note);
    if (j.at("min_colors").is_null())
        r.min_colors.reset();
    else
        r.min_colors = j.at("min_colors").get<std::size_t>();
}

inline void to_json(nlohmann::json& j, const VerifyReport& rep) {
    j = nlohmann::json{{"hypothesis", std::string(kVerifyHypothesis)},
                       {"records", rep.records},
                       {"all_consistent", rep.all_consistent()}};
}

inline void from_json(const nlohmann::json& j, VerifyReport& rep) {
    j.at("records").get_to(rep.records);
}

inline void to_json(nlohmann::json& j, const ScanRecord& r) {
    j = nlohmann::json{{"link", r.link}, {"r", r.r}};
    if (r.min_colors)
        j["min_colors"] = *r.min_colors;
    else
        j["min_colors"] = nullptr;
}

inline void from_json(const nlohmann::json& j, ScanRecord& r) {
    j.at("link").get_to(r.link);
    j.at("r").get_to(r.r);
    if (j.at("min_colors").is_null())
        r.min_colors.reset();
    else
        r.min_colors = j.at("min_colors").get<std::size_t>();
}

inline void to_json(nlohmann::json& j, const ScanGroup& g) {
    j = nlohmann::json{{"lcpd", int_to_string(g.lcpd)},
                       {"proven_low", g.proven_low},
                       {"exact", g.exact},
                       {"records", g.records},
                       {"flagged", g.flagged},
                       {"note", g.note}};
    if (g.best_upper)
        j["best_upper"] = *g.best_upper;
    else
        j["best_upper"] = nullptr;
}

inline void from_json(const nlohmann::json& j, ScanGroup& g) {
    g.lcpd = int_from_string(j.at("lcpd").get<std::string>());
    j.at("proven_low").get_to(g.proven_low);
    j.at("exact").get_to(g.exact);
    j.at("records").get_to(g.records);
    j.at("flagged").get_to(g.flagged);
    j.at("note").get_to(g.note);
    if (j.at("best_upper").is_null())
        g.best_upper.reset();
    else
        g.best_upper = j.at("best_upper").get<std::size_t>();
}

inline void to_json(nlohmann::json& j, const ScanReport& rep) {
    j = nlohmann::json{
        {"groups", rep.groups}, {"consistent", rep.consistent}, {"summary", rep.summary}};
}

inline void from_json(const nlohmann::json& j, ScanReport& rep) {
    j.at("groups").get_to(rep.groups);
    j.at("consistent").get_to(rep.consistent);
    j.at("summary").get_to(rep.summary);
}

}  // namespace foxlink
