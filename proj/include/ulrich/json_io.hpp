#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "json.hpp"
#include "ulrich/betti.hpp"
#include "ulrich/geometry.hpp"
#include "ulrich/lattice.hpp"
#include "ulrich/pipeline.hpp"
#include "ulrich/semigroup.hpp"

namespace ulrich {

// Classes serialize as arrays [a, b1, ..., bk]; verdicts as flat objects with
// the field names used throughout; diagrams as {"max_row": q, "rows": [...]}.

inline void to_json(nlohmann::json& j, const DivClass& c) {
    j = nlohmann::json::array();
    j.push_back(c.a);
    for (auto v : c.b) j.push_back(v);
}

inline void from_json(const nlohmann::json& j, DivClass& c) {
    c.a = j.at(0).get<std::int64_t>();
    c.b.clear();
    for (std::size_t i = 1; i < j.size(); ++i) c.b.push_back(j.at(i).get<std::int64_t>());
}

inline void to_json(nlohmann::json& j, const Rat& r) {
    if (r.is_integer())
        j = r.num;
    else
        j = r.to_double();  // denominators here are 2 or 4; exact in binary
}

inline void from_json(const nlohmann::json& j, Rat& r) {
    if (j.is_number_integer()) {
        r = Rat(j.get<std::int64_t>());
    } else {
        r = Rat(static_cast<std::int64_t>(std::llround(j.get<double>() * 4)), 4);
    }
}

inline void to_json(nlohmann::json& j, const UlrichVerdict& v) {
    j = nlohmann::json{{"degree", v.degree},       {"c2", v.c2},
                       {"deg_ok", v.deg_ok},       {"parity_ok", v.parity_ok},
                       {"lower_bound_ok", v.lower_bound_ok}, {"upper_bound_ok", v.upper_bound_ok},
                       {"nef_ok", v.nef_ok},       {"overall", v.overall}};
}

inline void from_json(const nlohmann::json& j, UlrichVerdict& v) {
    j.at("degree").get_to(v.degree);
    j.at("c2").get_to(v.c2);
    j.at("deg_ok").get_to(v.deg_ok);
    j.at("parity_ok").get_to(v.parity_ok);
    j.at("lower_bound_ok").get_to(v.lower_bound_ok);
    j.at("upper_bound_ok").get_to(v.upper_bound_ok);
    j.at("nef_ok").get_to(v.nef_ok);
    j.at("overall").get_to(v.overall);
}

inline void to_json(nlohmann::json& j, const BettiDiagram& d) {
    j = nlohmann::json{{"max_row", d.rows().empty() ? 0 : d.max_row()}, {"rows", d.rows()}};
}

inline void from_json(const nlohmann::json& j, BettiDiagram& d) {
    std::vector<std::vector<std::int64_t>> rows =
        j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
    const std::size_t ncols = rows.empty() ? 1 : rows.front().size();
    d = BettiDiagram(ncols, std::move(rows));
}

inline void to_json(nlohmann::json& j, const SemigroupGenerator& g) {
    j = nlohmann::json{{"class", g.cls}, {"rank", g.rank}};
}

inline void from_json(const nlohmann::json& j, SemigroupGenerator& g) {
    j.at("class").get_to(g.cls);
    j.at("rank").get_to(g.rank);
}

inline void to_json(nlohmann::json& j, const SemigroupTerm& t) {
    j = nlohmann::json{{"gen", t.gen}, {"count", t.count}};
}

inline void from_json(const nlohmann::json& j, SemigroupTerm& t) {
    j.at("gen").get_to(t.gen);
    j.at("count").get_to(t.count);
}

inline void to_json(nlohmann::json& j, const SemigroupDecomposition& d) {
    j = nlohmann::json{{"terms", d.terms}, {"total_rank", d.total_rank}};
}

inline void from_json(const nlohmann::json& j, SemigroupDecomposition& d) {
    j.at("terms").get_to(d.terms);
    j.at("total_rank").get_to(d.total_rank);
}

inline void to_json(nlohmann::json& j, const MrcViolation& v) {
    j = nlohmann::json{{"i", v.i}, {"q", v.q}, {"b_upper", v.b_upper}, {"b_lower", v.b_lower}};
}

inline void from_json(const nlohmann::json& j, MrcViolation& v) {
    j.at("i").get_to(v.i);
    j.at("q").get_to(v.q);
    j.at("b_upper").get_to(v.b_upper);
    j.at("b_lower").get_to(v.b_lower);
}

inline void to_json(nlohmann::json& j, const MrcVerdict& v) {
    j = nlohmann::json{{"holds", v.holds}, {"reg_used", v.reg_used}, {"violations", v.violations}};
}

inline void from_json(const nlohmann::json& j, MrcVerdict& v) {
    j.at("holds").get_to(v.holds);
    j.at("reg_used").get_to(v.reg_used);
    j.at("violations").get_to(v.violations);
}

inline void to_json(nlohmann::json& j, const PipelineSeeds& s) {
    j = nlohmann::json{{"model", s.model},
                       {"member", s.member},
                       {"curve_sample", s.curve_sample},
                       {"gamma_sample", s.gamma_sample}};
}

inline void from_json(const nlohmann::json& j, PipelineSeeds& s) {
    j.at("model").get_to(s.model);
    j.at("member").get_to(s.member);
    j.at("curve_sample").get_to(s.curve_sample);
    j.at("gamma_sample").get_to(s.gamma_sample);
}

inline void to_json(nlohmann::json& j, const ConsistencyFlags& c) {
    j = nlohmann::json{{"hilbert_polynomial_onset", c.hilbert_polynomial_onset},
                       {"shared_rows_match", c.shared_rows_match}};
    if (c.semigroup_mrc_agreement) j["semigroup_mrc_agreement"] = *c.semigroup_mrc_agreement;
}

inline void from_json(const nlohmann::json& j, ConsistencyFlags& c) {
    j.at("hilbert_polynomial_onset").get_to(c.hilbert_polynomial_onset);
    j.at("shared_rows_match").get_to(c.shared_rows_match);
    if (j.contains("semigroup_mrc_agreement"))
        c.semigroup_mrc_agreement = j.at("semigroup_mrc_agreement").get<bool>();
    else
        c.semigroup_mrc_agreement.reset();
}

inline void to_json(nlohmann::json& j, const MrcReport& r) {
    j = nlohmann::json{{"schema_version", r.schema_version},
                       {"d", r.d},
                       {"class", r.cls},
                       {"prime", r.prime},
                       {"seed", r.seed},
                       {"degree", r.curve_degree},
                       {"genus", r.genus},
                       {"hilbert_polynomial", {{"slope", r.pc_slope}, {"intercept", r.pc_intercept}}},
                       {"curve_diagram", r.curve_diagram},
                       {"curve_hilbert", r.curve_hilbert},
                       {"reg_curve", r.reg_curve},
                       {"gamma", r.gamma},
                       {"point_diagram", r.point_diagram},
                       {"point_hilbert", r.point_hilbert},
                       {"mrc", r.mrc},
                       {"consistency", r.consistency},
                       {"seeds", r.seeds}};
    if (r.rank) j["rank"] = *r.rank;
    if (r.ulrich) j["ulrich"] = *r.ulrich;
    if (r.semigroup_known) {
        j["semigroup"] = nlohmann::json{{"member", r.semigroup_is_member}};
        if (r.semigroup_decomposition) j["semigroup"]["decomposition"] = *r.semigroup_decomposition;
    }
}

inline void from_json(const nlohmann::json& j, MrcReport& r) {
    j.at("schema_version").get_to(r.schema_version);
    j.at("d").get_to(r.d);
    j.at("class").get_to(r.cls);
    j.at("prime").get_to(r.prime);
    j.at("seed").get_to(r.seed);
    j.at("degree").get_to(r.curve_degree);
    j.at("genus").get_to(r.genus);
    j.at("hilbert_polynomial").at("slope").get_to(r.pc_slope);
    j.at("hilbert_polynomial").at("intercept").get_to(r.pc_intercept);
    j.at("curve_diagram").get_to(r.curve_diagram);
    j.at("curve_hilbert").get_to(r.curve_hilbert);
    j.at("reg_curve").get_to(r.reg_curve);
    j.at("gamma").get_to(r.gamma);
    j.at("point_diagram").get_to(r.point_diagram);
    j.at("point_hilbert").get_to(r.point_hilbert);
    j.at("mrc").get_to(r.mrc);
    j.at("consistency").get_to(r.consistency);
    j.at("seeds").get_to(r.seeds);
    if (j.contains("rank"))
        r.rank = j.at("rank").get<std::int64_t>();
    else
        r.rank.reset();
    if (j.contains("ulrich"))
        r.ulrich = j.at("ulrich").get<UlrichVerdict>();
    else
        r.ulrich.reset();
    r.semigroup_known = j.contains("semigroup");
    r.semigroup_is_member = false;
    r.semigroup_decomposition.reset();
    if (r.semigroup_known) {
        j.at("semigroup").at("member").get_to(r.semigroup_is_member);
        if (j.at("semigroup").contains("decomposition"))
            r.semigroup_decomposition =
                j.at("semigroup").at("decomposition").get<SemigroupDecomposition>();
    }
}

inline void to_json(nlohmann::json& j, const TriForm& t) {
    j = nlohmann::json{{"degree", t.deg}, {"coeffs", t.coeffs}};
}

inline void from_json(const nlohmann::json& j, TriForm& t) {
    j.at("degree").get_to(t.deg);
    j.at("coeffs").get_to(t.coeffs);
}

// Blowup models round-trip through JSON so a run's geometry can be pinned
// down exactly.
inline nlohmann::json model_serialize(const BlowupModel& m) {
    return nlohmann::json{{"d", m.d()},
                          {"prime", m.fld.modulus()},
                          {"seed", m.seed},
                          {"base_points", m.base_points},
                          {"anticanonical", m.anticanonical}};
}

inline BlowupModel model_deserialize(const nlohmann::json& j) {
    const PrimeField f(j.at("prime").get<std::uint64_t>());
    BlowupModel m{DelPezzo(j.at("d").get<int>()),
                  f,
                  j.at("seed").get<std::uint64_t>(),
                  j.at("base_points").get<std::vector<std::vector<std::uint32_t>>>(),
                  j.at("anticanonical").get<std::vector<TriForm>>()};
    if (m.anticanonical.size() != static_cast<std::size_t>(m.d()) + 1)
        throw std::invalid_argument("model_deserialize: wrong anticanonical dimension");
    return m;
}

inline nlohmann::json report_serialize(const MrcReport& r) { return nlohmann::json(r); }

inline MrcReport report_deserialize(const nlohmann::json& j) { return j.get<MrcReport>(); }

}  // namespace ulrich
