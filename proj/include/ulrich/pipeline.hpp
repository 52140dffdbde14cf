#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/betti.hpp"
#include "ulrich/geometry.hpp"
#include "ulrich/ideal.hpp"
#include "ulrich/lattice.hpp"
#include "ulrich/points.hpp"
#include "ulrich/rng.hpp"
#include "ulrich/semigroup.hpp"

namespace ulrich {

struct RunConfig {
    std::uint64_t prime = 32003;
    std::uint64_t seed = 1;
    std::optional<std::int64_t> gamma_override;
    int truncation_margin = 2;
    int retry_budget = 3;
};

struct PipelineSeeds {
    std::uint64_t model = 0;
    std::uint64_t member = 0;
    std::uint64_t curve_sample = 0;
    std::uint64_t gamma_sample = 0;
};

struct ConsistencyFlags {
    bool hilbert_polynomial_onset = false;
    bool shared_rows_match = false;
    std::optional<bool> semigroup_mrc_agreement;
};

/// Full record of one Ulrich <-> MRC experiment for a class D on X_d.
struct MrcReport {
    int schema_version = 1;
    int d = 3;
    DivClass cls;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::int64_t curve_degree = 0;
    std::int64_t genus = 0;
    std::optional<std::int64_t> rank;          // degree/d when integral
    std::optional<UlrichVerdict> ulrich;       // present iff rank is
    bool semigroup_known = false;
    bool semigroup_is_member = false;          // meaningful when known
    std::optional<SemigroupDecomposition> semigroup_decomposition;
    std::int64_t pc_slope = 0;                 // P_C(t) = slope*t + intercept
    std::int64_t pc_intercept = 0;
    BettiDiagram curve_diagram;
    std::vector<std::int64_t> curve_hilbert;   // h_{S/I_C}(t), t = 0..T
    std::size_t reg_curve = 0;
    std::int64_t gamma = 0;
    BettiDiagram point_diagram;
    std::vector<std::int64_t> point_hilbert;   // h_{S/I_Gamma}(t), t = 0..T
    MrcVerdict mrc;
    ConsistencyFlags consistency;
    PipelineSeeds seeds;
};

struct StablePointDiagram {
    BettiDiagram diagram;
    int truncation;
    std::vector<std::int64_t> hilbert;  // h_{S/I}(t), t = 0..truncation
};

/// Diagram of a finite point set, growing the truncation until two zero rows
/// certify the resolution is complete.
inline StablePointDiagram stable_diagram_of_points(const ProjPointSet& P, int T0 = 3,
                                                   int max_steps = 40) {
    int T = T0 < 3 ? 3 : T0;
    for (int step = 0; step < max_steps; ++step, T += 2) {
        const auto I = GradedIdealTruncation::from_points(P, T);
        if (auto dg = betti_diagram_until_stable(I)) {
            std::vector<std::int64_t> h;
            for (int t = 0; t <= T; ++t) h.push_back(static_cast<std::int64_t>(I.hilb(t)));
            return {std::move(*dg), T, std::move(h)};
        }
    }
    throw std::runtime_error("stable_diagram_of_points: diagram did not stabilize by T=" +
                             std::to_string(T));
}

struct StableCurveData {
    GradedIdealTruncation truncation;
    BettiDiagram diagram;
    std::size_t reg;
};

/// Truncated ideal and stabilized diagram of a sampled curve; the truncation
/// degree starts at the heuristic T0 and grows until two zero rows appear.
inline StableCurveData stable_diagram_from_sampler(PrimeField f, std::size_t n,
                                                   const GradedIdealTruncation::PointSampler& sampler,
                                                   std::uint64_t seed, int T0, int attempts = 3,
                                                   int max_steps = 40) {
    int T = T0 < 3 ? 3 : T0;
    for (int step = 0; step < max_steps; ++step, T += 2) {
        auto I = GradedIdealTruncation::from_sampler(f, n, T, sampler, seed, attempts);
        if (auto dg = betti_diagram_until_stable(I)) {
            const std::size_t reg = regularity(*dg);
            return {std::move(I), std::move(*dg), reg};
        }
    }
    throw std::runtime_error("stable_diagram_from_sampler: diagram did not stabilize by T=" +
                             std::to_string(T));
}

/// The Ulrich <-> MRC experiment for (d, D): lattice checks, semigroup
/// membership where generators are known, a plane realization of a general
/// member of |D|, its truncated ideal and Betti diagram, then the diagram of
/// gamma general points on it and the MRC verdict.
inline MrcReport mrc_pipeline(int d, const DivClass& D, const RunConfig& cfg) {
    const PrimeField f(cfg.prime);
    const DelPezzo X(d);
    if (D.k() != static_cast<std::size_t>(X.blowup_count()))
        throw std::invalid_argument("mrc_pipeline: class has wrong lattice rank for d=" +
                                    std::to_string(d));

    MrcReport rep;
    rep.d = d;
    rep.cls = D;
    rep.prime = cfg.prime;
    rep.seed = cfg.seed;
    rep.curve_degree = degree(D);
    rep.genus = arith_genus(D);
    if (rep.curve_degree > 0 && rep.curve_degree % d == 0) {
        rep.rank = rep.curve_degree / d;
        rep.ulrich = ulrich_numeric_check(X, D, *rep.rank);
    }
    if (d == 3 || d == 9) {
        rep.semigroup_known = true;
        auto dec = semigroup_member(X, D, semigroup_generators(X));
        rep.semigroup_is_member = dec.has_value();
        rep.semigroup_decomposition = std::move(dec);
    }

    rep.seeds.model = derive_seed(cfg.seed, 1);
    rep.seeds.member = derive_seed(cfg.seed, 2);
    rep.seeds.curve_sample = derive_seed(cfg.seed, 3);
    rep.seeds.gamma_sample = derive_seed(cfg.seed, 4);

    const BlowupModel model = make_blowup_model(f, d, rep.seeds.model);

    // realize a general member, re-seeding while the spot check objects
    std::optional<PlaneCurveRealization> curve;
    for (int attempt = 0; attempt <= cfg.retry_budget; ++attempt) {
        auto cand = linear_system_member(model, D, derive_seed(rep.seeds.member, static_cast<std::uint64_t>(attempt)));
        const auto probe = sample_curve_points_full(model, cand, 48,
                                                    derive_seed(rep.seeds.member, 0x700u + static_cast<std::uint64_t>(attempt)));
        if (smoothness_spotcheck(model, cand, probe.plane_points).ok) {
            curve = std::move(cand);
            break;
        }
        if (attempt == cfg.retry_budget)
            throw std::runtime_error("mrc_pipeline: no smooth member found for " + D.str() +
                                     " after " + std::to_string(attempt + 1) +
                                     " attempts (seed " + std::to_string(cfg.seed) + ")");
    }

    const auto n = static_cast<std::size_t>(d);  // ambient projective dimension
    const GradedIdealTruncation::PointSampler sampler =
        [&model, &curve](std::size_t count, std::uint64_t s) {
            return sample_curve_points(model, *curve, count, s);
        };
    const int T0 = static_cast<int>((rep.curve_degree + static_cast<std::int64_t>(n) - 1) /
                                        static_cast<std::int64_t>(n) +
                                    rep.genus + cfg.truncation_margin);
    auto curve_data = stable_diagram_from_sampler(f, n, sampler, rep.seeds.curve_sample, T0,
                                                  cfg.retry_budget);
    rep.curve_diagram = std::move(curve_data.diagram);
    for (int t = 0; t <= curve_data.truncation.truncation_degree(); ++t)
        rep.curve_hilbert.push_back(static_cast<std::int64_t>(curve_data.truncation.hilb(t)));
    rep.reg_curve = curve_data.reg;
    rep.pc_slope = rep.curve_degree;
    rep.pc_intercept = 1 - rep.genus;

    rep.consistency.hilbert_polynomial_onset = true;
    for (int t = static_cast<int>(rep.reg_curve); t <= curve_data.truncation.truncation_degree(); ++t) {
        const auto expect = rep.pc_slope * t + rep.pc_intercept;
        if (expect < 0 || curve_data.truncation.hilb(t) != static_cast<std::size_t>(expect)) {
            rep.consistency.hilbert_polynomial_onset = false;
            break;
        }
    }

    const std::int64_t pc_at_reg = rep.pc_slope * static_cast<std::int64_t>(rep.reg_curve) + rep.pc_intercept;
    const std::int64_t gamma_floor = rep.genus > pc_at_reg ? rep.genus : pc_at_reg;
    if (cfg.gamma_override) {
        if (*cfg.gamma_override < gamma_floor)
            throw std::invalid_argument("mrc_pipeline: gamma override " +
                                        std::to_string(*cfg.gamma_override) + " is below the floor " +
                                        std::to_string(gamma_floor));
        rep.gamma = *cfg.gamma_override;
    } else {
        rep.gamma = gamma_floor + 2;
    }

    const ProjPointSet gamma_pts =
        sample_curve_points(model, *curve, static_cast<std::size_t>(rep.gamma), rep.seeds.gamma_sample);
    auto point_data = stable_diagram_of_points(gamma_pts, static_cast<int>(rep.reg_curve) + 1 +
                                                              cfg.truncation_margin);
    rep.point_diagram = std::move(point_data.diagram);
    rep.point_hilbert = std::move(point_data.hilbert);
    rep.mrc = mrc_check(rep.point_diagram, rep.reg_curve);

    rep.consistency.shared_rows_match = true;
    for (std::size_t q = 0; q + 1 <= rep.reg_curve; ++q)
        for (std::size_t i = 0; i < rep.curve_diagram.ncols(); ++i)
            if (rep.curve_diagram.entry(i, q) != rep.point_diagram.entry(i, q))
                rep.consistency.shared_rows_match = false;
    if (rep.semigroup_known)
        rep.consistency.semigroup_mrc_agreement = (rep.semigroup_is_member == rep.mrc.holds);
    return rep;
}

}  // namespace ulrich
