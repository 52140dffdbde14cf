#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ulrich/lattice.hpp"

namespace ulrich {

/// A generator of the Ulrich semigroup: a first Chern class together with the
/// rank of a known Ulrich bundle carrying it.
struct SemigroupGenerator {
    DivClass cls;
    std::int64_t rank;

    auto operator<=>(const SemigroupGenerator&) const = default;
};

/// Built-in generating sets. d=3: the 72 rational normal curve classes, each
/// of rank 1. d=9: {(2H, 2), (3H, 3)}. Other degrees are not settled and the
/// caller must supply a list.
inline std::vector<SemigroupGenerator> semigroup_generators(const DelPezzo& X) {
    if (X.d == 3) {
        std::vector<SemigroupGenerator> gens;
        for (auto& q : enumerate_classes(X, 3, 1)) gens.push_back({std::move(q), 1});
        return gens;
    }
    if (X.d == 9) {
        const DivClass H = hyperplane_class(0);
        return {{H.scaled(2), 2}, {H.scaled(3), 3}};
    }
    throw std::invalid_argument("semigroup_generators: no built-in defaults for d=" +
                                std::to_string(X.d) + " (supply generators explicitly)");
}

/// One term of a decomposition: a generator taken with a multiplicity.
struct SemigroupTerm {
    SemigroupGenerator gen;
    std::int64_t count;
};

struct SemigroupDecomposition {
    std::vector<SemigroupTerm> terms;
    std::int64_t total_rank = 0;

    DivClass resum() const {
        DivClass s = terms.at(0).gen.cls.scaled(terms[0].count);
        for (std::size_t i = 1; i < terms.size(); ++i)
            s = s + terms[i].gen.cls.scaled(terms[i].count);
        return s;
    }
};

namespace detail {

inline bool member_dfs(const DivClass& rest, std::int64_t rest_deg, std::size_t from,
                       const std::vector<SemigroupGenerator>& gens,
                       const std::vector<std::int64_t>& gen_degs, std::int64_t deg_gcd,
                       std::vector<std::size_t>& acc) {
    if (rest.is_zero()) return true;
    if (rest_deg <= 0) return false;
    if (deg_gcd > 0 && rest_deg % deg_gcd != 0) return false;
    for (std::size_t i = from; i < gens.size(); ++i) {
        if (gen_degs[i] > rest_deg) continue;
        acc.push_back(i);
        if (member_dfs(rest - gens[i].cls, rest_deg - gen_degs[i], i, gens, gen_degs, deg_gcd, acc))
            return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace detail

/// Search for a decomposition of D as a sum of generators. Degree is strictly
/// additive and every generator has positive degree, so the depth-first search
/// is bounded; generators are tried in lexicographic order, so the witness is
/// deterministic. Returns one decomposition, or nothing.
inline std::optional<SemigroupDecomposition> semigroup_member(
    const DelPezzo& X, const DivClass& D, std::vector<SemigroupGenerator> gens) {
    if (D.k() != static_cast<std::size_t>(X.blowup_count()))
        throw std::invalid_argument("semigroup_member: class does not live on this surface");
    if (D.is_zero()) return std::nullopt;  // the empty sum does not count
    std::sort(gens.begin(), gens.end());
    std::vector<std::int64_t> degs(gens.size());
    std::int64_t g = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        degs[i] = degree(gens[i].cls);
        if (degs[i] <= 0)
            throw std::invalid_argument("semigroup_member: generator of non-positive degree");
        g = std::gcd(g, degs[i]);
    }
    std::vector<std::size_t> acc;
    if (!detail::member_dfs(D, degree(D), 0, gens, degs, g, acc)) return std::nullopt;
    SemigroupDecomposition out;
    for (std::size_t idx : acc) {
        if (!out.terms.empty() && out.terms.back().gen == gens[idx])
            out.terms.back().count += 1;
        else
            out.terms.push_back({gens[idx], 1});
        out.total_rank += gens[idx].rank;
    }
    return out;
}

}  // namespace ulrich
