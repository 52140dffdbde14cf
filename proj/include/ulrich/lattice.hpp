#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ulrich/rational.hpp"

namespace ulrich {

/// Del Pezzo surface of degree d, realized as the blowup of P^2 at 9-d points.
struct DelPezzo {
    int d;

    explicit DelPezzo(int degree) : d(degree) {
        if (d < 3 || d > 9) throw std::invalid_argument("DelPezzo: degree must be in 3..9");
    }
    int blowup_count() const noexcept { return 9 - d; }
};

/// Divisor class a*l + b_1*e_1 + ... + b_k*e_k in the Picard lattice of a
/// blowup of P^2, intersection form diag(+1, -1, ..., -1).
struct DivClass {
    std::int64_t a = 0;
    std::vector<std::int64_t> b;

    DivClass() = default;
    DivClass(std::int64_t a_, std::vector<std::int64_t> b_) : a(a_), b(std::move(b_)) {}

    std::size_t k() const noexcept { return b.size(); }

    friend DivClass operator+(const DivClass& x, const DivClass& y) {
        if (x.k() != y.k()) throw std::invalid_argument("DivClass: mismatched lattice rank");
        DivClass r = x;
        for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] += y.b[i];
        r.a += y.a;
        return r;
    }
    friend DivClass operator-(const DivClass& x, const DivClass& y) {
        if (x.k() != y.k()) throw std::invalid_argument("DivClass: mismatched lattice rank");
        DivClass r = x;
        for (std::size_t i = 0; i < r.b.size(); ++i) r.b[i] -= y.b[i];
        r.a -= y.a;
        return r;
    }
    DivClass scaled(std::int64_t m) const {
        DivClass r = *this;
        r.a *= m;
        for (auto& v : r.b) v *= m;
        return r;
    }
    bool is_zero() const noexcept {
        if (a != 0) return false;
        return std::all_of(b.begin(), b.end(), [](std::int64_t v) { return v == 0; });
    }

    auto operator<=>(const DivClass&) const = default;

    std::string str() const {
        std::string s = "(" + std::to_string(a);
        for (auto v : b) s += "," + std::to_string(v);
        return s + ")";
    }
};

inline DivClass hyperplane_class(int k) { return DivClass(3, std::vector<std::int64_t>(k, -1)); }
inline DivClass canonical_class(int k) { return DivClass(-3, std::vector<std::int64_t>(k, 1)); }
inline DivClass line_pullback(int k) { return DivClass(1, std::vector<std::int64_t>(k, 0)); }
inline DivClass exceptional_class(int k, int i) {
    DivClass e(0, std::vector<std::int64_t>(k, 0));
    e.b.at(static_cast<std::size_t>(i)) = 1;
    return e;
}

inline std::int64_t intersect(const DivClass& x, const DivClass& y) {
    if (x.k() != y.k()) throw std::invalid_argument("intersect: mismatched lattice rank");
    std::int64_t v = x.a * y.a;
    for (std::size_t i = 0; i < x.b.size(); ++i) v -= x.b[i] * y.b[i];
    return v;
}

inline std::int64_t self_intersection(const DivClass& x) { return intersect(x, x); }

/// D . H, the degree of D in the anticanonical embedding.
inline std::int64_t degree(const DivClass& x) {
    return intersect(x, hyperplane_class(static_cast<int>(x.k())));
}

/// Arithmetic genus from adjunction: g = (D^2 + D.K)/2 + 1.
inline std::int64_t arith_genus(const DivClass& x) {
    const std::int64_t dk = intersect(x, canonical_class(static_cast<int>(x.k())));
    const std::int64_t s = self_intersection(x) + dk;
    if (s % 2 != 0) throw std::logic_error("arith_genus: D^2 + D.K odd, lattice corrupted");
    return s / 2 + 1;
}

namespace detail {

inline std::int64_t isqrt_floor(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// DFS over integer vectors with prescribed sum and sum of squares; emits in
/// lexicographic order.
inline void sum_square_vectors(std::size_t pos, std::size_t k, std::int64_t sum_left,
                               std::int64_t sq_left, std::vector<std::int64_t>& cur,
                               std::vector<std::vector<std::int64_t>>& out) {
    if (pos == k) {
        if (sum_left == 0 && sq_left == 0) out.push_back(cur);
        return;
    }
    const std::int64_t rem = static_cast<std::int64_t>(k - pos);
    // Cauchy-Schwarz: sum_left^2 <= rem * sq_left
    if (sq_left < 0 || sum_left * sum_left > rem * sq_left) return;
    const std::int64_t bound = isqrt_floor(sq_left);
    for (std::int64_t v = -bound; v <= bound; ++v) {
        cur[pos] = v;
        sum_square_vectors(pos + 1, k, sum_left - v, sq_left - v * v, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace detail

/// All classes with D.H = deg and D^2 = selfint. With both invariants fixed,
/// sum(b_i) and sum(b_i^2) are determined by a, and Cauchy-Schwarz pins a to a
/// finite window, so the search is provably complete.
inline std::vector<DivClass> enumerate_classes(const DelPezzo& X, std::int64_t deg,
                                               std::int64_t selfint) {
    if (deg < 1) throw std::invalid_argument("enumerate_classes: degree must be >= 1");
    const auto k = static_cast<std::size_t>(X.blowup_count());
    std::vector<DivClass> out;
    const std::int64_t span = 6 * (deg < 0 ? -deg : deg) + (selfint < 0 ? -selfint : selfint) + 9;
    for (std::int64_t a = -span; a <= span; ++a) {
        const std::int64_t s = deg - 3 * a;     // required sum of b_i
        const std::int64_t q = a * a - selfint;  // required sum of b_i^2
        if (q < 0) continue;
        if (k == 0) {
            if (s == 0 && q == 0) out.emplace_back(a, std::vector<std::int64_t>{});
            continue;
        }
        if (s * s > static_cast<std::int64_t>(k) * q) continue;
        std::vector<std::int64_t> cur(k, 0);
        std::vector<std::vector<std::int64_t>> vecs;
        detail::sum_square_vectors(0, k, s, q, cur, vecs);
        for (auto& v : vecs) out.emplace_back(a, std::move(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The (-1)-classes E^2 = -1, E.K = -1 (27 lines on the cubic surface).
inline std::vector<DivClass> neg_one_classes(const DelPezzo& X) {
    return enumerate_classes(X, 1, -1);
}

/// Numeric nef test: D.E >= 0 for every (-1)-class and D.H >= 0.
inline bool is_nef(const DelPezzo& X, const DivClass& D) {
    if (D.k() != static_cast<std::size_t>(X.blowup_count()))
        throw std::invalid_argument("is_nef: class does not live on this surface");
    if (degree(D) < 0) return false;
    for (const auto& e : neg_one_classes(X))
        if (intersect(D, e) < 0) return false;
    return true;
}

/// Outcome of the numeric Ulrich first-Chern-class criteria for rank r.
struct UlrichVerdict {
    std::int64_t degree = 0;
    Rat c2;
    bool deg_ok = false;
    bool parity_ok = false;
    bool lower_bound_ok = false;
    bool upper_bound_ok = false;
    bool nef_ok = false;
    bool overall = false;
};

inline UlrichVerdict ulrich_numeric_check(const DelPezzo& X, const DivClass& D, std::int64_t r) {
    if (r < 1) throw std::invalid_argument("ulrich_numeric_check: rank must be positive");
    UlrichVerdict v;
    const std::int64_t d = X.d;
    const std::int64_t dsq = self_intersection(D);
    v.degree = degree(D);
    v.deg_ok = (v.degree == d * r);
    v.parity_ok = ((dsq - (d - 2) * r) % 2 == 0);
    v.lower_bound_ok = ((d - 2) * r * r <= dsq);
    v.upper_bound_ok = (dsq <= d * r * r);
    v.nef_ok = is_nef(X, D);
    v.c2 = Rat(dsq - (d - 2) * r, 2);
    v.overall = v.deg_ok && v.parity_ok && v.lower_bound_ok && v.upper_bound_ok && v.nef_ok;
    return v;
}

/// Numeric data of an arithmetically Gorenstein surface: degree d, K_X = mH,
/// and h^0(K_X).
struct AgParams {
    std::int64_t d;
    std::int64_t m;
    std::int64_t h0K;

    AgParams(std::int64_t d_, std::int64_t m_, std::int64_t h0K_) : d(d_), m(m_), h0K(h0K_) {
        if (d < 2) throw std::invalid_argument("AgParams: degree must be >= 2");
        if (m < -2) throw std::invalid_argument("AgParams: K_X = mH with m < -2 is impossible");
        if (h0K < 0) throw std::invalid_argument("AgParams: h0(K) must be >= 0");
    }
};

struct AgUlrichResult {
    Rat expected_c1H;
    Rat expected_c2;
    bool pass = false;
};

/// Chern conditions for Ulrich bundles on an AG surface:
/// c1.H = ((m+3)/2) d r and c2 = c1^2/2 - dr (m^2+3m+4)/4 + r (1 + h0(K)).
inline AgUlrichResult ag_ulrich_conditions(const AgParams& ag, std::int64_t r, std::int64_t c1H,
                                           std::int64_t c1sq) {
    if (r < 1) throw std::invalid_argument("ag_ulrich_conditions: rank must be positive");
    AgUlrichResult out;
    out.expected_c1H = Rat((ag.m + 3) * ag.d * r, 2);
    out.expected_c2 = Rat(c1sq, 2) - Rat(ag.d * r * (ag.m * ag.m + 3 * ag.m + 4), 4) +
                      Rat(r * (1 + ag.h0K));
    out.pass = (Rat(c1H) == out.expected_c1H) && out.expected_c2.is_integer();
    return out;
}

/// h^0(K_X) forced by the c2 = g-1+r normalization: d (m+1)(m+2) / 2.
inline Rat canonical_sections_required(std::int64_t d, std::int64_t m) {
    if (m < -2) throw std::invalid_argument("canonical_sections_required: m < -2");
    return Rat(d * (m + 1) * (m + 2), 2);
}

struct DualTwist {
    std::int64_t c1H;
    std::int64_t c1sq;
};

/// Chern numerics of E^v(m+3), the Ulrich dual twist. Involutive.
inline DualTwist dual_twist_c1(const AgParams& ag, std::int64_t r, std::int64_t c1H,
                               std::int64_t c1sq) {
    DualTwist t;
    t.c1H = ag.d * r * (ag.m + 3) - c1H;
    t.c1sq = c1sq - 2 * (ag.m + 3) * r * c1H + (ag.m + 3) * (ag.m + 3) * ag.d * r * r;
    return t;
}

}  // namespace ulrich
