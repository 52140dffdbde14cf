#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "test_support.hpp"
#include "ulrich/lattice.hpp"
#include "ulrich/rng.hpp"

using namespace ulrich;

namespace {
const DivClass kDegree9Class(5, {-4, -1, -1, 0, 0, 0});

DivClass random_class(SplitMix64& rng, int k, std::int64_t bound) {
    DivClass D(static_cast<std::int64_t>(rng.below(2 * bound + 1)) - bound, {});
    for (int i = 0; i < k; ++i)
        D.b.push_back(static_cast<std::int64_t>(rng.below(2 * bound + 1)) - bound);
    return D;
}
}  // namespace

TEST_CASE("intersection form") {
    const auto H = hyperplane_class(6);
    const auto K = canonical_class(6);
    CHECK(intersect(H, H) == 3);
    CHECK(intersect(K, K) == 3);
    CHECK(intersect(kDegree9Class, H) == 9);
    CHECK_THROWS_AS(intersect(H, hyperplane_class(4)), std::invalid_argument);

    // Gram matrix of the basis l, e_1..e_k is diag(1, -1, ..., -1)
    const int k = 6;
    const auto l = line_pullback(k);
    CHECK(intersect(l, l) == 1);
    for (int i = 0; i < k; ++i) {
        const auto ei = exceptional_class(k, i);
        CHECK(intersect(l, ei) == 0);
        for (int j = 0; j < k; ++j)
            CHECK(intersect(ei, exceptional_class(k, j)) == (i == j ? -1 : 0));
    }

    // H^2 = d = K^2 on every surface in range
    for (int d = 3; d <= 9; ++d) {
        DelPezzo X(d);
        const auto Hd = hyperplane_class(X.blowup_count());
        const auto Kd = canonical_class(X.blowup_count());
        CHECK(intersect(Hd, Hd) == d);
        CHECK(intersect(Kd, Kd) == d);
        CHECK(intersect(Hd, Kd) == -d);
    }
}

TEST_CASE("degree and genus") {
    CHECK(degree(kDegree9Class) == 9);
    CHECK(degree(exceptional_class(6, 0)) == 1);
    CHECK(degree(hyperplane_class(6).scaled(3)) == 9);
    CHECK(arith_genus(kDegree9Class) == 0);

    // every rational normal curve class has genus 0, every H+Q has genus d
    for (int d = 3; d <= 7; ++d) {
        DelPezzo X(d);
        const auto H = hyperplane_class(X.blowup_count());
        const auto rncs = enumerate_classes(X, d, d - 2);
        CHECK(!rncs.empty());
        for (const auto& q : rncs) {
            CHECK(arith_genus(q) == 0);
            CHECK(arith_genus(H + q) == d);
        }
    }
}

TEST_CASE("adjunction parity on random classes") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = static_cast<int>(rng.below(7));
        const auto D = random_class(rng, k, 6);
        const auto s = self_intersection(D) + intersect(D, canonical_class(k));
        CHECK(s % 2 == 0);
    }
}

TEST_CASE("class enumeration") {
    DelPezzo X3(3);
    CHECK(enumerate_classes(X3, 1, -1).size() == 27);
    CHECK(enumerate_classes(X3, 3, 1).size() == 72);
    CHECK(enumerate_classes(DelPezzo(8), 8, 6).empty());
    CHECK(enumerate_classes(DelPezzo(9), 9, 7).empty());
    CHECK(enumerate_classes(DelPezzo(9), 9, 9).size() == 1);  // 3l itself
    CHECK_THROWS_AS(enumerate_classes(X3, 0, 0), std::invalid_argument);

    SECTION("sorted and duplicate-free") {
        const auto lines = enumerate_classes(X3, 1, -1);
        CHECK(std::is_sorted(lines.begin(), lines.end()));
        CHECK(std::adjacent_find(lines.begin(), lines.end()) == lines.end());
        for (const auto& e : lines) {
            CHECK(self_intersection(e) == -1);
            CHECK(intersect(e, canonical_class(6)) == -1);
        }
    }
    SECTION("invariant under coordinate permutations") {
        const auto rncs = enumerate_classes(X3, 3, 1);
        std::set<DivClass> expect(rncs.begin(), rncs.end());
        for (const auto& q : rncs) {
            DivClass perm = q;
            std::rotate(perm.b.begin(), perm.b.begin() + 2, perm.b.end());
            CHECK(expect.count(perm) == 1);
        }
    }
}

TEST_CASE("nef test") {
    DelPezzo X(3);
    CHECK(is_nef(X, hyperplane_class(6)));
    CHECK_FALSE(is_nef(X, exceptional_class(6, 0)));  // e_1 . e_1 = -1
    CHECK(is_nef(X, kDegree9Class));
    CHECK_FALSE(is_nef(X, DivClass(-1, {0, 0, 0, 0, 0, 0})));
}

TEST_CASE("ulrich numeric criteria") {
    DelPezzo X(3);
    SECTION("rational normal curve classes pass at rank 1") {
        for (const auto& q : enumerate_classes(X, 3, 1)) {
            const auto v = ulrich_numeric_check(X, q, 1);
            CHECK(v.overall);
            CHECK(v.c2 == Rat(0));
        }
    }
    SECTION("the degree-9 rational curve fails the lower bound at rank 3") {
        const auto v = ulrich_numeric_check(X, kDegree9Class, 3);
        CHECK(v.deg_ok);
        CHECK(v.parity_ok);
        CHECK_FALSE(v.lower_bound_ok);  // 7 < 9
        CHECK(v.upper_bound_ok);
        CHECK(v.nef_ok);
        CHECK_FALSE(v.overall);
    }
    SECTION("rH passes for 3 <= d <= 7, r <= 5") {
        for (int d = 3; d <= 7; ++d) {
            DelPezzo Xd(d);
            const auto H = hyperplane_class(Xd.blowup_count());
            for (std::int64_t r = 1; r <= 5; ++r) {
                const auto v = ulrich_numeric_check(Xd, H.scaled(r), r);
                CHECK(v.overall);
                CHECK(v.c2 == Rat(d * r * r - (d - 2) * r, 2));
            }
        }
    }
    SECTION("H+Q at rank 2: c2 = 4 = g-1+r") {
        const auto D = hyperplane_class(6) + line_pullback(6);
        const auto v = ulrich_numeric_check(X, D, 2);
        CHECK(v.overall);
        CHECK(v.c2 == Rat(4));
        CHECK(arith_genus(D) - 1 + 2 == 4);
    }
    CHECK_THROWS_AS(ulrich_numeric_check(X, kDegree9Class, 0), std::invalid_argument);
}

TEST_CASE("AG surface Chern conditions") {
    SECTION("quadric line class F_1") {
        AgParams quadric(2, -2, 0);
        const auto r = ag_ulrich_conditions(quadric, 1, 1, 0);
        CHECK(r.expected_c1H == Rat(1));
        CHECK(r.expected_c2 == Rat(0));
        CHECK(r.pass);
    }
    SECTION("quadric: every curve m1 F1 + m2 F2 passes at rank m1 + m2") {
        // hyperbolic plane [[0,1],[1,0]]: c1 . H = m1 + m2, c1^2 = 2 m1 m2
        SplitMix64 rng(99);
        for (int trial = 0; trial < 50; ++trial) {
            const auto m1 = static_cast<std::int64_t>(rng.below(8));
            const auto m2 = static_cast<std::int64_t>(1 + rng.below(8));
            const auto r = ag_ulrich_conditions(AgParams(2, -2, 0), m1 + m2, m1 + m2, 2 * m1 * m2);
            CHECK(r.pass);
            CHECK(r.expected_c2 == Rat(m1 * m2));
        }
    }
    SECTION("del Pezzo specialization m = -1 matches the direct criteria") {
        SplitMix64 rng(4242);
        for (int trial = 0; trial < 100; ++trial) {
            const int d = 3 + static_cast<int>(rng.below(5));
            DelPezzo X(d);
            const auto D = random_class(rng, X.blowup_count(), 5);
            const auto r = static_cast<std::int64_t>(1 + rng.below(5));
            const auto ag = ag_ulrich_conditions(AgParams(d, -1, 0), r, degree(D), self_intersection(D));
            CHECK(ag.expected_c2 == Rat(self_intersection(D) - (d - 2) * r, 2));
            CHECK(ag.expected_c1H == Rat(d * r));
        }
    }
    SECTION("m >= 0 would need too many canonical sections") {
        CHECK(canonical_sections_required(5, -1) == Rat(0));
        CHECK(canonical_sections_required(5, -2) == Rat(0));
        CHECK(canonical_sections_required(3, 1) == Rat(9));
        for (std::int64_t d = 2; d <= 9; ++d) {
            CHECK(canonical_sections_required(d, 0) == Rat(d));
            CHECK(canonical_sections_required(d, 0) != Rat(1));
        }
    }
    CHECK_THROWS_AS(AgParams(2, -3, 0), std::invalid_argument);
    CHECK_THROWS_AS(AgParams(1, -1, 0), std::invalid_argument);
}

TEST_CASE("dual twist") {
    SECTION("rH is self-dual on a del Pezzo") {
        for (int d = 3; d <= 9; ++d)
            for (std::int64_t r = 1; r <= 4; ++r) {
                const auto t = dual_twist_c1(AgParams(d, -1, 0), r, d * r, d * r * r);
                CHECK(t.c1H == d * r);
                CHECK(t.c1sq == d * r * r);
            }
    }
    SECTION("quadric F_1 maps to the numerics of F_2") {
        const auto t = dual_twist_c1(AgParams(2, -2, 0), 1, 1, 0);
        CHECK(t.c1H == 1);
        CHECK(t.c1sq == 0);
    }
    SECTION("involution and pass preservation on random data") {
        SplitMix64 rng(31337);
        for (int trial = 0; trial < 100; ++trial) {
            const std::int64_t d = 2 + static_cast<std::int64_t>(rng.below(8));
            const std::int64_t m = -2 + static_cast<std::int64_t>(rng.below(4));
            const std::int64_t h0K = static_cast<std::int64_t>(rng.below(3));
            const std::int64_t r = 1 + static_cast<std::int64_t>(rng.below(5));
            AgParams ag(d, m, h0K);
            const std::int64_t c1H = static_cast<std::int64_t>(rng.below(40)) - 5;
            const std::int64_t c1sq = static_cast<std::int64_t>(rng.below(60)) - 10;
            const auto once = dual_twist_c1(ag, r, c1H, c1sq);
            const auto twice = dual_twist_c1(ag, r, once.c1H, once.c1sq);
            CHECK(twice.c1H == c1H);
            CHECK(twice.c1sq == c1sq);
            const bool pass0 = ag_ulrich_conditions(ag, r, c1H, c1sq).pass;
            const bool pass1 = ag_ulrich_conditions(ag, r, once.c1H, once.c1sq).pass;
            CHECK(pass0 == pass1);
        }
    }
}

TEST_CASE("brute-force enumeration cross-check (small cases)") {
    DelPezzo X(3);
    CHECK(testsupport::brute_enumerate(X, 1, -1, 7) == enumerate_classes(X, 1, -1));
    DelPezzo X8(8);
    CHECK(testsupport::brute_enumerate(X8, 8, 6, 30) == enumerate_classes(X8, 8, 6));
}
