#include <catch2/catch_amalgamated.hpp>

#include "ulrich/rng.hpp"
#include "ulrich/semigroup.hpp"

using namespace ulrich;

TEST_CASE("built-in generators") {
    const auto g3 = semigroup_generators(DelPezzo(3));
    CHECK(g3.size() == 72);
    for (const auto& g : g3) {
        CHECK(g.rank == 1);
        CHECK(degree(g.cls) == 3);
        CHECK(self_intersection(g.cls) == 1);
    }

    const auto g9 = semigroup_generators(DelPezzo(9));
    REQUIRE(g9.size() == 2);
    const auto H = hyperplane_class(0);
    CHECK(g9[0].cls == H.scaled(2));
    CHECK(g9[0].rank == 2);
    CHECK(g9[1].cls == H.scaled(3));
    CHECK(g9[1].rank == 3);

    CHECK_THROWS_AS(semigroup_generators(DelPezzo(5)), std::invalid_argument);
}

TEST_CASE("membership on the Veronese surface") {
    DelPezzo X(9);
    const auto gens = semigroup_generators(X);
    const auto H = hyperplane_class(0);

    const auto dec = semigroup_member(X, H.scaled(5), gens);
    REQUIRE(dec.has_value());
    CHECK(dec->total_rank == 5);
    CHECK(dec->resum() == H.scaled(5));
    REQUIRE(dec->terms.size() == 2);
    CHECK(dec->terms[0].gen.cls == H.scaled(2));
    CHECK(dec->terms[1].gen.cls == H.scaled(3));

    CHECK_FALSE(semigroup_member(X, H, gens).has_value());
    CHECK_FALSE(semigroup_member(X, H.scaled(0), gens).has_value());
}

TEST_CASE("membership on the cubic surface") {
    DelPezzo X(3);
    const auto gens = semigroup_generators(X);
    const auto H = hyperplane_class(6);

    SECTION("3H is a sum of three rational normal curve classes") {
        const auto dec = semigroup_member(X, H.scaled(3), gens);
        REQUIRE(dec.has_value());
        CHECK(dec->total_rank == 3);
        CHECK(dec->resum() == H.scaled(3));
    }
    SECTION("Q + (2H - Q) = 2H for every rational normal curve class") {
        for (const auto& g : gens) {
            const auto comp = H.scaled(2) - g.cls;
            CHECK(self_intersection(comp) == 1);
            CHECK(degree(comp) == 3);  // 2H - Q is again such a class
        }
        const auto dec = semigroup_member(X, H.scaled(2), gens);
        REQUIRE(dec.has_value());
        CHECK(dec->total_rank == 2);
    }
    SECTION("the degree-9 rational curve class is not a member") {
        CHECK_FALSE(semigroup_member(X, DivClass(5, {-4, -1, -1, 0, 0, 0}), gens).has_value());
    }
    SECTION("random sums of generators are members and re-sum exactly") {
        SplitMix64 rng(808);
        for (int trial = 0; trial < 10; ++trial) {
            DivClass target(0, std::vector<std::int64_t>(6, 0));
            std::int64_t used = 0;
            const int parts = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < parts; ++i) {
                const auto& g = gens[rng.below(gens.size())];
                target = target + g.cls;
                used += g.rank;
            }
            const auto dec = semigroup_member(X, target, gens);
            REQUIRE(dec.has_value());
            CHECK(dec->resum() == target);
            std::int64_t deg_sum = 0;
            for (const auto& t : dec->terms) deg_sum += t.count * degree(t.gen.cls);
            CHECK(deg_sum == degree(target));
            CHECK(dec->total_rank == used);  // all generators have rank 1 here
        }
    }
}

TEST_CASE("generator validation") {
    DelPezzo X(9);
    std::vector<SemigroupGenerator> bad = {{hyperplane_class(0).scaled(0), 1}};
    CHECK_THROWS_AS(semigroup_member(X, hyperplane_class(0), bad), std::invalid_argument);
    CHECK_THROWS_AS(semigroup_member(DelPezzo(3), hyperplane_class(0),
                                     semigroup_generators(DelPezzo(3))),
                    std::invalid_argument);
}
