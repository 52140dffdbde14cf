#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "test_support.hpp"
#include "ulrich/matrix.hpp"

using namespace ulrich;

TEST_CASE("rank basics") {
    PrimeField f(32003);
    CHECK(rank(DenseMatrix::identity(f, 6)) == 6);
    CHECK(rank(DenseMatrix(f, 4, 9)) == 0);
    CHECK(rank(DenseMatrix(f, 0, 5)) == 0);
}

TEST_CASE("rank agrees with the minor oracle") {
    PrimeField f(32003);
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 4; ++trial) {
        const auto M = testsupport::random_matrix(f, 5, 7, rng);
        CHECK(rank(M) == testsupport::minor_rank_oracle(M));
    }
    // engineered rank deficiency
    for (std::size_t r : {1u, 2u, 3u}) {
        const auto A = testsupport::random_matrix(f, 5, r, rng);
        const auto B = testsupport::random_matrix(f, r, 7, rng);
        const auto C = mat_mul(A, B);
        CHECK(rank(C) == r);
        CHECK(testsupport::minor_rank_oracle(C) == r);
    }
    // a full-rank 8x12: the oracle only needs one nonzero 8x8 minor
    const auto W = testsupport::random_matrix(f, 8, 12, rng);
    CHECK(rank(W) == 8);
    CHECK(testsupport::minor_rank_oracle(W) == 8);
}

TEST_CASE("rank invariances") {
    PrimeField f(32003);
    SplitMix64 rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        auto M = testsupport::random_matrix(f, 6, 9, rng);
        const std::size_t r = rank(M);
        CHECK(rank(M.transposed()) == r);

        DenseMatrix scaled = M;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            const auto c = rng.nonzero_field_elem(f);
            for (std::size_t j = 0; j < M.cols(); ++j) scaled.set(i, j, f.mul(c, M.at(i, j)));
        }
        CHECK(rank(scaled) == r);

        std::vector<std::size_t> perm(M.rows());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        for (std::size_t i = perm.size(); i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
        DenseMatrix shuffled(f, M.rows(), M.cols());
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (std::size_t j = 0; j < M.cols(); ++j) shuffled.set(i, j, M.at(perm[i], j));
        CHECK(rank(shuffled) == r);
        CHECK(echelon(shuffled).rref == echelon(M).rref);  // RREF is unique
    }
}

TEST_CASE("kernel basis") {
    PrimeField f7(7);
    SECTION("identity has trivial kernel") {
        CHECK(kernel_basis(DenseMatrix::identity(f7, 5)).empty());
    }
    SECTION("zero matrix kernel is the standard basis") {
        const auto kb = kernel_basis(DenseMatrix(f7, 3, 4));
        REQUIRE(kb.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) CHECK(kb[i][j] == (i == j ? 1u : 0u));
    }
    SECTION("[1 1] over F_7") {
        DenseMatrix M(f7, 1, 2);
        M.set(0, 0, 1);
        M.set(0, 1, 1);
        const auto kb = kernel_basis(M);
        REQUIRE(kb.size() == 1);
        // proportional to (1, 6)
        CHECK(kb[0][1] == f7.mul(kb[0][0], 6));
        CHECK(kb[0][0] != 0);
    }
    SECTION("kernel properties on random matrices") {
        PrimeField f(32003);
        SplitMix64 rng(5150);
        for (int trial = 0; trial < 8; ++trial) {
            const auto M = testsupport::random_matrix(f, 5, 9, rng);
            const auto kb = kernel_basis(M);
            CHECK(kb.size() == M.cols() - rank(M));
            DenseMatrix K(f, kb.size(), M.cols());
            for (std::size_t i = 0; i < kb.size(); ++i) {
                const auto mv = mat_vec(M, kb[i]);
                for (auto v : mv) CHECK(v == 0);
                for (std::size_t j = 0; j < M.cols(); ++j) K.set(i, j, kb[i][j]);
            }
            CHECK(rank(K) == kb.size());  // linearly independent
        }
    }
}

TEST_CASE("matrix product sanity") {
    PrimeField f(101);
    SplitMix64 rng(3);
    const auto A = testsupport::random_matrix(f, 4, 6, rng);
    CHECK(mat_mul(DenseMatrix::identity(f, 4), A) == A);
    CHECK(mat_mul(A, DenseMatrix::identity(f, 6)) == A);
    CHECK_THROWS_AS(mat_mul(A, A), std::invalid_argument);
}
