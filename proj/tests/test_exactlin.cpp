#include "doctest.h"

#include <random>

#include "lrw/exactlin.hpp"
#include "oracle.hpp"

using lrw::RatMatrix;
using lrw::Rational;
using lrw::RatVector;

namespace {

RatMatrix random_matrix(std::mt19937& gen, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const long num = static_cast<long>(gen() % 7) - 3;
            const long den = static_cast<long>(gen() % 3) + 1;
            m(r, c) = Rational(num, den);
        }
    return m;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK_THROWS_AS((void)Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS((void)Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rref examples") {
    auto id = lrw::rref(RatMatrix::identity(2));
    CHECK(id.matrix == RatMatrix::identity(2));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1});

    auto r = lrw::rref(RatMatrix(2, 2, {2, 4, 1, 2}));
    CHECK(r.matrix == RatMatrix(2, 2, {1, 2, 0, 0}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref of random 5x7 matches a shuffled-row Gauss-Jordan oracle") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 25; ++trial) {
        const RatMatrix m = random_matrix(gen, 5, 7);
        const auto ours = lrw::rref(m);
        const auto ref = oracle::shuffled_rref(m, 100 + trial);
        REQUIRE(ours.pivots.size() == ref.size());
        for (std::size_t r = 0; r < ref.size(); ++r)
            for (std::size_t c = 0; c < 7; ++c) CHECK(ours.matrix(r, c).raw() == ref[r][c]);
        for (std::size_t r = ref.size(); r < 5; ++r) CHECK(lrw::is_zero(ours.matrix.row(r)));
    }
}

TEST_CASE("rref invariants: idempotence and rank-nullity") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + gen() % 6, cols = 1 + gen() % 6;
        RatMatrix m = random_matrix(gen, rows, cols);
        if (trial % 3 == 0) {
            // force dependent rows
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rational(2);
        }
        const auto once = lrw::rref(m);
        CHECK(lrw::rref(once.matrix).matrix == once.matrix);
        const auto ns = lrw::nullspace(m);
        CHECK(once.pivots.size() + ns.dim() == cols);
        for (const auto& v : ns.basis()) CHECK(lrw::is_zero(m * v));
    }
}

TEST_CASE("nullspace examples") {
    CHECK(lrw::nullspace(RatMatrix::identity(3)).dim() == 0);
    CHECK(lrw::nullspace(RatMatrix(3, 3)) == lrw::Subspace::full(3));
}

TEST_CASE("subspace representation is canonical") {
    std::mt19937 gen(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<RatVector> base;
        for (int k = 0; k < 3; ++k) base.push_back(random_matrix(gen, 1, 5).row(0));
        const auto s = lrw::Subspace::span(5, base);
        // random invertible recombination of the same vectors
        std::vector<RatVector> other;
        for (int k = 0; k < 3; ++k) {
            RatVector v(5);
            for (int j = 0; j < 3; ++j) lrw::axpy(v, Rational(static_cast<long>(gen() % 5) - 2), base[j]);
            lrw::axpy(v, Rational(1), base[k]);
            lrw::axpy(v, Rational(3), base[k]);
            other.push_back(v);
        }
        const auto t = lrw::Subspace::span(5, other);
        if (t.dim() == s.dim()) CHECK(t == s);
        for (const auto& v : other) CHECK(s.contains(v));
    }
}

TEST_CASE("subspace coordinates") {
    const auto s = lrw::Subspace::span(3, {{1, 0, 1}, {0, 1, 1}});
    auto c = s.coordinates(RatVector{2, 3, 5});
    REQUIRE(c);
    CHECK(*c == RatVector{2, 3});
    CHECK_FALSE(s.coordinates(RatVector{0, 0, 1}));
    CHECK(s.combine(*c) == RatVector{2, 3, 5});
}

TEST_CASE("solve") {
    const RatVector b{Rational(1, 3), -2, 5};
    auto x = lrw::solve(RatMatrix::identity(3), b);
    REQUIRE(x);
    CHECK(*x == b);

    CHECK_FALSE(lrw::solve(RatMatrix(2, 2, {1, 1, 1, 1}), RatVector{1, 2}));

    // Free variables are set to zero.
    auto y = lrw::solve(RatMatrix(1, 3, {1, 2, 3}), RatVector{6});
    REQUIRE(y);
    CHECK(*y == RatVector{6, 0, 0});

    // Reeb system of dz + x dy at the origin: omega row then d omega columns.
    RatMatrix reeb(4, 3, {0, 0, 1,   0, -1, 0,   1, 0, 0,   0, 0, 0});
    auto r = lrw::solve(reeb, RatVector{1, 0, 0, 0});
    REQUIRE(r);
    CHECK(*r == RatVector{0, 0, 1});
}

TEST_CASE("inverse") {
    const RatMatrix m(2, 2, {1, 2, 3, 4});
    CHECK(lrw::inverse(m) * m == RatMatrix::identity(2));
    CHECK_THROWS_AS((void)lrw::inverse(RatMatrix(2, 2, {1, 2, 2, 4})), std::domain_error);
}

TEST_CASE("large intermediate values stay exact") {
    // Hilbert matrix: entries 1/(i+j+1); its inverse has large integers.
    const std::size_t n = 8;
    RatMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = Rational(1, static_cast<long>(i + j + 1));
    const RatMatrix inv = lrw::inverse(h);
    CHECK(inv * h == RatMatrix::identity(n));
    // (H_n^-1)_{nn} = (2n-1) * binom(2n-2, n-1)^2
    CHECK(inv(n - 1, n - 1) == Rational(15L * 3432L * 3432L));
}
