#include "doctest.h"

#include <algorithm>
#include <random>

#include "brcover/exact_linalg.hpp"
#include "oracles.hpp"

using namespace brcover;

namespace {

IntMatrix to_matrix(const oracle::Dense& a)
{
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    return IntMatrix::from_rows(a, cols);
}

bool is_diagonal(const IntMatrix& d)
{
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    return true;
}

bool divisor_chain(const std::vector<Integer>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) return false;
        if (i + 1 < s.size()) {
            if (s[i] == 0 && s[i + 1] != 0) return false;
            if (s[i] != 0 && !mpz_divisible_p(s[i + 1].get_mpz_t(), s[i].get_mpz_t())) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("IntMatrix shape checks")
{
    CHECK_THROWS_AS(IntMatrix(2, 2, std::vector<Integer>(3)), DimensionError);
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), DimensionError);
    const IntMatrix empty(0, 3);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 3);
    CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), DimensionError);
}

TEST_CASE("snf examples")
{
    SUBCASE("identity")
    {
        const auto r = snf(IntMatrix::identity(2));
        CHECK(r.d == IntMatrix::identity(2));
        CHECK(r.u == IntMatrix::identity(2));
        CHECK(r.v == IntMatrix::identity(2));
    }
    SUBCASE("[[2,4],[6,8]]")
    {
        const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
        const auto r = snf(a);
        // determinantal divisors: gcd(2,4,6,8) = 2, |det| = 8
        CHECK(oracle::smith_invariants({{2, 4}, {6, 8}}) == std::vector<mpz_class>{2, 4});
        CHECK(r.d == IntMatrix::from_rows({{2, 0}, {0, 4}}));
        CHECK(r.u * a * r.v == r.d);
        CHECK(abs(det(r.u)) == 1);
        CHECK(abs(det(r.v)) == 1);
    }
    SUBCASE("1x1 zero")
    {
        const auto r = snf(IntMatrix(1, 1));
        CHECK(r.d == IntMatrix(1, 1));
    }
    SUBCASE("empty shapes")
    {
        const auto r = snf(IntMatrix(0, 3));
        CHECK(r.u.rows() == 0);
        CHECK(r.v == IntMatrix::identity(3));
        CHECK(r.divisors().empty());
    }
    SUBCASE("negative pivot is normalized")
    {
        const auto r = snf(IntMatrix::from_rows({{-3}}));
        CHECK(r.d(0, 0) == 3);
        CHECK(r.u(0, 0) == -1);
    }
}

TEST_CASE("det examples")
{
    CHECK(det(IntMatrix::identity(5)) == 1);
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK(det(IntMatrix::from_rows({{-2, 1}, {1, -2}})) == 3);
    CHECK(det(IntMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(oracle::cofactor_det(oracle::Dense{{2, 4}, {6, 8}}) == -8);
    CHECK(det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);  // row order matters
    CHECK(det(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("det beyond 64-bit range")
{
    const Integer big("123456789012345678901234567890");
    IntMatrix a(3, 3);
    a(0, 0) = big;
    a(0, 1) = 7;
    a(1, 0) = -big;
    a(1, 1) = big + 1;
    a(2, 2) = big * big;
    a(1, 2) = 5;
    std::vector<std::vector<mpz_class>> dense(3, std::vector<mpz_class>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) dense[i][j] = a(i, j);
    CHECK(det(a) == oracle::cofactor_det(dense));
}

TEST_CASE("rank examples")
{
    CHECK(rank(IntMatrix(3, 3)) == 0);
    CHECK(rank(IntMatrix::identity(4)) == 4);
    CHECK(rank(IntMatrix::from_rows({{1, 0, 0, 0}})) == 1);
    CHECK(oracle::rational_rank({{1, 0, 0, 0}}) == 1);
    CHECK(rank(IntMatrix(0, 0)) == 0);
    CHECK(rank(IntMatrix(0, 5)) == 0);
}

TEST_CASE("abelianized_b1 examples")
{
    CHECK(abelianized_b1(4, {{1, 0, 0, 0}}) == 3);
    CHECK(abelianized_b1(4, {}) == 4);
    CHECK(abelianized_b1(2, {{1, 0}, {0, 1}}) == 0);
    CHECK_THROWS_AS(abelianized_b1(4, {{1, 0, 0}}), DimensionError);
    CHECK_THROWS_AS(abelianized_b1(2, {{1, 0}, {1, 0, 0}}), DimensionError);
}

TEST_CASE("snf, det and rank agree with oracles on random matrices")
{
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<std::size_t> dim(0, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const oracle::Dense dense = oracle::random_matrix(rng, rows, cols);
        const IntMatrix a = to_matrix(dense);
        if (cols == 0 && rows > 0) continue;  // from_rows needs a column count
        const SnfResult r = snf(a);

        REQUIRE(r.u * a * r.v == r.d);
        REQUIRE(abs(det(r.u)) == 1);
        REQUIRE(abs(det(r.v)) == 1);
        REQUIRE(is_diagonal(r.d));
        REQUIRE(divisor_chain(r.divisors()));

        const auto divs = r.divisors();
        const auto nonzero = static_cast<std::size_t>(std::count_if(divs.begin(), divs.end(), [](const Integer& x) { return x != 0; }));
        REQUIRE(rank(a) == nonzero);
        REQUIRE(rank(a) == oracle::rational_rank(dense));

        if (rows == cols) REQUIRE(det(a) == oracle::cofactor_det(dense));
        if (std::max(rows, cols) <= 4) REQUIRE(divs == oracle::smith_invariants(dense));
    }
}

TEST_CASE("abelianized_b1 is invariant under relator row operations")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> gens_dist(1, 6), rel_dist(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t gens = gens_dist(rng);
        auto relators = oracle::random_matrix(rng, rel_dist(rng), gens, -3, 3);
        const std::size_t b1 = abelianized_b1(gens, relators);
        CHECK(b1 == gens - oracle::rational_rank(relators));

        auto permuted = relators;
        std::shuffle(permuted.begin(), permuted.end(), rng);
        CHECK(abelianized_b1(gens, permuted) == b1);

        auto negated = relators;
        for (auto& x : negated[0]) x = -x;
        CHECK(abelianized_b1(gens, negated) == b1);

        if (relators.size() >= 2) {
            auto added = relators;
            for (std::size_t j = 0; j < gens; ++j) added[1][j] += added[0][j];
            CHECK(abelianized_b1(gens, added) == b1);
        }
    }
}

TEST_CASE("RationalVector and rational text")
{
    const RationalVector v{Rational(2, 4), Rational(-3, -6)};
    CHECK(v[0].get_num() == 1);
    CHECK(v[0].get_den() == 2);
    CHECK(v.pair(std::vector<Integer>{2, 4}) == 3);
    CHECK_THROWS_AS(v.pair(std::vector<Integer>{1}), DimensionError);

    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-2") == -2);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK(format_rational(Rational(0)) == "0/1");
    CHECK(format_rational(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("block_diagonal and bilinear")
{
    const std::vector<IntMatrix> blocks{IntMatrix::from_rows({{-2}}), IntMatrix::from_rows({{-2, 1}, {1, -2}})};
    const IntMatrix b = block_diagonal(blocks);
    CHECK(b == IntMatrix::from_rows({{-2, 0, 0}, {0, -2, 1}, {0, 1, -2}}));
    CHECK(det(b) == -6);
    const IntMatrix q = IntMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(bilinear(std::vector<Integer>{2, 2}, q, std::vector<Integer>{2, 2}) == 8);
}
