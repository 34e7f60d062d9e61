#include <doctest.h>

#include <random>

#include "axc/exactlin.hpp"

using namespace axc;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi), den(1, 3);
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = frac(d(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("frac and parsing") {
    CHECK(frac(6, 4) == Rat(3, 2));
    CHECK(str(frac(6, 4)) == "3/2");
    CHECK(str(frac(-8, 4)) == "-2");
    CHECK(parse_rat("-1048576/75") == frac(-1048576, 75));
    CHECK(parse_rat("0") == 0);
}

TEST_CASE("small determinants") {
    auto m = RatMatrix::from_rows({{frac(320, 27), frac(-10, 9)}, {frac(-10, 9), frac(5, 48)}});
    CHECK(det(m) == 0);
    CHECK(rank(m) == 1u);
    CHECK(det(RatMatrix::identity(5)) == 1);
    auto v = RatMatrix::from_rows({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}});  // Vandermonde
    CHECK(det(v) == 2);
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a.transpose()) == det(a));
    }
}

TEST_CASE("rank, nullspace and solve") {
    std::mt19937 rng(9);
    for (int t = 0; t < 30; ++t) {
        auto a = random_matrix(rng, 3, 5);
        auto b = random_matrix(rng, 5, 6);
        auto m = a * b;  // rank <= 3
        auto ns = nullspace(m);
        CHECK(rank(m) + ns.size() == m.cols());
        for (const auto& x : ns)
            for (const auto& y : m.apply(x)) CHECK(y == 0);
        std::vector<Rat> x0(6);
        for (auto& q : x0) q = frac(static_cast<long>(rng() % 7) - 3, 2);
        auto rhs = m.apply(x0);
        auto sol = solve(m, rhs);
        REQUIRE(sol);
        CHECK(m.apply(*sol) == rhs);
    }
}

TEST_CASE("inverse") {
    std::mt19937 rng(17);
    for (int t = 0; t < 20; ++t) {
        auto a = random_matrix(rng, 4, 4);
        auto inv = inverse(a);
        if (det(a) == 0) {
            CHECK_FALSE(inv);
            continue;
        }
        REQUIRE(inv);
        CHECK(a * *inv == RatMatrix::identity(4));
    }
}

TEST_CASE("leading minors detect positive definiteness") {
    auto g = RatMatrix::from_rows({{2, 1}, {1, 2}});
    auto lm = leading_minors(g);
    CHECK(lm == std::vector<Rat>{2, 3});
}

TEST_CASE("sparse vectors") {
    SparseVec a(10), b(10);
    a.add(1, 2);
    a.add(3, frac(1, 2));
    b.add(3, 4);
    b.add(7, 1);
    CHECK(a.dot(b) == 2);
    SparseVec c = a;
    c -= a;
    CHECK(c.is_zero());
    auto sum = a;
    sum += b * Rat(3);
    auto coef = express(sum, {a, b});
    REQUIRE(coef);
    CHECK((*coef)[0] == 1);
    CHECK((*coef)[1] == 3);
    CHECK(rank(std::vector<SparseVec>{a, b, sum}) == 2u);
}

TEST_CASE("linear plus quadratic system") {
    // x - y = 0, x^2 + y^2 = 8  ->  (2, 2), (-2, -2)
    auto a = RatMatrix::from_rows({{1, -1}});
    auto r = solve_linear_quadratic(a, {0}, {1, 1}, 8);
    REQUIRE(r.error.empty());
    CHECK(r.solutions.size() == 2u);
    // x - y = 0, x^2 + y^2 = 2 * 3: roots are irrational
    auto s = solve_linear_quadratic(a, {0}, {1, 1}, 6);
    CHECK(s.solutions.empty());
    CHECK(s.irrational);
}

TEST_CASE("rational square roots") {
    CHECK(rational_sqrt(frac(3080 * 4, 9 * 4)) == std::nullopt);
    CHECK(rational_sqrt(frac(49, 16)) == frac(7, 4));
    CHECK(rational_sqrt(0) == Rat(0));
}
