#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "f1zeta/scheme.hpp"

using namespace f1zeta;

namespace {

SchemePoints random_scheme(std::mt19937_64& rng, int max_points, int max_rank) {
    std::uniform_int_distribution<int> size_dist(0, max_points);
    std::uniform_int_distribution<int> rank_dist(0, max_rank);
    std::vector<int> ranks(static_cast<std::size_t>(size_dist(rng)));
    for (auto& r : ranks) r = rank_dist(rng);
    return scheme_from_ranks(std::move(ranks), "random");
}

}  // namespace

TEST_CASE("affine_space: point structure") {
    CHECK(affine_space(0).ranks == std::vector<int>{0});
    CHECK(affine_space(1).ranks == std::vector<int>{0, 1});
    CHECK(affine_space(2).ranks == std::vector<int>{0, 1, 1, 2});
    CHECK(affine_space(10).ranks.size() == 1024);
    CHECK_THROWS_AS(affine_space(-1), std::domain_error);
    CHECK_THROWS_AS(affine_space(25), std::domain_error);
}

TEST_CASE("torus and projective_line: point structure") {
    CHECK(torus(0).ranks == std::vector<int>{0});
    CHECK(torus(1).ranks == std::vector<int>{1});
    CHECK(torus(3).ranks == std::vector<int>{3});
    CHECK(projective_line().ranks == std::vector<int>{0, 0, 1});
    CHECK_THROWS_AS(torus(-2), std::domain_error);
    CHECK_THROWS_AS(scheme_from_ranks({1, -1}, "bad"), std::domain_error);
}

TEST_CASE("counting_function: closed forms") {
    for (int r = 0; r <= 6; ++r) {
        CHECK(counting_function(affine_space(r)) == IntPolynomial::monomial(1, r));
        CHECK(counting_function(torus(r)) == shifted_power(r));
    }
    CHECK(counting_function(projective_line()) == IntPolynomial({1, 1}));
    CHECK(counting_function(scheme_from_ranks({}, "empty")).is_zero());
}

TEST_CASE("euler_characteristic: N(1) equals the rank-0 point count") {
    for (int r = 0; r <= 6; ++r) {
        CHECK(euler_characteristic(affine_space(r)) == 1);
        CHECK(euler_characteristic(torus(r)) == (r == 0 ? 1 : 0));
    }
    CHECK(euler_characteristic(projective_line()) == 2);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i) {
        const SchemePoints x = random_scheme(rng, 10, 5);
        CHECK(euler_characteristic(x) == counting_function(x).eval(1));
    }
}

TEST_CASE("count_points_F1n: examples and polynomial law") {
    CHECK(count_points_F1n(torus(2), 3) == 9);
    CHECK(count_points_F1n(affine_space(1), 5) == 6);
    CHECK(count_points_F1n(projective_line(), 1) == 3);  // N(2) = point count
    CHECK_THROWS_AS(count_points_F1n(torus(1), 0), std::domain_error);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        const SchemePoints x = random_scheme(rng, 8, 4);
        const IntPolynomial n_poly = counting_function(x);
        for (std::int64_t n = 1; n <= 20; ++n) {
            CAPTURE(n);
            CHECK(count_points_F1n(x, n) == n_poly.eval(BigInt(static_cast<long>(n + 1))));
        }
    }
}

TEST_CASE("counting polynomial invariants on random rank multisets") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const SchemePoints x = random_scheme(rng, 12, 6);
        const IntPolynomial n_poly = counting_function(x);

        // degree = max rank
        CHECK(n_poly.degree() == max_rank(x));
        // N(2) = number of points
        CHECK(n_poly.eval(2) == static_cast<long>(x.ranks.size()));

        // coefficient of t^j is sum_{d=j}^{r} (-1)^{d-j} C(d,j) #I_d
        const int top = max_rank(x).value_or(-1);
        for (int j = 0; j <= top; ++j) {
            BigInt expected = 0;
            for (int d = j; d <= top; ++d) {
                const long count_d =
                    static_cast<long>(std::count(x.ranks.begin(), x.ranks.end(), d));
                const BigInt term = binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(j)) * count_d;
                expected += ((d - j) % 2 == 0) ? term : -term;
            }
            CAPTURE(j);
            CHECK(n_poly.coeff(j) == expected);
        }
    }
}

TEST_CASE("scheme_product: ranks add pairwise, counting polynomials multiply") {
    const SchemePoints p1 = projective_line();
    const SchemePoints square = scheme_product(p1, p1);
    CHECK(square.ranks == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 2});
    CHECK(counting_function(square) == IntPolynomial({1, 2, 1}));  // (t+1)^2

    std::mt19937_64 rng(31);
    for (int i = 0; i < 40; ++i) {
        const SchemePoints a = random_scheme(rng, 6, 3), b = random_scheme(rng, 6, 3);
        CHECK(counting_function(scheme_product(a, b)) == counting_function(a) * counting_function(b));
    }
}
