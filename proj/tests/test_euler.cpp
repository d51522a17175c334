#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "f1zeta/arith.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/euler.hpp"
#include "f1zeta/poly.hpp"
#include "f1zeta/zeta.hpp"

using namespace f1zeta;
using cx = std::complex<double>;

TEST_CASE("kappa_of_scheme: closed forms") {
    // affine r: the binomial double sum telescopes to kappa_r(n)
    for (int r = 0; r <= 4; ++r)
        for (std::int64_t n = 1; n <= 30; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            CHECK(kappa_of_scheme(affine_space(r), n) == kappa(r, n));
        }
    // torus r: alternating binomial combination
    for (int r = 0; r <= 4; ++r)
        for (std::int64_t n = 1; n <= 30; ++n) {
            BigInt expected = 0;
            for (int k = 0; k <= r; ++k) {
                const BigInt term =
                    binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(k)) * kappa(k, n);
                expected += ((r - k) % 2 == 0) ? term : -term;
            }
            CHECK(kappa_of_scheme(torus(r), n) == expected);
        }
    CHECK(kappa_of_scheme(scheme_from_ranks({}, "empty"), 7) == 0);
    CHECK_THROWS_AS(kappa_of_scheme(torus(1), 0), std::domain_error);
}

TEST_CASE("kappa_of_scheme: agrees with the linear Moebius transform") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> size_dist(0, 8), rank_dist(0, 5);
    for (int i = 0; i < 25; ++i) {
        std::vector<int> ranks(static_cast<std::size_t>(size_dist(rng)));
        for (auto& r : ranks) r = rank_dist(rng);
        const SchemePoints x = scheme_from_ranks(std::move(ranks), "random");
        const IntPolynomial n_poly = counting_function(x);
        for (std::int64_t n : {1, 2, 3, 5, 8, 13, 40, 100}) {
            CAPTURE(n);
            CHECK(kappa_of_scheme(x, n) == linear_moebius_transform(n_poly, n));
        }
    }
}

TEST_CASE("scalar_euler_product: pinned values") {
    // a = 1: kappa_1 = delta_{1n}, so the product is exactly 1 - u.
    CHECK(std::abs(scalar_euler_product(1, cx(0.3, 0.0), 1) - cx(0.7, 0.0)) < 1e-15);
    CHECK(std::abs(scalar_euler_product(1, cx(0.3, 0.0), 50) - cx(0.7, 0.0)) < 1e-15);
    // a = 0: empty exponents everywhere.
    CHECK(scalar_euler_product(0, cx(0.9, 0.0), 50) == cx(1.0, 0.0));
    // a = 2, u = 0.4 < 1/2: the truncation tail at N = 60 is
    // sum_{n>60} (0.8)^n / n ~ 2e-8, so the value sits inside 1e-7 of 1 - 0.8.
    CHECK(std::abs(scalar_euler_product(2, cx(0.4, 0.0), 60) - cx(0.2, 0.0)) < 1e-7);
    // By N = 120 the tail is far below 1e-9.
    CHECK(std::abs(scalar_euler_product(2, cx(0.4, 0.0), 120) - cx(0.2, 0.0)) < 1e-9);
    CHECK_THROWS_AS(scalar_euler_product(2, cx(0.4, 0.0), 0), std::domain_error);
}

TEST_CASE("scalar_euler_product: singular factors") {
    // u = 1: factor 1 - u^1 = 0 with kappa_{-2}(1) = -2 < 0.
    CHECK_THROWS_AS(scalar_euler_product(-2, cx(1.0, 0.0), 5), pole_error);
    // Same zero factor but kappa_2(1) = 2 > 0: the product is exactly 0.
    CHECK(scalar_euler_product(2, cx(1.0, 0.0), 5) == cx(0.0, 0.0));
}

TEST_CASE("scalar_euler_product: converges to 1 - a*u inside |u| < 1/a") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    for (std::int64_t a : {2, 3, 4, 5}) {
        for (int i = 0; i < 20; ++i) {
            const double rho = radius(rng) * 0.9 / static_cast<double>(a);
            const double phi = angle(rng);
            const cx u = std::polar(rho, phi);
            const cx expected = cx(1.0, 0.0) - static_cast<double>(a) * u;
            CAPTURE(a);
            CAPTURE(u);
            CHECK(std::abs(scalar_euler_product(a, u, 120) - expected) < 1e-6);
        }
    }
}

TEST_CASE("scalar_product_tail_sum: grows without bound at u = 1/a") {
    const double at100 = scalar_product_tail_sum(2, cx(0.5, 0.0), 100);
    const double at400 = scalar_product_tail_sum(2, cx(0.5, 0.0), 400);
    CHECK(at400 - at100 >= 1.0);
    // Inside the disc the tail sum is bounded by a small constant.
    const double inside = scalar_product_tail_sum(2, cx(0.25, 0.0), 400);
    CHECK(inside < 2.0);
}

TEST_CASE("euler_trace: convergence inside the proven region") {
    const EulerTrace a1 = euler_trace(affine_space(1), cx(3.0, 0.0), 80);
    CHECK(a1.verdict == Verdict::converged);
    CHECK(a1.target_valid);
    CHECK(std::abs(a1.target - cx(0.5, 0.0)) < 1e-14);
    CHECK(std::abs(a1.partials.back() - cx(0.5, 0.0)) < 1e-10);
    CHECK(a1.kappa_values[0] == 1);  // kappa(1, A^1) = kappa_1(1)

    const EulerTrace p1 = euler_trace(projective_line(), cx(4.0, 0.0), 100);
    CHECK(p1.verdict == Verdict::converged);
    CHECK(std::abs(p1.partials.back() - cx(1.0 / 12.0, 0.0)) < 1e-10);
}

TEST_CASE("euler_trace: empty scheme is identically 1") {
    const EulerTrace trace = euler_trace(scheme_from_ranks({}, "empty"), cx(5.0, 0.0), 10);
    CHECK(trace.verdict == Verdict::converged);
    for (const auto& p : trace.partials) CHECK(p == cx(1.0, 0.0));
    CHECK(trace.target == cx(1.0, 0.0));
}

TEST_CASE("euler_trace: outside the region the verdict is not converged") {
    const EulerTrace t2 = euler_trace(torus(2), cx(1.5, 0.0), 200);
    CHECK(t2.verdict != Verdict::converged);
    const EulerTrace a2 = euler_trace(affine_space(2), cx(1.2, 0.0), 100);
    CHECK(a2.verdict != Verdict::converged);
}

TEST_CASE("euler_trace: domain errors") {
    CHECK_THROWS_AS(euler_trace(torus(1), cx(0.0, 0.0), 10), std::domain_error);
    CHECK_THROWS_AS(euler_trace(torus(1), cx(3.0, 0.0), 0), std::domain_error);
}

TEST_CASE("euler_trace: monotone refinement") {
    const EulerTrace small = euler_trace(torus(2), cx(3.0, 0.0), 50);
    const EulerTrace large = euler_trace(torus(2), cx(3.0, 0.0), 120);
    for (int n = 0; n < 50; ++n) {
        CHECK(small.partials[static_cast<std::size_t>(n)] == large.partials[static_cast<std::size_t>(n)]);
        CHECK(small.kappa_values[static_cast<std::size_t>(n)] == large.kappa_values[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("euler_trace: singular factor at s = 1 is flagged as diverging") {
    // kappa(1, A^1) = 1 > 0 and 1 - s^{-1} = 0.
    const EulerTrace trace = euler_trace(affine_space(1), cx(1.0, 0.0), 10);
    CHECK(trace.verdict == Verdict::diverging);
    CHECK(trace.singular_at == 1);
}

TEST_CASE("convergence_radius: deg N") {
    CHECK(convergence_radius(affine_space(3)) == 3);
    CHECK(convergence_radius(torus(5)) == 5);
    CHECK(convergence_radius(projective_line()) == 1);
    CHECK(convergence_radius(torus(0)) == 0);
    CHECK(!convergence_radius(scheme_from_ranks({}, "empty")).has_value());
}

TEST_CASE("write_trace_csv: shape and exact kappa column") {
    const EulerTrace trace = euler_trace(torus(2), cx(4.0, 0.0), 5);
    std::ostringstream out;
    write_trace_csv(out, trace);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,kappa_n,partial_re,partial_im,abs_err_vs_closed_form");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        if (rows == 1) {
            // kappa(1, G_m^2) = kappa_2(1) - 2 kappa_1(1) + kappa_0(1) = 0
            CHECK(line.rfind("1,0,", 0) == 0);
        }
    }
    CHECK(rows == 5);
}
