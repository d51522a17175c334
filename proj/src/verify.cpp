#include "f1zeta/verify.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "f1zeta/arith.hpp"
#include "f1zeta/euler.hpp"
#include "f1zeta/numeric.hpp"
#include "f1zeta/oracle.hpp"
#include "f1zeta/scheme.hpp"
#include "f1zeta/toric.hpp"
#include "f1zeta/zeta.hpp"

namespace f1zeta {

namespace {

struct Recorder {
    SuiteResult result;
    void check(bool ok, const std::string& counterexample) {
        ++result.checks;
        if (!ok && result.failures.size() < 25) result.failures.push_back(counterexample);
        if (!ok && result.failures.size() == 25) result.failures.push_back("... (more failures suppressed)");
    }
};

SuiteResult suite_table1() {
    Recorder r;
    for (std::int64_t a = -3; a <= 3; ++a) {
        const auto table = kappa_table(a, 30);
        for (std::int64_t n = 1; n <= 30; ++n) {
            const BigInt& v = table[static_cast<std::size_t>(n)];
            const std::string at = "kappa_" + std::to_string(a) + "(" + std::to_string(n) + ") = " + v.get_str();
            if (n == 1) r.check(v == a, at + ", expected " + std::to_string(a));
            if (a == 0) r.check(v == 0, at + ", expected 0");
            if (a == 1) r.check(v == ((n == 1) ? 1 : 0), at + ", expected delta_{1n}");
            if (a == -1) {
                const int expected = (n == 1) ? -1 : (n == 2 ? 1 : 0);
                r.check(v == expected, at + ", expected " + std::to_string(expected));
            }
            if (a >= 2) r.check(v > 0, at + ", expected > 0");
            if (a <= -2) {
                if (n % 2 == 0)
                    r.check(v > 0, at + ", expected > 0 for even n");
                else
                    r.check(v < 0, at + ", expected < 0 for odd n");
            }
        }
    }
    r.result.suite = "table1";
    return r.result;
}

SuiteResult suite_moebius() {
    Recorder r;
    for (std::int64_t a = -20; a <= 20; ++a) {
        const auto table = kappa_table(a, 100);
        for (std::int64_t m = 1; m <= 100; ++m) {
            BigInt sum = 0;
            for (std::int64_t n : divisors(m)) sum += BigInt(static_cast<long>(n)) * table[static_cast<std::size_t>(n)];
            const BigInt expected = pow_int(a, static_cast<unsigned long>(m));
            r.check(sum == expected, "sum_{n|" + std::to_string(m) + "} n*kappa_" + std::to_string(a) +
                                         "(n) = " + sum.get_str() + " != " + expected.get_str());
        }
    }
    r.result.suite = "moebius";
    return r.result;
}

SuiteResult suite_lyndon() {
    Recorder r;
    for (int a = 1; a <= 6; ++a) {
        for (int n = 1; n <= 12; ++n) {
            const BigInt via_formula = kappa(a, n);
            const BigInt via_count = lyndon_count(a, n);
            r.check(via_formula == via_count, "kappa(" + std::to_string(a) + "," + std::to_string(n) + ") = " +
                                                  via_formula.get_str() + " but lyndon_count = " +
                                                  via_count.get_str());
        }
    }
    r.result.suite = "lyndon";
    return r.result;
}

SchemePoints random_rank_multiset(std::mt19937_64& rng, int max_points, int max_rank, int index) {
    std::uniform_int_distribution<int> size_dist(0, max_points);
    std::uniform_int_distribution<int> rank_dist(0, max_rank);
    std::vector<int> ranks(static_cast<std::size_t>(size_dist(rng)));
    for (auto& r : ranks) r = rank_dist(rng);
    return scheme_from_ranks(std::move(ranks), "random#" + std::to_string(index));
}

SuiteResult suite_tensor(std::uint64_t seed) {
    Recorder r;
    auto check_equal = [&](const SchemePoints& x) {
        const ZetaMultiset direct = absolute_zeta(x);
        const ZetaMultiset via_poly = zeta_from_counting(counting_function(x));
        r.check(direct == via_poly, x.name + ": tensor construction " + to_string(direct) +
                                        " != counting construction " + to_string(via_poly));
    };
    for (int rank = 0; rank <= 6; ++rank) {
        check_equal(affine_space(rank));
        check_equal(torus(rank));
    }
    check_equal(projective_line());
    for (const char* key : {"a2", "p1", "p2", "p1xp1"}) check_equal(fan_to_scheme_points(bundled_fan(key)));

    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100; ++i) check_equal(random_rank_multiset(rng, 8, 5, i));

    // Tensor symmetry under factor permutation, on random real-location multisets.
    std::uniform_int_distribution<int> loc_dist(-3, 3);
    std::uniform_int_distribution<int> mult_dist(-2, 2);
    std::uniform_int_distribution<int> size_dist(1, 3);
    for (int i = 0; i < 20; ++i) {
        std::vector<ZetaMultiset> factors(3);
        for (auto& f : factors)
            for (int j = size_dist(rng); j > 0; --j)
                f.add(RationalComplex(loc_dist(rng)), BigInt(mult_dist(rng)));
        const ZetaMultiset forward = tensor(factors);
        std::vector<ZetaMultiset> shuffled = {factors[2], factors[0], factors[1]};
        const ZetaMultiset permuted = tensor(shuffled);
        r.check(forward == permuted, "tensor permutation mismatch on random case #" + std::to_string(i));

        const ZetaMultiset& z = factors[0];
        r.check(invert(invert(z)) == z, "invert involution failed on random case #" + std::to_string(i));
    }
    r.result.suite = "tensor";
    return r.result;
}

SuiteResult suite_points() {
    Recorder r;
    const IntPolynomial p2_poly = counting_function_fan(bundled_fan("p2"));
    const IntPolynomial p1xp1_poly = counting_function_fan(bundled_fan("p1xp1"));
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const FieldSpec field = FieldSpec::make(q);
        const BigInt qv(q);
        for (int rank = 0; rank <= 3; ++rank) {
            const BigInt affine = count_affine(rank, field);
            const BigInt affine_poly = counting_function(affine_space(rank)).eval(qv);
            r.check(affine == affine_poly, "affine r=" + std::to_string(rank) + " q=" + std::to_string(q) +
                                               ": " + affine.get_str() + " != " + affine_poly.get_str());
            const BigInt torus_count = count_torus(rank, field);
            const BigInt torus_poly = counting_function(torus(rank)).eval(qv);
            r.check(torus_count == torus_poly, "torus r=" + std::to_string(rank) + " q=" + std::to_string(q) +
                                                   ": " + torus_count.get_str() + " != " + torus_poly.get_str());
        }
        const BigInt p1_count = count_projective(1, field);
        r.check(p1_count == counting_function(projective_line()).eval(qv),
                "P^1 q=" + std::to_string(q) + ": " + p1_count.get_str());
        const BigInt p2_count = count_projective(2, field);
        r.check(p2_count == p2_poly.eval(qv), "P^2 q=" + std::to_string(q) + ": " + p2_count.get_str() +
                                                  " != " + p2_poly.eval(qv).get_str());
        const BigInt square = count_product({p1_count, p1_count});
        r.check(square == p1xp1_poly.eval(qv), "P^1xP^1 q=" + std::to_string(q) + ": " + square.get_str() +
                                                   " != " + p1xp1_poly.eval(qv).get_str());
    }
    // F_{1^n} points against N(n+1), the polynomial route being independent
    // of the rank-power sum inside count_points_F1n.
    std::vector<SchemePoints> builtins;
    for (int rank = 0; rank <= 3; ++rank) {
        builtins.push_back(affine_space(rank));
        builtins.push_back(torus(rank));
    }
    builtins.push_back(projective_line());
    builtins.push_back(fan_to_scheme_points(bundled_fan("p2")));
    builtins.push_back(fan_to_scheme_points(bundled_fan("p1xp1")));
    for (const auto& x : builtins) {
        const IntPolynomial n_poly = counting_function(x);
        for (std::int64_t n = 1; n <= 10; ++n) {
            const BigInt direct = count_points_F1n(x, n);
            const BigInt via_poly = n_poly.eval(BigInt(static_cast<long>(n + 1)));
            r.check(direct == via_poly, x.name + " at n=" + std::to_string(n) + ": " + direct.get_str() +
                                            " != N(n+1) = " + via_poly.get_str());
        }
    }
    r.result.suite = "points";
    return r.result;
}

SuiteResult suite_limit() {
    Recorder r;
    const IntPolynomial cases[] = {
        IntPolynomial::parse("t"),
        IntPolynomial::parse("t^2"),
        shifted_power(2),
        IntPolynomial::parse("t + 1"),
    };
    const double p = 1.0 + std::ldexp(1.0, -20);
    for (const auto& n_poly : cases) {
        const double s_re = static_cast<double>(*n_poly.degree()) + 2.0;
        const std::complex<double> s(s_re, 0.0);
        const auto values = soule_limit_trace(n_poly, s, {p});
        const std::complex<double> closed = evaluate(zeta_from_counting(n_poly), s);
        const double rel = std::abs(values.back() - closed) / std::abs(closed);
        r.check(rel <= 1e-4, "N = " + n_poly.to_string() + ": limit value " + fmt10(values.back()) +
                                 " vs closed form " + fmt10(closed) + " (relative " + fmt10(rel) + ")");
    }
    r.result.suite = "limit";
    return r.result;
}

}  // namespace

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "table1") return suite_table1();
    if (name == "moebius") return suite_moebius();
    if (name == "lyndon") return suite_lyndon();
    if (name == "tensor") return suite_tensor(seed);
    if (name == "points") return suite_points();
    if (name == "limit") return suite_limit();
    throw std::domain_error("unknown verify suite '" + name + "'");
}

std::vector<std::string> suite_names() { return {"table1", "moebius", "lyndon", "tensor", "points", "limit"}; }

}  // namespace f1zeta
