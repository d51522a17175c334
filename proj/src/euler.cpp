#include "f1zeta/euler.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

#include "f1zeta/arith.hpp"
#include "f1zeta/errors.hpp"
#include "f1zeta/numeric.hpp"
#include "f1zeta/poly.hpp"
#include "f1zeta/zeta.hpp"

namespace f1zeta {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::converged: return "converged";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::diverging: return "diverging";
    }
    return "?";
}

BigInt kappa_of_scheme(const SchemePoints& x, std::int64_t n) {
    if (n < 1) throw std::domain_error("kappa_of_scheme: n must be >= 1");
    std::map<int, long> census;
    for (int r : x.ranks) ++census[r];
    const int top = census.empty() ? -1 : census.rbegin()->first;
    std::vector<BigInt> kappa_j;
    kappa_j.reserve(static_cast<std::size_t>(top) + 1);
    for (int j = 0; j <= top; ++j) kappa_j.push_back(kappa(j, n));

    BigInt total = 0;
    for (const auto& [rank, count] : census) {
        BigInt per_point = 0;
        for (int j = 0; j <= rank; ++j) {
            BigInt term = binomial(static_cast<unsigned long>(rank), static_cast<unsigned long>(j)) *
                          kappa_j[static_cast<std::size_t>(j)];
            per_point += ((rank - j) % 2 == 0) ? term : -term;
        }
        total += BigInt(count) * per_point;
    }

    const BigInt via_transform = linear_moebius_transform(counting_function(x), n);
    if (total != via_transform)
        throw std::logic_error("kappa_of_scheme: double sum " + total.get_str() +
                               " disagrees with M_n(N) = " + via_transform.get_str());
    return total;
}

namespace {

// One factor (1 - u^n)^{kappa} contributed to a running log-space product.
// Returns false on a singular factor with negative exponent.
struct FactorAccumulator {
    std::complex<double> log_sum{0.0, 0.0};
    double tail_sum = 0.0;
    bool zero_product = false;  // hit a zero factor with positive exponent

    bool push(const BigInt& kappa_n, std::complex<double> u_pow_n) {
        if (kappa_n == 0) return true;
        const std::complex<double> one_minus = std::complex<double>(1.0) - u_pow_n;
        if (one_minus == 0.0) {
            if (kappa_n < 0) return false;  // singular
            zero_product = true;
            return true;
        }
        const std::complex<double> term = mul_big(kappa_n, log1p_cx(-u_pow_n));
        log_sum += term;
        tail_sum += std::abs(expm1_cx(term));
        return true;
    }

    std::complex<double> value() const {
        if (zero_product) return {0.0, 0.0};
        return std::exp(log_sum);
    }
};

}  // namespace

std::complex<double> scalar_euler_product(std::int64_t a, std::complex<double> u, int n_max) {
    if (n_max < 1) throw std::domain_error("scalar_euler_product: n_max must be >= 1");
    const auto table = kappa_table(a, n_max);
    FactorAccumulator acc;
    std::complex<double> u_pow = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        u_pow *= u;
        if (!acc.push(table[static_cast<std::size_t>(n)], u_pow))
            throw pole_error("scalar_euler_product: singular factor at n = " + std::to_string(n) +
                             " (1 - u^n = 0 with negative exponent)");
    }
    return acc.value();
}

double scalar_product_tail_sum(std::int64_t a, std::complex<double> u, int n_max) {
    if (n_max < 1) throw std::domain_error("scalar_product_tail_sum: n_max must be >= 1");
    const auto table = kappa_table(a, n_max);
    FactorAccumulator acc;
    std::complex<double> u_pow = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        u_pow *= u;
        if (!acc.push(table[static_cast<std::size_t>(n)], u_pow))
            return std::numeric_limits<double>::infinity();
    }
    return acc.tail_sum;
}

EulerTrace euler_trace(const SchemePoints& x, std::complex<double> s, int truncation,
                       const EulerTraceOptions& options) {
    if (s == 0.0) throw std::domain_error("euler_trace: s must be nonzero");
    if (truncation < 1) throw std::domain_error("euler_trace: truncation must be >= 1");

    EulerTrace trace;
    trace.s = s;
    trace.truncation = truncation;
    trace.tol = options.tol;

    // kappa(n,X) = sum_k a_k kappa_k(n): one sieved table per coefficient of N.
    const IntPolynomial n_poly = counting_function(x);
    const auto& coeffs = n_poly.coeffs();
    std::vector<std::vector<BigInt>> tables;
    tables.reserve(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        tables.push_back(coeffs[k] == 0 ? std::vector<BigInt>() : kappa_table(static_cast<std::int64_t>(k), truncation));
    trace.kappa_values.reserve(static_cast<std::size_t>(truncation));
    for (int n = 1; n <= truncation; ++n) {
        BigInt v = 0;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0) v += coeffs[k] * tables[k][static_cast<std::size_t>(n)];
        trace.kappa_values.push_back(std::move(v));
    }

    try {
        trace.target = evaluate(absolute_zeta(x), s);
        trace.target_valid = true;
    } catch (const pole_error&) {
        trace.target = {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()};
        trace.target_valid = false;
    }

    const double chi = euler_characteristic(x).get_d();
    const std::complex<double> prefactor_log = -chi * std::log(s);  // (1/s)^{chi}

    FactorAccumulator acc;
    const std::complex<double> inv_s = 1.0 / s;
    std::complex<double> s_pow = 1.0;  // s^{-n}
    trace.partials.assign(static_cast<std::size_t>(truncation),
                          {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()});
    for (int n = 1; n <= truncation; ++n) {
        s_pow *= inv_s;
        // The product carries exponent -kappa(n,X).
        if (!acc.push(-trace.kappa_values[static_cast<std::size_t>(n - 1)], s_pow)) {
            trace.singular_at = n;
            break;
        }
        trace.partials[static_cast<std::size_t>(n - 1)] = std::exp(prefactor_log) * acc.value();
        trace.tail_sum = acc.tail_sum;
        if (acc.tail_sum > options.divergence_bound) break;  // remaining partials stay NaN
    }

    if (trace.singular_at || trace.tail_sum > options.divergence_bound ||
        !std::isfinite(trace.tail_sum)) {
        trace.verdict = Verdict::diverging;
        return trace;
    }
    if (trace.target_valid) {
        const int window = (truncation + 4) / 5;  // ceil(N/5)
        bool ok = true;
        const double scale = std::max(std::abs(trace.target), 1e-300);
        for (int n = truncation - window + 1; n <= truncation; ++n) {
            const auto p = trace.partials[static_cast<std::size_t>(n - 1)];
            if (!(std::abs(p - trace.target) <= options.tol * scale)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            trace.verdict = Verdict::converged;
            return trace;
        }
    }
    trace.verdict = Verdict::inconclusive;
    return trace;
}

std::optional<int> convergence_radius(const SchemePoints& x) {
    const auto deg = counting_function(x).degree();
    if (!deg) return std::nullopt;
    return *deg;
}

void write_trace_csv(std::ostream& out, const EulerTrace& trace) {
    out << "n,kappa_n,partial_re,partial_im,abs_err_vs_closed_form\n";
    char buf[64];
    auto full = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    for (int n = 1; n <= trace.truncation; ++n) {
        const auto p = trace.partials[static_cast<std::size_t>(n - 1)];
        const double err = trace.target_valid ? std::abs(p - trace.target)
                                              : std::numeric_limits<double>::quiet_NaN();
        out << n << ',' << trace.kappa_values[static_cast<std::size_t>(n - 1)].get_str() << ','
            << full(p.real()) << ',' << full(p.imag()) << ',' << full(err) << '\n';
    }
}

}  // namespace f1zeta
