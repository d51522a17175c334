#ifndef F1ZETA_EULER_HPP
#define F1ZETA_EULER_HPP

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "f1zeta/bigint.hpp"
#include "f1zeta/scheme.hpp"

namespace f1zeta {

enum class Verdict { converged, inconclusive, diverging };

const char* to_string(Verdict v);

/// Record of a truncated absolute Euler product evaluation
///   (1/s)^{chi} * prod_{n<=N} (1 - s^{-n})^{-kappa(n,X)}.
/// partials[n-1] holds the value after the n-th factor, accumulated in
/// log-space in a fixed order, so enlarging the truncation never changes an
/// earlier partial.
struct EulerTrace {
    std::complex<double> s;
    int truncation = 0;
    double tol = 0.0;
    std::vector<std::complex<double>> partials;      // length truncation
    std::vector<BigInt> kappa_values;                // kappa(n,X), n = 1..truncation
    Verdict verdict = Verdict::inconclusive;
    std::complex<double> target{0.0, 0.0};           // closed-form zeta(s)
    bool target_valid = false;                       // false if s is a pole
    double tail_sum = 0.0;                           // sum |factor - 1|
    std::optional<int> singular_at;                  // n of a singular factor
};

/// kappa(n,X) = sum_x sum_{j<=r(x)} (-1)^{r(x)-j} binom(r(x),j) kappa_j(n),
/// computed exactly from the rank multiset and cross-checked against
/// M_n(N(t)); a mismatch is a logic_error.
BigInt kappa_of_scheme(const SchemePoints& x, std::int64_t n);

/// prod_{n<=n_max} (1 - u^n)^{kappa_a(n)}, log-space. Converges to 1 - a*u
/// for |u| < 1/a. A factor that is exactly zero with a negative exponent
/// raises pole_error; with a positive exponent the product is exactly 0.
std::complex<double> scalar_euler_product(std::int64_t a, std::complex<double> u, int n_max);

/// Divergence diagnostic: sum_{n<=n_max} |(1 - u^n)^{kappa_a(n)} - 1|.
double scalar_product_tail_sum(std::int64_t a, std::complex<double> u, int n_max);

struct EulerTraceOptions {
    double tol = 1e-8;               // relative, against the closed form
    double divergence_bound = 1e3;   // on the running tail sum
};

/// Truncated Euler product at s with N factors. The verdict is
///   converged   - the last ceil(N/5) partials are within tol of the closed
///                 form from the zeta module,
///   diverging   - the tail sum exceeded the bound or a factor was singular,
///   inconclusive otherwise.
/// The diverging verdict is a finite-truncation heuristic, not a proof.
EulerTrace euler_trace(const SchemePoints& x, std::complex<double> s, int truncation,
                       const EulerTraceOptions& options = {});

/// deg N(t): the product converges absolutely for |s| > deg N. nullopt for
/// the empty scheme (N = 0; the product is trivially 1 everywhere).
std::optional<int> convergence_radius(const SchemePoints& x);

/// CSV with columns n, kappa_n, partial_re, partial_im, abs_err_vs_closed_form.
void write_trace_csv(std::ostream& out, const EulerTrace& trace);

}  // namespace f1zeta

#endif
