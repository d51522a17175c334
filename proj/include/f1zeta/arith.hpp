#ifndef F1ZETA_ARITH_HPP
#define F1ZETA_ARITH_HPP

#include <cstdint>
#include <vector>

#include "f1zeta/bigint.hpp"

namespace f1zeta {

/// Moebius function mu(n). Trial division with a 2/3/5 wheel; supported up to
/// n = 10^7 (domain_error beyond, and for n < 1).
int moebius(std::int64_t n);

/// All divisors of n >= 1, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// kappa_a(n) = (1/n) * sum_{m|n} mu(n/m) a^m.
///
/// The divisor sum is an integer multiple of n for every integer a; the
/// division is checked, and a failure is a logic_error, not a domain_error.
/// For a >= 1 this equals the number of Lyndon words of length n over a
/// letters.
BigInt kappa(std::int64_t a, std::int64_t n);

/// kappa_a(1..n_max) in one pass. Returns a vector of size n_max+1 with
/// element n equal to kappa(a, n) (element 0 unused, set to 0). Uses a
/// divisor-sum sieve: O(n_max log n_max) divisor visits instead of factoring
/// every n, since Table-style verification and Euler truncations consume
/// dense ranges of n.
std::vector<BigInt> kappa_table(std::int64_t a, std::int64_t n_max);

}  // namespace f1zeta

#endif
