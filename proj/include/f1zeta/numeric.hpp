#ifndef F1ZETA_NUMERIC_HPP
#define F1ZETA_NUMERIC_HPP

#include <complex>
#include <string>

#include "f1zeta/bigint.hpp"

namespace f1zeta {

// log(1+z), accurate for tiny |z| where forming 1+z first would lose all the
// information the factor carries. The truncated products multiply these logs
// by kappa values of size a^n/n, so the absolute error of the naive route is
// amplified catastrophically.
std::complex<double> log1p_cx(std::complex<double> z);

// exp(z)-1 without cancellation for small |z|.
std::complex<double> expm1_cx(std::complex<double> z);

// k*w for a big integer k that may not fit a double. Splits k as d*2^e and
// rescales with ldexp; overflow saturates to +/-inf.
std::complex<double> mul_big(const BigInt& k, std::complex<double> w);

// 10 significant digits, C locale. The CLI prints all floating output through
// these so captured stdout is stable.
std::string fmt10(double x);
std::string fmt10(std::complex<double> z);

std::complex<double> parse_complex(const std::string& text);  // "RE" or "RE,IM"

}  // namespace f1zeta

#endif
