#ifndef F1ZETA_BIGINT_HPP
#define F1ZETA_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace f1zeta {

// Exact arithmetic backbone. Coefficients, point counts and kappa values
// routinely exceed 64 bits (2^400 shows up in the divergence probe), so
// everything exact goes through GMP.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt pow_int(std::int64_t base, unsigned long exp) {
    return pow_int(BigInt(static_cast<long>(base)), exp);
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Division whose callers rely on identities that make the remainder vanish.
// A nonzero remainder means the library is broken, hence logic_error rather
// than domain_error.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw std::logic_error(std::string("exact division failed in ") + context + ": " +
                               num.get_str() + " / " + den.get_str());
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// "p/q" with the denominator omitted when it is 1.
inline std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace f1zeta

#endif
