#ifndef F1ZETA_POLY_HPP
#define F1ZETA_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f1zeta/bigint.hpp"

namespace f1zeta {

/// Immutable exact polynomial in one variable t with big-integer coefficients.
///
/// Stored low degree first with no trailing zero coefficient; the zero
/// polynomial is the empty list and its degree() is nullopt (the "minus
/// infinity" case). Counting polynomials of high-rank schemes carry binomial
/// coefficients of (t-1)^r, so machine words are never used.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial monomial(BigInt coeff, int degree);
    /// Parses the textual rendering produced by to_string(): signed terms of
    /// the form "c*t^k", "t^k", "c*t", "t", "c", joined with + or -.
    static IntPolynomial parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<int> degree() const;
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of t^k; zero outside the stored range.
    const BigInt& coeff(int k) const;

    BigInt eval(const BigInt& x) const;  // Horner, exact

    std::string to_string() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
    friend IntPolynomial operator*(const BigInt&, const IntPolynomial&);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// (t-1)^r expanded with binomial coefficients.
IntPolynomial shifted_power(int r);

/// M_n(p) = sum_k a_k * kappa_k(n), the additive extension of t^a -> kappa_a(n).
/// Note M_n(1) = M_n(t^0) = kappa_0(n) = 0.
BigInt linear_moebius_transform(const IntPolynomial& p, std::int64_t n);

}  // namespace f1zeta

#endif
