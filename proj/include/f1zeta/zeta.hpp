#ifndef F1ZETA_ZETA_HPP
#define F1ZETA_ZETA_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "f1zeta/bigint.hpp"
#include "f1zeta/poly.hpp"
#include "f1zeta/scheme.hpp"

namespace f1zeta {

/// Exact complex location: a pair of rationals. Kept exact so multiset
/// merging never depends on floating comparisons.
struct RationalComplex {
    Rational re, im;

    RationalComplex() : re(0), im(0) {}
    RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit RationalComplex(long r) : re(r), im(0) {}

    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator<(const RationalComplex& a, const RationalComplex& b) {
        const int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

/// A meromorphic function of the shape prod_rho (s - rho)^{m(rho)} given by
/// its finite multiset of zeros (m > 0) and poles (m < 0). Entries with
/// multiplicity 0 are never stored; the empty multiset is the constant 1.
class ZetaMultiset {
  public:
    using Map = std::map<RationalComplex, BigInt>;

    ZetaMultiset() = default;
    ZetaMultiset(std::initializer_list<std::pair<RationalComplex, BigInt>> entries);

    /// Accumulates multiplicity at a location; drops the entry if it cancels.
    void add(const RationalComplex& location, const BigInt& multiplicity);

    const Map& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const ZetaMultiset&, const ZetaMultiset&) = default;

  private:
    Map entries_;
};

/// zeta(s) = prod_k (s-k)^{-a_k} for N(t) = sum a_k t^k.
ZetaMultiset zeta_from_counting(const IntPolynomial& n);

/// Kurokawa tensor product of r >= 1 factors. For each tuple of locations the
/// contribution at the summed location is the product of multiplicities when
/// every Im(rho_i) >= 0, that product times (-1)^{r-1} when every
/// Im(rho_i) < 0, and zero otherwise. The rule is r-ary by definition;
/// associativity of a binary version is not assumed anywhere.
ZetaMultiset tensor(const std::vector<ZetaMultiset>& factors);

/// r-fold tensor power; the empty power (r = 0) is {0: +1}, i.e. the
/// function s. This makes the per-point factor of a rank-0 point equal 1/s,
/// matching the counting-polynomial construction identically.
ZetaMultiset tensor_power(const ZetaMultiset& z, int r);

/// Pointwise product of the represented functions (multiplicities add).
ZetaMultiset multiply(const ZetaMultiset& a, const ZetaMultiset& b);

/// 1/Z: all multiplicities negated.
ZetaMultiset invert(const ZetaMultiset& z);

/// prod over points x of 1 / (1 - 1/s)^{tensor r(x)}.
ZetaMultiset absolute_zeta(const SchemePoints& x);

/// Numeric evaluation via log-space accumulation. s is compared with the
/// exact locations at tolerance zero: a pole hit throws pole_error, a zero
/// hit returns exactly 0.
std::complex<double> evaluate(const ZetaMultiset& z, std::complex<double> s);

/// "(s - rho)^{m}" factors sorted by (Re, Im), rationals printed as p/q.
std::string to_string(const ZetaMultiset& z);

/// For each p in p_values (each > 1, non-increasing), the regularised value
///   (p-1)^{N(1)} * prod_k (1 - p^{k-s})^{-a_k},
/// cross-checked against the truncated exponential series
///   exp(sum_{m<=M} N(p^m) p^{-sm} / m)
/// at relative 1e-6 with M chosen adaptively from the geometric tail bound.
/// Requires Re(s) > deg N; as p -> 1 the values approach
/// evaluate(zeta_from_counting(N), s).
std::vector<std::complex<double>> soule_limit_trace(const IntPolynomial& n, std::complex<double> s,
                                                    const std::vector<double>& p_values);

}  // namespace f1zeta

#endif
