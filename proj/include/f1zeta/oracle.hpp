#ifndef F1ZETA_ORACLE_HPP
#define F1ZETA_ORACLE_HPP

#include <vector>

#include "f1zeta/bigint.hpp"

namespace f1zeta {

/// A small finite field F_q, q = p^e <= 64, with an explicit multiplication
/// table. Non-prime q is built over F_p modulo a fixed irreducible
/// polynomial; elements are indices 0..q-1 whose base-p digits are the
/// coefficient vectors (so 0 and 1 are the additive and multiplicative
/// identities).
class FieldSpec {
  public:
    static FieldSpec make(int q);

    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }
    int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(y)]; }

  private:
    FieldSpec(int q, int p, int e);
    int q_, p_, e_;
    std::vector<int> table_;
};

/// Number of Lyndon words of length n over an a-letter alphabet: counts the
/// aperiodic strings one by one and divides by n (checked exact). This is the
/// independent oracle for kappa_a(n); it never touches the Moebius function.
/// Envelope: a <= 8, n <= 14.
BigInt lyndon_count(int a, int n);

/// #A^r(F_q) by explicit tuple enumeration (envelope q^r <= 10^7).
BigInt count_affine(int r, const FieldSpec& field);

/// #G_m^r(F_q): tuples of nonzero elements (envelope (q-1)^r <= 10^7).
BigInt count_torus(int r, const FieldSpec& field);

/// #P^r(F_q) by walking scalar orbits of nonzero vectors with the field's
/// multiplication table (envelope q^{r+1} <= 10^7).
BigInt count_projective(int r, const FieldSpec& field);

/// Product of a list of counts (empty product = 1).
BigInt count_product(const std::vector<BigInt>& counts);

}  // namespace f1zeta

#endif
