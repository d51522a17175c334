#ifndef F1ZETA_SCHEME_HPP
#define F1ZETA_SCHEME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f1zeta/poly.hpp"

namespace f1zeta {

/// The computational content of a torsion-free Noetherian F1-scheme: a finite
/// multiset of point ranks r(x) (the rank of the unit group of the stalk at
/// each point of the monoid-scheme realisation). The counting polynomial, the
/// zeta function and the Euler product depend on nothing else, so topology
/// and structure sheaf are deliberately not modeled. An empty multiset is
/// legal (N = 0, zeta = 1).
struct SchemePoints {
    std::string name;
    std::vector<int> ranks;  // ascending, one entry per point
};

/// Affine r-space: one point per subset I of {1..r} with rank r-|I|,
/// 2^r points in total. Guarded at r <= 24 to keep the multiset in memory.
SchemePoints affine_space(int r);

/// Split torus of rank r: a single point of rank r.
SchemePoints torus(int r);

/// Projective line: ranks {1,0,0}.
SchemePoints projective_line();

/// Raw rank-multiset escape hatch.
SchemePoints scheme_from_ranks(std::vector<int> ranks, std::string name);

/// Product scheme: ranks are the pairwise sums. Consistent with counting
/// polynomials multiplying on products.
SchemePoints scheme_product(const SchemePoints& a, const SchemePoints& b);

/// N(t) = sum_x (t-1)^{r(x)}, expanded in Z[t].
IntPolynomial counting_function(const SchemePoints& x);

/// chi_abs = N(1), equivalently the number of rank-0 points.
BigInt euler_characteristic(const SchemePoints& x);

/// Number of F_{1^n}-points: sum_x n^{r(x)}. Cross-checked against
/// N(n+1) via the counting polynomial; a mismatch is a logic_error.
BigInt count_points_F1n(const SchemePoints& x, std::int64_t n);

/// Largest rank present; nullopt for the empty scheme.
std::optional<int> max_rank(const SchemePoints& x);

}  // namespace f1zeta

#endif
