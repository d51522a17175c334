#ifndef F1ZETA_TORIC_HPP
#define F1ZETA_TORIC_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "f1zeta/poly.hpp"
#include "f1zeta/scheme.hpp"

namespace f1zeta {

/// A simplicial cone inside a fan, identified by the (sorted) indices of its
/// generating rays in the fan's ray table. The empty set is the zero cone;
/// dimension equals the number of generators.
struct Cone {
    std::vector<int> generators;
    int dim() const { return static_cast<int>(generators.size()); }
};

/// A finite fan of strongly convex rational simplicial cones in Z^r, given
/// combinatorially as primitive rays plus maximal cones and closed under
/// faces (faces of a simplicial cone are its generator subsets). The
/// geometric axiom "sigma1 cap sigma2 is a face of each" is not implied by
/// this data; see verify_fan_axiom.
struct Fan {
    std::string name;
    int ambient_rank = 0;
    std::vector<std::vector<std::int64_t>> rays;  // primitive, pairwise distinct
    std::set<std::vector<int>> cones;             // sorted index sets, incl. {}
    std::vector<std::vector<int>> maximal_cones;  // as given, sorted indices
};

/// Parses and validates the JSON fan document
///   { "ambient_rank": r, "rays": [[int,...],...], "maximal_cones": [[i,...],...] }
/// Ray indices are 0-based, the zero cone is implicit, unknown keys are
/// rejected. Rays must be primitive (gcd of entries 1) and distinct; each
/// maximal cone's rays must be linearly independent over Q (checked by exact
/// fraction-free elimination). Face closure is completed automatically.
Fan parse_fan(const std::string& json_text, std::string name = "fan");

Fan load_fan_file(const std::string& path);

/// Canonical JSON document for the fan (round-trips through parse_fan).
std::string fan_to_json(const Fan& fan);

/// Fans bundled with the library: a1..a4, p1, p2, p1xp1, gm1..gm3.
Fan bundled_fan(const std::string& key);
std::vector<std::string> bundled_fan_keys();

/// census[k] = number of cones of dimension k, for k = 0..ambient_rank.
std::vector<std::int64_t> dimension_census(const Fan& fan);

/// N(t) = sum_k census[r-k] * (t-1)^k for the toric scheme of the fan.
IntPolynomial counting_function_fan(const Fan& fan);

/// Counting polynomial of the scheme of a single cone of the fan, from its
/// own face census; the ambient degree is dim(cone). Throws domain_error if
/// the cone is not in the fan.
IntPolynomial counting_function_cone(const Fan& fan, const Cone& cone);

/// One point per cone, of rank ambient_rank - dim(cone).
SchemePoints fan_to_scheme_points(const Fan& fan);

enum class FanAxiomStatus { verified, unverified, violated };

struct FanAxiomReport {
    FanAxiomStatus status;
    std::string detail;
};

/// Exact check that pairwise intersections of cones are common faces.
/// Implemented for ambient rank <= 2 with integer cross-product tests; for
/// higher rank the report is `unverified` (the counting machinery does not
/// depend on the axiom, only on the dimension census).
FanAxiomReport verify_fan_axiom(const Fan& fan);

}  // namespace f1zeta

#endif
