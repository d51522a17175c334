#include "f1zeta/scheme.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace f1zeta {

namespace {

void require_rank(int r, const char* op) {
    if (r < 0) throw std::domain_error(std::string(op) + ": rank must be >= 0");
}

// rank -> number of points of that rank
std::map<int, std::int64_t> rank_census(const SchemePoints& x) {
    std::map<int, std::int64_t> census;
    for (int r : x.ranks) ++census[r];
    return census;
}

}  // namespace

SchemePoints affine_space(int r) {
    require_rank(r, "affine_space");
    if (r > 24)
        throw std::domain_error("affine_space: r = " + std::to_string(r) +
                                " exceeds the 2^24-point envelope");
    // One point per subset of {1..r}; C(r,i) subsets of size i give rank r-i.
    std::vector<int> ranks;
    ranks.reserve(std::size_t(1) << r);
    for (int rank = 0; rank <= r; ++rank) {
        const long count = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(rank)).get_si();
        for (long i = 0; i < count; ++i) ranks.push_back(rank);
    }
    return {"affine:" + std::to_string(r), std::move(ranks)};
}

SchemePoints torus(int r) {
    require_rank(r, "torus");
    return {"torus:" + std::to_string(r), {r}};
}

SchemePoints projective_line() { return {"p1", {0, 0, 1}}; }

SchemePoints scheme_from_ranks(std::vector<int> ranks, std::string name) {
    for (int r : ranks) require_rank(r, "scheme_from_ranks");
    std::sort(ranks.begin(), ranks.end());
    return {std::move(name), std::move(ranks)};
}

SchemePoints scheme_product(const SchemePoints& a, const SchemePoints& b) {
    std::vector<int> ranks;
    ranks.reserve(a.ranks.size() * b.ranks.size());
    for (int ra : a.ranks)
        for (int rb : b.ranks) ranks.push_back(ra + rb);
    std::sort(ranks.begin(), ranks.end());
    return {a.name + " x " + b.name, std::move(ranks)};
}

IntPolynomial counting_function(const SchemePoints& x) {
    IntPolynomial n;
    for (const auto& [rank, count] : rank_census(x))
        n = n + BigInt(static_cast<long>(count)) * shifted_power(rank);
    return n;
}

BigInt euler_characteristic(const SchemePoints& x) {
    // (1-1)^r vanishes except at r = 0, so N(1) counts the rank-0 points.
    return BigInt(static_cast<long>(std::count(x.ranks.begin(), x.ranks.end(), 0)));
}

BigInt count_points_F1n(const SchemePoints& x, std::int64_t n) {
    if (n < 1) throw std::domain_error("count_points_F1n: n must be >= 1");
    BigInt total = 0;
    for (const auto& [rank, count] : rank_census(x))
        total += BigInt(static_cast<long>(count)) * pow_int(n, static_cast<unsigned long>(rank));
    const BigInt via_poly = counting_function(x).eval(BigInt(static_cast<long>(n + 1)));
    if (total != via_poly)
        throw std::logic_error("count_points_F1n: rank sum " + total.get_str() +
                               " disagrees with N(n+1) = " + via_poly.get_str());
    return total;
}

std::optional<int> max_rank(const SchemePoints& x) {
    if (x.ranks.empty()) return std::nullopt;
    return *std::max_element(x.ranks.begin(), x.ranks.end());
}

}  // namespace f1zeta
