#include "f1zeta/toric.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace f1zeta {

namespace {

using nlohmann::json;

[[noreturn]] void reject(const std::string& name, const std::string& why) {
    throw std::domain_error("fan '" + name + "': " + why);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Rank of an integer matrix by fraction-free Gaussian elimination; exact.
int matrix_rank(std::vector<std::vector<BigInt>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const BigInt a = m[rank][col], b = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] * a - m[rank][j] * b;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

bool rays_independent(const Fan& fan, const std::vector<int>& cone) {
    std::vector<std::vector<BigInt>> m;
    m.reserve(cone.size());
    for (int idx : cone) {
        std::vector<BigInt> row;
        row.reserve(fan.rays[static_cast<std::size_t>(idx)].size());
        for (std::int64_t v : fan.rays[static_cast<std::size_t>(idx)]) row.emplace_back(static_cast<long>(v));
        m.push_back(std::move(row));
    }
    return matrix_rank(std::move(m)) == static_cast<int>(cone.size());
}

void close_under_faces(Fan& fan) {
    fan.cones.insert(std::vector<int>{});  // zero cone, always present
    for (const auto& maximal : fan.maximal_cones) {
        const std::size_t k = maximal.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t(1) << i)) face.push_back(maximal[i]);
            fan.cones.insert(std::move(face));
        }
    }
}

}  // namespace

Fan parse_fan(const std::string& json_text, std::string name) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        reject(name, std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) reject(name, "document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "ambient_rank" && key != "rays" && key != "maximal_cones")
            reject(name, "unknown key '" + key + "'");
    }
    if (!doc.contains("ambient_rank") || !doc.contains("rays") || !doc.contains("maximal_cones"))
        reject(name, "required keys: ambient_rank, rays, maximal_cones");
    if (!doc["ambient_rank"].is_number_integer() || doc["ambient_rank"].get<std::int64_t>() < 1)
        reject(name, "ambient_rank must be a positive integer");

    Fan fan;
    fan.name = std::move(name);
    fan.ambient_rank = doc["ambient_rank"].get<int>();

    if (!doc["rays"].is_array()) reject(fan.name, "rays must be an array");
    for (const auto& ray : doc["rays"]) {
        if (!ray.is_array() || ray.size() != static_cast<std::size_t>(fan.ambient_rank))
            reject(fan.name, "each ray must be an integer vector of length " + std::to_string(fan.ambient_rank));
        std::vector<std::int64_t> v;
        std::int64_t g = 0;
        for (const auto& entry : ray) {
            if (!entry.is_number_integer()) reject(fan.name, "ray entries must be integers");
            v.push_back(entry.get<std::int64_t>());
            g = gcd64(g, v.back());
        }
        if (g != 1)
            reject(fan.name, "ray " + json(ray).dump() + " is not primitive (gcd of entries is " +
                                 std::to_string(g) + ")");
        if (std::find(fan.rays.begin(), fan.rays.end(), v) != fan.rays.end())
            reject(fan.name, "duplicate ray " + json(ray).dump());
        fan.rays.push_back(std::move(v));
    }

    if (!doc["maximal_cones"].is_array()) reject(fan.name, "maximal_cones must be an array");
    std::vector<bool> used(fan.rays.size(), false);
    for (const auto& cone : doc["maximal_cones"]) {
        if (!cone.is_array()) reject(fan.name, "each maximal cone must be an array of ray indices");
        std::vector<int> idx;
        for (const auto& entry : cone) {
            if (!entry.is_number_integer()) reject(fan.name, "ray indices must be integers");
            const std::int64_t i = entry.get<std::int64_t>();
            if (i < 0 || i >= static_cast<std::int64_t>(fan.rays.size()))
                reject(fan.name, "ray index " + std::to_string(i) + " out of range");
            idx.push_back(static_cast<int>(i));
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            reject(fan.name, "repeated ray index within a cone");
        for (int i : idx) used[static_cast<std::size_t>(i)] = true;
        if (!rays_independent(fan, idx))
            reject(fan.name, "generators of cone " + json(cone).dump() +
                                 " are linearly dependent (cones must be simplicial)");
        if (std::find(fan.maximal_cones.begin(), fan.maximal_cones.end(), idx) == fan.maximal_cones.end())
            fan.maximal_cones.push_back(std::move(idx));
    }
    for (std::size_t i = 0; i < used.size(); ++i)
        if (!used[i]) reject(fan.name, "ray " + std::to_string(i) + " is not used by any maximal cone");

    close_under_faces(fan);
    return fan;
}

Fan load_fan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open fan file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fan(buf.str(), path);
}

std::string fan_to_json(const Fan& fan) {
    json doc;
    doc["ambient_rank"] = fan.ambient_rank;
    doc["rays"] = json::array();
    for (const auto& ray : fan.rays) doc["rays"].push_back(ray);
    doc["maximal_cones"] = json::array();
    for (const auto& cone : fan.maximal_cones) doc["maximal_cones"].push_back(cone);
    return doc.dump();
}

std::vector<std::int64_t> dimension_census(const Fan& fan) {
    std::vector<std::int64_t> census(static_cast<std::size_t>(fan.ambient_rank) + 1, 0);
    for (const auto& cone : fan.cones) ++census[cone.size()];
    return census;
}

IntPolynomial counting_function_fan(const Fan& fan) {
    const auto census = dimension_census(fan);
    const int r = fan.ambient_rank;
    IntPolynomial n;
    for (int k = 0; k <= r; ++k)
        n = n + BigInt(static_cast<long>(census[static_cast<std::size_t>(r - k)])) * shifted_power(k);
    return n;
}

IntPolynomial counting_function_cone(const Fan& fan, const Cone& cone) {
    std::vector<int> key = cone.generators;
    std::sort(key.begin(), key.end());
    if (fan.cones.find(key) == fan.cones.end())
        throw std::domain_error("fan '" + fan.name + "': cone is not in the fan");
    // Faces of a simplicial cone are its generator subsets.
    const int d = cone.dim();
    std::vector<std::int64_t> face_census(static_cast<std::size_t>(d) + 1, 0);
    for (std::size_t mask = 0; mask < (std::size_t(1) << d); ++mask)
        ++face_census[static_cast<std::size_t>(std::popcount(mask))];
    IntPolynomial n;
    for (int k = 0; k <= d; ++k)
        n = n + BigInt(static_cast<long>(face_census[static_cast<std::size_t>(d - k)])) * shifted_power(k);
    return n;
}

SchemePoints fan_to_scheme_points(const Fan& fan) {
    std::vector<int> ranks;
    ranks.reserve(fan.cones.size());
    for (const auto& cone : fan.cones) ranks.push_back(fan.ambient_rank - static_cast<int>(cone.size()));
    std::sort(ranks.begin(), ranks.end());
    return {"fan:" + fan.name, std::move(ranks)};
}

namespace {

// --- exact 2D direction tests ------------------------------------------------

int cross2(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    // Sign of the 2x2 determinant; __int128 keeps arbitrary int64 rays exact.
    const __int128 d = static_cast<__int128>(a[0]) * b[1] - static_cast<__int128>(a[1]) * b[0];
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

// Strictly inside the open sector spanned by (lo, hi), where cross2(lo,hi) > 0.
bool strictly_inside(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& lo,
                     const std::vector<std::int64_t>& hi) {
    return cross2(lo, u) > 0 && cross2(u, hi) > 0;
}

struct Sector {
    std::vector<std::int64_t> lo, hi;  // oriented so cross2(lo,hi) > 0
    int i = -1, j = -1;                // ray indices
};

}  // namespace

FanAxiomReport verify_fan_axiom(const Fan& fan) {
    if (fan.ambient_rank > 2)
        return {FanAxiomStatus::unverified,
                "exact axiom verification is implemented for ambient rank <= 2 only (rank " +
                    std::to_string(fan.ambient_rank) + " requested)"};
    if (fan.ambient_rank == 1)
        return {FanAxiomStatus::verified, "rank-1 fans with distinct primitive rays satisfy the axiom"};

    // Rank 2: with faces closed and rays distinct, the axiom is equivalent to
    // pairwise disjoint relative interiors of the nonzero cones.
    std::vector<Sector> sectors;
    std::vector<int> loose_rays;  // rays that are themselves maximal cones
    std::vector<bool> in_sector(fan.rays.size(), false);
    for (const auto& cone : fan.cones) {
        if (cone.size() != 2) continue;
        Sector s;
        s.i = cone[0];
        s.j = cone[1];
        s.lo = fan.rays[static_cast<std::size_t>(cone[0])];
        s.hi = fan.rays[static_cast<std::size_t>(cone[1])];
        if (cross2(s.lo, s.hi) < 0) std::swap(s.lo, s.hi);
        sectors.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < fan.rays.size(); ++i) loose_rays.push_back(static_cast<int>(i));

    for (const auto& s : sectors) {
        for (int ri : loose_rays) {
            if (ri == s.i || ri == s.j) continue;
            if (strictly_inside(fan.rays[static_cast<std::size_t>(ri)], s.lo, s.hi))
                return {FanAxiomStatus::violated,
                        "ray " + std::to_string(ri) + " lies in the interior of cone {" +
                            std::to_string(s.i) + "," + std::to_string(s.j) + "}"};
        }
    }
    for (std::size_t a = 0; a < sectors.size(); ++a) {
        for (std::size_t b = a + 1; b < sectors.size(); ++b) {
            const Sector &sa = sectors[a], &sb = sectors[b];
            if (strictly_inside(sb.lo, sa.lo, sa.hi) || strictly_inside(sb.hi, sa.lo, sa.hi) ||
                strictly_inside(sa.lo, sb.lo, sb.hi) || strictly_inside(sa.hi, sb.lo, sb.hi))
                return {FanAxiomStatus::violated,
                        "cones {" + std::to_string(sa.i) + "," + std::to_string(sa.j) + "} and {" +
                            std::to_string(sb.i) + "," + std::to_string(sb.j) +
                            "} overlap in their interiors"};
        }
    }
    return {FanAxiomStatus::verified, "pairwise cone intersections are common faces"};
}

namespace {

const std::map<std::string, const char*>& bundled_fan_documents() {
    static const std::map<std::string, const char*> docs = {
        {"a1", R"({"ambient_rank": 1, "rays": [[1]], "maximal_cones": [[0]]})"},
        {"a2", R"({"ambient_rank": 2, "rays": [[1,0],[0,1]], "maximal_cones": [[0,1]]})"},
        {"a3", R"({"ambient_rank": 3, "rays": [[1,0,0],[0,1,0],[0,0,1]], "maximal_cones": [[0,1,2]]})"},
        {"a4",
         R"({"ambient_rank": 4, "rays": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]], "maximal_cones": [[0,1,2,3]]})"},
        {"p1", R"({"ambient_rank": 1, "rays": [[1],[-1]], "maximal_cones": [[0],[1]]})"},
        {"p2", R"({"ambient_rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "maximal_cones": [[0,1],[1,2],[2,0]]})"},
        {"p1xp1",
         R"({"ambient_rank": 2, "rays": [[1,0],[-1,0],[0,1],[0,-1]], "maximal_cones": [[0,2],[2,1],[1,3],[3,0]]})"},
        {"gm1", R"({"ambient_rank": 1, "rays": [], "maximal_cones": []})"},
        {"gm2", R"({"ambient_rank": 2, "rays": [], "maximal_cones": []})"},
        {"gm3", R"({"ambient_rank": 3, "rays": [], "maximal_cones": []})"},
    };
    return docs;
}

}  // namespace

Fan bundled_fan(const std::string& key) {
    const auto& docs = bundled_fan_documents();
    auto it = docs.find(key);
    if (it == docs.end()) throw std::domain_error("no bundled fan named '" + key + "'");
    return parse_fan(it->second, key);
}

std::vector<std::string> bundled_fan_keys() {
    std::vector<std::string> keys;
    for (const auto& [key, doc] : bundled_fan_documents()) {
        (void)doc;
        keys.push_back(key);
    }
    return keys;
}

}  // namespace f1zeta
