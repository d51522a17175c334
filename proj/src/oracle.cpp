#include "f1zeta/oracle.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace f1zeta {

namespace {

constexpr std::int64_t kEnumerationLimit = 10'000'000;

// x^e reductions for the non-prime fields we support, as the coefficients of
// x^e mod f, constant term first.
const std::map<int, std::vector<int>>& reduction_table() {
    static const std::map<int, std::vector<int>> table = {
        {4, {1, 1}},            // x^2 + x + 1 over F_2
        {8, {1, 1, 0}},         // x^3 + x + 1
        {16, {1, 1, 0, 0}},     // x^4 + x + 1
        {32, {1, 0, 1, 0, 0}},  // x^5 + x^2 + 1
        {64, {1, 1, 0, 0, 0, 0}},  // x^6 + x + 1
        {9, {2, 0}},            // x^2 + 1 over F_3
        {27, {2, 1, 0}},        // x^3 + 2x + 1
        {25, {4, 4}},           // x^2 + x + 1 over F_5
        {49, {4, 6}},           // x^2 + x + 3 over F_7
    };
    return table;
}

std::vector<int> digits_base_p(int x, int p, int e) {
    std::vector<int> d(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        d[static_cast<std::size_t>(i)] = x % p;
        x /= p;
    }
    return d;
}

int from_digits(const std::vector<int>& d, int p) {
    int x = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) x = x * p + *it;
    return x;
}

}  // namespace

FieldSpec::FieldSpec(int q, int p, int e) : q_(q), p_(p), e_(e) {
    table_.assign(static_cast<std::size_t>(q) * static_cast<std::size_t>(q), 0);
    if (e == 1) {
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(q) + static_cast<std::size_t>(y)] = (x * y) % p;
        return;
    }
    const auto& red = reduction_table().at(q);
    for (int x = 0; x < q; ++x) {
        const auto dx = digits_base_p(x, p, e);
        for (int y = 0; y < q; ++y) {
            const auto dy = digits_base_p(y, p, e);
            // Schoolbook product, then reduce x^k (k >= e) top-down.
            std::vector<int> prod(static_cast<std::size_t>(2 * e - 1), 0);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] + dx[static_cast<std::size_t>(i)] * dy[static_cast<std::size_t>(j)]) % p;
            for (int k = 2 * e - 2; k >= e; --k) {
                const int c = prod[static_cast<std::size_t>(k)];
                if (c == 0) continue;
                prod[static_cast<std::size_t>(k)] = 0;
                for (int i = 0; i < e; ++i)
                    prod[static_cast<std::size_t>(k - e + i)] =
                        (prod[static_cast<std::size_t>(k - e + i)] + c * red[static_cast<std::size_t>(i)]) % p;
            }
            prod.resize(static_cast<std::size_t>(e));
            table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(q) + static_cast<std::size_t>(y)] = from_digits(prod, p);
        }
    }
}

FieldSpec FieldSpec::make(int q) {
    if (q < 2 || q > 64) throw std::domain_error("FieldSpec: q must lie in [2, 64]");
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    int m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw std::domain_error("FieldSpec: q = " + std::to_string(q) + " is not a prime power");
    return FieldSpec(q, p, e);
}

BigInt lyndon_count(int a, int n) {
    if (a < 0 || a > 8 || n < 1 || n > 14)
        throw std::domain_error("lyndon_count: enumeration envelope is 0 <= a <= 8, 1 <= n <= 14");
    if (a == 0) return 0;  // no strings over an empty alphabet
    if (a == 1) {
        // The single string; it is d-periodic for every proper divisor d.
        return (n == 1) ? 1 : 0;
    }

    // Strings are the base-a integers in [0, a^n). Writing x = q*a^d + r, the
    // string is d-periodic iff it equals its lowest d digits repeated, i.e.
    // x == r * (a^n-1)/(a^d-1), which simplifies to q == r * R' with
    // R' = (a^n - a^d) / (a^d * (a^d - 1)). Testing the maximal proper
    // divisors d = n/prime suffices: a period e | d implies period d. The
    // decomposition (q, r, r*R') is carried incrementally so the hot loop is
    // adds and compares only.
    std::uint64_t a_pow_n = 1;
    for (int i = 0; i < n; ++i) a_pow_n *= static_cast<std::uint64_t>(a);

    struct PeriodTest {
        std::uint64_t block;   // a^d
        std::uint64_t step;    // R' = (a^{n-d} - 1)/(a^d - 1), integer since d | n-d
        std::uint64_t r = 0;   // x mod a^d
        std::uint64_t q = 0;   // x div a^d
        std::uint64_t m = 0;   // r * R'
    };
    std::vector<PeriodTest> tests;
    int rest = n;
    for (int prime = 2; prime <= rest; ++prime) {
        if (rest % prime != 0) continue;
        while (rest % prime == 0) rest /= prime;
        const int d = n / prime;
        std::uint64_t a_pow_d = 1;
        for (int i = 0; i < d; ++i) a_pow_d *= static_cast<std::uint64_t>(a);
        const std::uint64_t rep = (a_pow_n - 1) / (a_pow_d - 1);
        tests.push_back({a_pow_d, (rep - 1) / a_pow_d, 0, 0, 0});
    }

    std::uint64_t aperiodic = 0;
    auto advance = [](PeriodTest& t) {
        if (++t.r == t.block) {
            t.r = 0;
            t.m = 0;
            ++t.q;
        } else {
            t.m += t.step;
        }
    };
    if (tests.size() == 1) {
        PeriodTest t0 = tests[0];
        for (std::uint64_t x = 0; x < a_pow_n; ++x) {
            aperiodic += (t0.q != t0.m);
            advance(t0);
        }
    } else if (tests.size() == 2) {
        PeriodTest t0 = tests[0], t1 = tests[1];
        for (std::uint64_t x = 0; x < a_pow_n; ++x) {
            aperiodic += (t0.q != t0.m) & (t1.q != t1.m);
            advance(t0);
            advance(t1);
        }
    } else {
        for (std::uint64_t x = 0; x < a_pow_n; ++x) {
            bool periodic = false;
            for (auto& t : tests) periodic |= (t.q == t.m);
            aperiodic += !periodic;
            for (auto& t : tests) advance(t);
        }
    }
    if (aperiodic % static_cast<std::uint64_t>(n) != 0)
        throw std::logic_error("lyndon_count: aperiodic count " + std::to_string(aperiodic) +
                               " is not divisible by n = " + std::to_string(n));
    return BigInt(static_cast<unsigned long>(aperiodic / static_cast<std::uint64_t>(n)));
}

BigInt count_affine(int r, const FieldSpec& field) {
    if (r < 0) throw std::domain_error("count_affine: r must be >= 0");
    double size = 1.0;
    for (int i = 0; i < r; ++i) size *= field.q();
    if (size > static_cast<double>(kEnumerationLimit))
        throw std::domain_error("count_affine: q^r exceeds the 10^7 enumeration envelope");

    std::vector<int> tuple(static_cast<std::size_t>(r), 0);
    std::int64_t count = 0;
    while (true) {
        ++count;
        int i = 0;
        for (; i < r; ++i) {
            if (++tuple[static_cast<std::size_t>(i)] < field.q()) break;
            tuple[static_cast<std::size_t>(i)] = 0;
        }
        if (i == r) break;
    }
    return BigInt(static_cast<long>(count));
}

BigInt count_torus(int r, const FieldSpec& field) {
    if (r < 0) throw std::domain_error("count_torus: r must be >= 0");
    double size = 1.0;
    for (int i = 0; i < r; ++i) size *= field.q() - 1;
    if (size > static_cast<double>(kEnumerationLimit))
        throw std::domain_error("count_torus: (q-1)^r exceeds the 10^7 enumeration envelope");

    // Nonzero elements are the indices 1..q-1.
    std::vector<int> tuple(static_cast<std::size_t>(r), 1);
    std::int64_t count = 0;
    while (true) {
        ++count;
        int i = 0;
        for (; i < r; ++i) {
            if (++tuple[static_cast<std::size_t>(i)] < field.q()) break;
            tuple[static_cast<std::size_t>(i)] = 1;
        }
        if (i == r) break;
    }
    return BigInt(static_cast<long>(count));
}

BigInt count_projective(int r, const FieldSpec& field) {
    if (r < 1) throw std::domain_error("count_projective: r must be >= 1");
    double size = 1.0;
    for (int i = 0; i < r + 1; ++i) size *= field.q();
    if (size > static_cast<double>(kEnumerationLimit))
        throw std::domain_error("count_projective: q^{r+1} exceeds the 10^7 enumeration envelope");

    const int q = field.q();
    const int len = r + 1;
    std::size_t total = 1;
    for (int i = 0; i < len; ++i) total *= static_cast<std::size_t>(q);

    // Walk each scalar orbit of nonzero vectors once.
    std::vector<bool> visited(total, false);
    std::vector<int> v(static_cast<std::size_t>(len));
    std::int64_t orbits = 0;
    for (std::size_t code = 1; code < total; ++code) {
        if (visited[code]) continue;
        ++orbits;
        std::size_t c = code;
        for (int i = 0; i < len; ++i) {
            v[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(q));
            c /= static_cast<std::size_t>(q);
        }
        for (int lambda = 1; lambda < q; ++lambda) {
            std::size_t scaled = 0;
            for (int i = len - 1; i >= 0; --i)
                scaled = scaled * static_cast<std::size_t>(q) +
                         static_cast<std::size_t>(field.mul(lambda, v[static_cast<std::size_t>(i)]));
            visited[scaled] = true;
        }
    }
    return BigInt(static_cast<long>(orbits));
}

BigInt count_product(const std::vector<BigInt>& counts) {
    BigInt prod = 1;
    for (const auto& c : counts) prod *= c;
    return prod;
}

}  // namespace f1zeta
