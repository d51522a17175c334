#include "f1zeta/arith.hpp"

#include <stdexcept>
#include <string>

namespace f1zeta {

namespace {

constexpr std::int64_t kMoebiusLimit = 10'000'000;

void require_positive(std::int64_t n, const char* op) {
    if (n < 1) throw std::domain_error(std::string(op) + ": n must be >= 1, got " + std::to_string(n));
}

// Smallest-prime-factor style Moebius sieve for dense table fills.
std::vector<signed char> moebius_sieve(std::int64_t n_max) {
    std::vector<signed char> mu(static_cast<std::size_t>(n_max) + 1, 1);
    std::vector<std::int64_t> primes;
    std::vector<bool> composite(static_cast<std::size_t>(n_max) + 1, false);
    if (n_max >= 0) mu[0] = 0;
    for (std::int64_t i = 2; i <= n_max; ++i) {
        if (!composite[static_cast<std::size_t>(i)]) {
            primes.push_back(i);
            mu[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (i * p > n_max) break;
            composite[static_cast<std::size_t>(i * p)] = true;
            if (i % p == 0) {
                mu[static_cast<std::size_t>(i * p)] = 0;
                break;
            }
            mu[static_cast<std::size_t>(i * p)] =
                static_cast<signed char>(-mu[static_cast<std::size_t>(i)]);
        }
    }
    return mu;
}

}  // namespace

int moebius(std::int64_t n) {
    require_positive(n, "moebius");
    if (n > kMoebiusLimit)
        throw std::domain_error("moebius: n = " + std::to_string(n) + " exceeds the supported envelope 10^7");
    if (n == 1) return 1;
    int distinct = 0;
    auto strip = [&](std::int64_t p) -> bool {
        if (n % p != 0) return true;
        n /= p;
        if (n % p == 0) return false;  // squared prime factor
        ++distinct;
        return true;
    };
    if (!strip(2) || !strip(3) || !strip(5)) return 0;
    static constexpr int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::int64_t f = 7;
    int w = 0;
    while (f * f <= n) {
        if (!strip(f)) return 0;
        f += wheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) ++distinct;
    return (distinct % 2 == 0) ? 1 : -1;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

BigInt kappa(std::int64_t a, std::int64_t n) {
    require_positive(n, "kappa");
    BigInt sum = 0;
    const BigInt base(static_cast<long>(a));
    for (std::int64_t m : divisors(n)) {
        const int mu = moebius(n / m);
        if (mu == 0) continue;
        BigInt p = pow_int(base, static_cast<unsigned long>(m));
        if (mu > 0)
            sum += p;
        else
            sum -= p;
    }
    return exact_div(sum, BigInt(static_cast<long>(n)), "kappa");
}

std::vector<BigInt> kappa_table(std::int64_t a, std::int64_t n_max) {
    require_positive(n_max, "kappa_table");
    const auto mu = moebius_sieve(n_max);
    std::vector<BigInt> acc(static_cast<std::size_t>(n_max) + 1, BigInt(0));
    const BigInt base(static_cast<long>(a));
    BigInt power = 1;  // a^m, updated incrementally
    for (std::int64_t m = 1; m <= n_max; ++m) {
        power *= base;
        if (power == 0) break;  // a = 0: every remaining term vanishes
        for (std::int64_t n = m; n <= n_max; n += m) {
            const signed char s = mu[static_cast<std::size_t>(n / m)];
            if (s > 0)
                acc[static_cast<std::size_t>(n)] += power;
            else if (s < 0)
                acc[static_cast<std::size_t>(n)] -= power;
        }
    }
    for (std::int64_t n = 1; n <= n_max; ++n)
        acc[static_cast<std::size_t>(n)] =
            exact_div(acc[static_cast<std::size_t>(n)], BigInt(static_cast<long>(n)), "kappa_table");
    return acc;
}

}  // namespace f1zeta
