#include "f1zeta/zeta.hpp"

#include <cmath>
#include <stdexcept>

#include "f1zeta/errors.hpp"
#include "f1zeta/numeric.hpp"

namespace f1zeta {

ZetaMultiset::ZetaMultiset(std::initializer_list<std::pair<RationalComplex, BigInt>> entries) {
    for (const auto& [loc, mult] : entries) add(loc, mult);
}

void ZetaMultiset::add(const RationalComplex& location, const BigInt& multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = entries_.emplace(location, multiplicity);
    if (!inserted) {
        it->second += multiplicity;
        if (it->second == 0) entries_.erase(it);
    }
}

ZetaMultiset zeta_from_counting(const IntPolynomial& n) {
    ZetaMultiset z;
    const auto& coeffs = n.coeffs();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        z.add(RationalComplex(static_cast<long>(k)), -coeffs[k]);
    return z;
}

ZetaMultiset tensor(const std::vector<ZetaMultiset>& factors) {
    const std::size_t r = factors.size();
    if (r == 0) throw std::domain_error("tensor: at least one factor is required");
    // Guard against accidental combinatorial blow-ups before enumerating.
    double tuples = 1.0;
    for (const auto& f : factors) tuples *= static_cast<double>(std::max<std::size_t>(f.size(), 1));
    if (tuples > (1u << 26))
        throw std::domain_error("tensor: location-tuple count exceeds the 2^26 envelope");

    ZetaMultiset out;
    if (tuples == 0.0) return out;  // some factor is the constant 1? (empty set: see below)
    for (const auto& f : factors)
        if (f.empty()) return out;  // empty factor = constant 1: no tuples, product over none

    std::vector<ZetaMultiset::Map::const_iterator> cursor;
    cursor.reserve(r);
    for (const auto& f : factors) cursor.push_back(f.entries().begin());
    const bool odd_sign = (r % 2 == 0);  // (-1)^{r-1} = -1 iff r even
    while (true) {
        // Classify the tuple by the imaginary parts' signs.
        bool all_nonneg = true, all_neg = true;
        for (const auto& it : cursor) {
            if (sgn(it->first.im) < 0)
                all_nonneg = false;
            else
                all_neg = false;
        }
        if (all_nonneg || all_neg) {
            Rational re(0), im(0);
            BigInt mult(1);
            for (const auto& it : cursor) {
                re += it->first.re;
                im += it->first.im;
                mult *= it->second;
            }
            if (all_neg && odd_sign) mult = -mult;
            out.add(RationalComplex(std::move(re), std::move(im)), mult);
        }
        // Advance the odometer.
        std::size_t i = 0;
        for (; i < r; ++i) {
            if (++cursor[i] != factors[i].entries().end()) break;
            cursor[i] = factors[i].entries().begin();
        }
        if (i == r) break;
    }
    return out;
}

ZetaMultiset tensor_power(const ZetaMultiset& z, int r) {
    if (r < 0) throw std::domain_error("tensor_power: r must be >= 0");
    if (r == 0) {
        ZetaMultiset s;
        s.add(RationalComplex(0), BigInt(1));
        return s;
    }
    return tensor(std::vector<ZetaMultiset>(static_cast<std::size_t>(r), z));
}

ZetaMultiset multiply(const ZetaMultiset& a, const ZetaMultiset& b) {
    ZetaMultiset out = a;
    for (const auto& [loc, mult] : b.entries()) out.add(loc, mult);
    return out;
}

ZetaMultiset invert(const ZetaMultiset& z) {
    ZetaMultiset out;
    for (const auto& [loc, mult] : z.entries()) out.add(loc, -mult);
    return out;
}

ZetaMultiset absolute_zeta(const SchemePoints& x) {
    // The base factor 1 - 1/s = (s-1)/s as a multiset.
    ZetaMultiset base;
    base.add(RationalComplex(1), BigInt(1));
    base.add(RationalComplex(0), BigInt(-1));

    // Group points by rank; each rank contributes its tensor power once.
    std::map<int, long> census;
    for (int r : x.ranks) ++census[r];
    ZetaMultiset out;
    for (const auto& [rank, count] : census) {
        ZetaMultiset factor = invert(tensor_power(base, rank));
        for (const auto& [loc, mult] : factor.entries()) out.add(loc, BigInt(count) * mult);
    }
    return out;
}

std::complex<double> evaluate(const ZetaMultiset& z, std::complex<double> s) {
    for (const auto& [loc, mult] : z.entries()) {
        if (loc.to_complex() == s) {
            if (mult < 0)
                throw pole_error("evaluate: s = " + fmt10(s) + " is a pole of order " +
                                 BigInt(-mult).get_str());
            return {0.0, 0.0};
        }
    }
    std::complex<double> log_sum = 0.0;
    for (const auto& [loc, mult] : z.entries())
        log_sum += mul_big(mult, std::log(s - loc.to_complex()));
    return std::exp(log_sum);
}

std::string to_string(const ZetaMultiset& z) {
    if (z.empty()) return "1";
    std::string out;
    for (const auto& [loc, mult] : z.entries()) {
        if (!out.empty()) out += " ";
        out += "(s";
        if (loc.im == 0) {
            if (loc.re != 0) {
                out += (loc.re < 0) ? " + " : " - ";
                Rational mag = abs(loc.re);
                out += to_string(mag);
            }
        } else {
            out += " - (" + to_string(loc.re);
            out += (loc.im < 0) ? " - " : " + ";
            Rational mag = abs(loc.im);
            out += to_string(mag) + "i)";
        }
        out += ")^{" + mult.get_str() + "}";
    }
    return out;
}

std::vector<std::complex<double>> soule_limit_trace(const IntPolynomial& n, std::complex<double> s,
                                                    const std::vector<double>& p_values) {
    const auto deg = n.degree();
    if (deg && s.real() <= static_cast<double>(*deg))
        throw std::domain_error("soule_limit_trace: requires Re(s) > deg N = " + std::to_string(*deg));
    for (std::size_t i = 0; i + 1 < p_values.size(); ++i)
        if (p_values[i] < p_values[i + 1])
            throw std::domain_error("soule_limit_trace: p_values must be non-increasing");

    const auto& coeffs = n.coeffs();
    const double chi = n.eval(BigInt(1)).get_d();  // N(1)

    std::vector<std::complex<double>> out;
    out.reserve(p_values.size());
    for (double p : p_values) {
        if (!(p > 1.0)) throw std::domain_error("soule_limit_trace: every p must be > 1");
        const double logp = std::log(p);

        // Product form: (p-1)^{N(1)} prod_k (1 - p^{k-s})^{-a_k}, with the
        // near-1 cancellation in 1 - p^{k-s} handled by expm1.
        std::complex<double> log_z = 0.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const std::complex<double> w = (static_cast<double>(k) - s) * logp;
            const std::complex<double> one_minus = -expm1_cx(w);
            log_z -= mul_big(coeffs[k], std::log(one_minus));
        }
        const std::complex<double> z_product = std::exp(log_z);

        if (!n.is_zero()) {
            // Independent partial series exp(sum_{m<=M} N(p^m) p^{-sm} / m),
            // truncated when the geometric tail bound drops below 1e-8.
            double coeff_mass = 0.0;
            for (const auto& c : coeffs) coeff_mass += std::abs(c.get_d());
            const double q = std::exp((static_cast<double>(*deg) - s.real()) * logp);  // < 1
            std::complex<double> series = 0.0;
            const std::complex<double> step = std::exp(-s * logp);  // p^{-s}
            std::complex<double> psm = 1.0;                         // p^{-sm}
            double pm = 1.0;                                        // p^{m}
            double qm = 1.0;                                        // q^{m}
            const long m_cap = 200'000'000;
            for (long m = 1; m <= m_cap; ++m) {
                psm *= step;
                pm *= p;
                qm *= q;
                double npm = 0.0;  // N(p^m) by Horner
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) npm = npm * pm + it->get_d();
                series += npm * psm / static_cast<double>(m);
                const double tail = coeff_mass * qm * q / ((static_cast<double>(m) + 1.0) * (1.0 - q));
                if (tail <= 1e-8 * std::max(1.0, std::abs(series))) break;
            }
            const std::complex<double> z_series = std::exp(series);
            const double rel = std::abs(z_series - z_product) / std::max(1e-300, std::abs(z_product));
            if (rel > 1e-6)
                throw std::logic_error("soule_limit_trace: series/product cross-check failed at p = " +
                                       fmt10(p) + " (relative deviation " + fmt10(rel) + ")");
        }
        out.push_back(std::pow(p - 1.0, chi) * z_product);
    }
    return out;
}

}  // namespace f1zeta
