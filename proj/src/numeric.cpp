#include "f1zeta/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace f1zeta {

std::complex<double> log1p_cx(std::complex<double> z) {
    if (std::abs(z) > 0.5) return std::log(std::complex<double>(1.0) + z);
    // Alternating series; at |z|=0.5 the tail drops below eps within ~55 terms.
    std::complex<double> term = z;
    std::complex<double> sum = z;
    for (int k = 2; k < 64; ++k) {
        term *= -z;
        std::complex<double> next = sum + term / static_cast<double>(k);
        if (next == sum) break;
        sum = next;
    }
    return sum;
}

std::complex<double> expm1_cx(std::complex<double> z) {
    const double x = z.real(), y = z.imag();
    const double sh = std::sin(y / 2.0);
    // e^{x+iy}-1 = expm1(x)cos y - 2 sin^2(y/2) + i e^x sin y
    return {std::expm1(x) * std::cos(y) - 2.0 * sh * sh, std::exp(x) * std::sin(y)};
}

std::complex<double> mul_big(const BigInt& k, std::complex<double> w) {
    if (k == 0) return {0.0, 0.0};
    long exp2 = 0;
    const double d = mpz_get_d_2exp(&exp2, k.get_mpz_t());  // k = d * 2^exp2, 0.5<=|d|<1
    const int e = static_cast<int>(exp2);
    return {std::ldexp(d * w.real(), e), std::ldexp(d * w.imag(), e)};
}

std::string fmt10(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

std::string fmt10(std::complex<double> z) {
    if (std::isnan(z.real()) && std::isnan(z.imag())) return "nan";
    // Products of real-location factors are mathematically real; suppress the
    // rounding dust in the imaginary part instead of printing it.
    const double mag = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= 1e-10 * mag) return fmt10(z.real());
    std::string s = fmt10(z.real());
    s += (z.imag() < 0 ? " - " : " + ");
    s += fmt10(std::abs(z.imag()));
    s += "i";
    return s;
}

std::complex<double> parse_complex(const std::string& text) {
    std::size_t comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {re, 0.0};
        }
        std::string re_s = text.substr(0, comma), im_s = text.substr(comma + 1);
        double re = std::stod(re_s, &used);
        if (used != re_s.size()) throw std::invalid_argument(text);
        double im = std::stod(im_s, &used);
        if (used != im_s.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse complex number '" + text + "' (expected RE or RE,IM)");
    }
}

}  // namespace f1zeta
