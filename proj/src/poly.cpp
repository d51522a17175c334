#include "f1zeta/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "f1zeta/arith.hpp"

namespace f1zeta {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(BigInt coeff, int degree) {
    if (degree < 0) throw std::domain_error("monomial: degree must be >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, BigInt(0));
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
}

std::optional<int> IntPolynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return static_cast<int>(coeffs_.size()) - 1;
}

const BigInt& IntPolynomial::coeff(int k) const {
    static const BigInt zero(0);
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> c(coeffs_);
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) {
    std::vector<BigInt> c(p.coeffs_);
    for (auto& v : c) v *= s;
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        BigInt mag = abs(c);
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += (k == 1) ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }
    [[noreturn]] void fail(const std::string& why) {
        throw std::domain_error("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    }
    std::string integer_digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }
};

}  // namespace

IntPolynomial IntPolynomial::parse(std::string_view text) {
    Parser p{text};
    if (p.eof()) p.fail("empty input");
    std::vector<BigInt> coeffs;
    auto put = [&](int deg, const BigInt& c) {
        if (static_cast<std::size_t>(deg) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(deg) + 1, BigInt(0));
        coeffs[static_cast<std::size_t>(deg)] += c;
    };
    bool first = true;
    while (!p.eof()) {
        int sign = 1;
        p.skip_ws();
        if (p.peek() == '+' || p.peek() == '-') {
            sign = (p.peek() == '-') ? -1 : 1;
            ++p.pos;
        } else if (!first) {
            p.fail("expected + or - between terms");
        }
        p.skip_ws();
        if (p.pos >= p.text.size()) p.fail("dangling sign");

        BigInt coeff = 1;
        bool have_coeff = false;
        bool have_star = false;
        if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
            coeff = BigInt(p.integer_digits());
            have_coeff = true;
            p.skip_ws();
            if (p.pos < p.text.size() && p.peek() == '*') {
                ++p.pos;
                have_star = true;
                p.skip_ws();
            }
        }
        if (have_star && (p.pos >= p.text.size() || p.peek() != 't')) p.fail("expected t after *");
        int deg = 0;
        if (p.pos < p.text.size() && p.peek() == 't') {
            ++p.pos;
            deg = 1;
            p.skip_ws();
            if (p.pos < p.text.size() && p.peek() == '^') {
                ++p.pos;
                deg = std::stoi(p.integer_digits());
            }
        } else if (!have_coeff) {
            p.fail("expected coefficient or t");
        }
        put(deg, sign < 0 ? BigInt(-coeff) : coeff);
        first = false;
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial shifted_power(int r) {
    if (r < 0) throw std::domain_error("shifted_power: r must be >= 0");
    std::vector<BigInt> c(static_cast<std::size_t>(r) + 1);
    for (int j = 0; j <= r; ++j) {
        BigInt b = binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(j));
        c[static_cast<std::size_t>(j)] = ((r - j) % 2 == 0) ? b : BigInt(-b);
    }
    return IntPolynomial(std::move(c));
}

BigInt linear_moebius_transform(const IntPolynomial& p, std::int64_t n) {
    if (n < 1) throw std::domain_error("linear_moebius_transform: n must be >= 1");
    BigInt sum = 0;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        sum += c[k] * kappa(static_cast<std::int64_t>(k), n);
    }
    return sum;
}

}  // namespace f1zeta
