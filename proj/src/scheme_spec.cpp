#include "f1zeta/scheme_spec.hpp"

#include <cctype>
#include <stdexcept>

#include "f1zeta/toric.hpp"

namespace f1zeta {

namespace {

int parse_rank(const std::string& text, const std::string& spec) {
    try {
        std::size_t used = 0;
        const int r = std::stoi(text, &used);
        if (used != text.size() || r < 0) throw std::invalid_argument(text);
        return r;
    } catch (const std::exception&) {
        throw std::domain_error("scheme spec '" + spec + "': expected a nonnegative rank, got '" + text + "'");
    }
}

}  // namespace

SchemePoints parse_scheme_spec(const std::string& spec) {
    if (spec == "p1") return projective_line();
    if (spec.rfind("affine:", 0) == 0) {
        SchemePoints x = affine_space(parse_rank(spec.substr(7), spec));
        x.name = spec;
        return x;
    }
    if (spec.rfind("torus:", 0) == 0) {
        SchemePoints x = torus(parse_rank(spec.substr(6), spec));
        x.name = spec;
        return x;
    }
    if (spec.rfind("fan:", 0) == 0) {
        const std::string path = spec.substr(4);
        SchemePoints x = fan_to_scheme_points(load_fan_file(path));
        x.name = spec;
        return x;
    }
    if (spec.rfind("ranks:", 0) == 0) {
        std::string body = spec.substr(6);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw std::domain_error("scheme spec '" + spec + "': expected ranks:[r1,r2,...]");
        body = body.substr(1, body.size() - 2);
        std::vector<int> ranks;
        std::string token;
        auto flush = [&] {
            std::string trimmed;
            for (char c : token)
                if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
            if (!trimmed.empty()) ranks.push_back(parse_rank(trimmed, spec));
            token.clear();
        };
        for (char c : body) {
            if (c == ',')
                flush();
            else
                token += c;
        }
        flush();
        return scheme_from_ranks(std::move(ranks), spec);
    }
    throw std::domain_error("unknown scheme spec '" + spec +
                            "' (expected affine:r, torus:r, p1, fan:<path>, or ranks:[...])");
}

}  // namespace f1zeta
