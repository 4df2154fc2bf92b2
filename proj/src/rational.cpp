#include "biaslab/rational.hpp"

namespace biaslab {

namespace {

Int parse_int(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw ParseError("sign without digits");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ParseError("invalid integer literal: '" + std::string(text) + "'");
        }
    }
    return Int(std::string(text));
}

}  // namespace

Rat parse_rational(std::string_view text) {
    if (text.find('.') != std::string_view::npos ||
        text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos) {
        throw ParseError("decimal notation rejected, use p/q: '" + std::string(text) + "'");
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text));
    }
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
}

std::string rat_string(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string int_string(const Int& value) { return value.str(); }

Rat rat_pow(const Rat& base, std::uint64_t exp) {
    Rat result{1};
    Rat b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

Int int_factorial(unsigned n) {
    Int f{1};
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace biaslab
