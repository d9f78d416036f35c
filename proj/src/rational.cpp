#include "dirfuzz/rational.hpp"

#include <cctype>

namespace dirfuzz {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    if (!all_digits(s) || s.size() > 18) return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto p = parse_int(text.substr(0, slash));
        auto q = parse_int(text.substr(slash + 1));
        if (!p || !q || *q == 0) return std::nullopt;
        return Rational(*p, *q);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        auto v = parse_int(text);
        if (!v) return std::nullopt;
        return Rational(*v);
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    auto w = parse_int(whole);
    auto f = parse_int(frac);
    if (!w || !f || frac.size() > 15) return std::nullopt;
    std::int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(*w) + Rational(*f, scale);
}

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace dirfuzz
