#ifndef DIRFUZZ_RATIONAL_HPP
#define DIRFUZZ_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dirfuzz {

// Transition weights and thresholds are exact rationals. Directability
// depends only on positivity, and threshold cuts compare against an exact
// boundary, so floating point never enters the semantics.
using Rational = boost::rational<std::int64_t>;

// Accepts a fraction "p/q", a decimal "0.3" / "1.0", or an integer "1".
// Returns nullopt on anything else (including negative values and q = 0).
std::optional<Rational> parse_rational(std::string_view text);

// Reduced canonical form: "p/q", or just "p" when the denominator is 1.
std::string format_rational(const Rational& r);

}  // namespace dirfuzz

#endif
