#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace lengthsmith {

using Rational = boost::rational<std::int64_t>;

/// Parses "p", "-p" or "p/q" (no decimal point). Throws Error(kInvalidInput).
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, else "p/q" in lowest terms.
std::string format_rational(const Rational& value);

}  // namespace lengthsmith
