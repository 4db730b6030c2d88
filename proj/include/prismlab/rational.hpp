#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace prismlab {

using Rational = boost::multiprecision::cpp_rational;

/// Accepts "p", "-p", "p/q" with q != 0. Throws ParseError otherwise.
Rational parse_rational(const std::string& text);

/// "p" for integers, otherwise "p/q" in lowest terms with q > 0.
std::string to_string(const Rational& value);

} // namespace prismlab
