#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace melonforge {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace melonforge
