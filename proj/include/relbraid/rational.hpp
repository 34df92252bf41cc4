#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace relbraid {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" or a plain integer, optional leading sign on p.
Rational parse_rational(std::string_view text);

// Integers print without a denominator.
std::string format_rational(const Rational& value);

int sign_of(const Rational& value);

}  // namespace relbraid
