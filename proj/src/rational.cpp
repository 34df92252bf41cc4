#include "relbraid/rational.hpp"

#include "relbraid/errors.hpp"

#include <cctype>

namespace relbraid {
namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw SyntaxError("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw SyntaxError("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return boost::multiprecision::cpp_int(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  auto num = parse_integer(text.substr(0, slash), text);
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw SyntaxError("malformed rational: '" + std::string(text) + "'");
  }
  auto den = parse_integer(den_text, text);
  if (den == 0) throw SyntaxError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

int sign_of(const Rational& value) { return value.sign(); }

}  // namespace relbraid
