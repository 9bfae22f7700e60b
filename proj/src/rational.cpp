#include "qprop/rational.hpp"

#include <stdexcept>

namespace qprop {

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("sign without digits in rational literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw std::invalid_argument("invalid character in rational literal: '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  return Rational(num, den);
}

}  // namespace qprop
