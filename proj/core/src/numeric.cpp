#include "coalescent/numeric.hpp"

#include <cctype>

#include "coalescent/errors.hpp"

namespace coalescent {

std::string to_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1")
                                                   : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw Error(ErrorCode::ParseError,
                "not a rational literal: '" + std::string(text) + "'");
  }
  const std::string num_digits(num[0] == '+' ? num.substr(1) : num);
  Integer p(num_digits);
  Integer q{std::string(den)};
  if (q == 0) {
    throw Error(ErrorCode::ParseError,
                "zero denominator: '" + std::string(text) + "'");
  }
  return Rational(p, q);
}

}  // namespace coalescent
