#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace coalescent {

// Exact arithmetic throughout; no floating point enters any topological check.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Lowest-terms "p/q" form; the denominator is always written, so 0 is "0/1".
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace coalescent
