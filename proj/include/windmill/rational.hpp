#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace windmill {

/// Exact rational scalar. Always stored reduced with a positive denominator,
/// so equality is structural.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline int sign_of(const Rational& r) { return r.sign(); }

inline bool is_power_of_two(const Integer& v) {
  return v > 0 && (v & (v - 1)) == 0;
}

inline bool is_dyadic(const Rational& r) {
  return is_power_of_two(boost::multiprecision::denominator(r));
}

namespace detail {

inline bool is_decimal_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses "p/q" with decimal integers p (optionally signed) and q > 0.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("rational '" + std::string(text) + "' is not of the form p/q");
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!detail::is_decimal_integer(num, true) || !detail::is_decimal_integer(den, false)) {
    throw std::invalid_argument("rational '" + std::string(text) + "' has a non-integer part");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  Integer p(num_str);
  Integer q{std::string(den)};
  if (q == 0) {
    throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  }
  return Rational(p, q);
}

/// Canonical "p/q" form (denominator always present).
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace windmill
