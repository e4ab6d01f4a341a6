#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace linklab {

/// Exact rational scalar. Values are kept in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;

/// Raised for malformed rational literals ("1/0", "x", "").
class RationalFormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (s.empty())
    return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      return false;
  return true;
}

inline mpz_class parse_integer(std::string_view s) {
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

} // namespace detail

/// Parses "p/q" or "p" (decimal, optional sign on p). Throws
/// RationalFormatError on anything else, including a zero denominator.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!detail::is_integer_literal(num))
    throw RationalFormatError("not a rational: \"" + std::string(text) + "\"");
  if (slash == std::string_view::npos)
    return Rational(detail::parse_integer(num));

  const std::string_view den = text.substr(slash + 1);
  if (!detail::is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw RationalFormatError("not a rational: \"" + std::string(text) + "\"");
  const mpz_class d = detail::parse_integer(den);
  if (d == 0)
    throw RationalFormatError("zero denominator in \"" + std::string(text) + "\"");
  Rational r(detail::parse_integer(num), d);
  r.canonicalize();
  return r;
}

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational &value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1)
    return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline int sign(const Rational &r) { return sgn(r); }

} // namespace linklab
