#pragma once

// Exact rational scalars. Every component in the library is a Scalar; there
// is no floating point anywhere in the core.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "hn3/errors.hpp"

namespace hn3 {

using Integer = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0, gcd 1.
inline std::string to_string(const Scalar& s) { return s.str(); }

/// Parses "p", "-p", "p/q" or "-p/q" with decimal digits only. The result is
/// reduced; a zero denominator is rejected.
inline Scalar parse_scalar(std::string_view text) {
  auto fail = [&](const char* why) -> Scalar {
    throw ParseError("", "invalid rational \"" + std::string(text) + "\": " + why);
  };
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den)) return fail("expected p or p/q");

  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) return fail("zero denominator");
  if (negative) n = -n;
  return Scalar(n, d);
}

inline bool is_zero(const Scalar& s) { return s == 0; }

}  // namespace hn3
