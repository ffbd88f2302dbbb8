// Exact rationals (GMP mpq) and their "p/q" text form.

#ifndef SEMICONV_RATIONAL_HPP_
#define SEMICONV_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "semiconv/error.hpp"

namespace semiconv {

  using Rational = mpq_class;
  using Integer  = mpz_class;

  // Canonical text: "p/q" with q > 0 and gcd(p, q) = 1; integers print as
  // "p/1" so every value on the wire has the same shape.
  inline std::string to_string(Rational const& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }

  // Accepts "p/q", "p", with optional leading sign. Whitespace is not
  // allowed.
  inline Rational parse_rational(std::string_view text) {
    auto const bad = [&] {
      return ParseError("not a rational: \"" + std::string(text) + "\"");
    };
    auto const valid_int = [](std::string_view s, bool allow_sign) {
      if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
      }
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (c < '0' || c > '9') {
          return false;
        }
      }
      return true;
    };
    auto const slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den
        = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
      throw bad();
    }
    std::string num_str(num);
    if (!num_str.empty() && num_str.front() == '+') {
      num_str.erase(0, 1);
    }
    Integer n(num_str, 10);
    Integer d(std::string(den), 10);
    if (d == 0) {
      throw bad();
    }
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  inline Rational abs(Rational const& r) {
    return r < 0 ? Rational(-r) : r;
  }

}  // namespace semiconv

#endif  // SEMICONV_RATIONAL_HPP_
