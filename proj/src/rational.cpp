#include "lscert/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace lscert {

Rational pow3(int e) {
  Int p = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) {
    p *= 3;
  }
  if (e < 0) {
    return Rational(1, p);
  }
  return Rational(p);
}

Rational pow_rational(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= base;
  }
  return r;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string rat_to_string(const Rational& q) {
  if (denominator(q) == 1) {
    return numerator(q).str();
  }
  return numerator(q).str() + "/" + denominator(q).str();
}

std::optional<Rational> rat_from_string(const std::string& text) {
  if (text.empty()) {
    return std::nullopt;
  }
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  Int num = 0;
  Int den = 1;
  bool any_digit = false;
  bool seen_dot = false;
  bool seen_slash = false;
  Int slash_den = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      any_digit = true;
      if (seen_slash) {
        slash_den = slash_den * 10 + (c - '0');
      } else {
        num = num * 10 + (c - '0');
        if (seen_dot) {
          den *= 10;
        }
      }
    } else if (c == '.' && !seen_dot && !seen_slash) {
      seen_dot = true;
    } else if (c == '/' && !seen_slash && !seen_dot && any_digit) {
      seen_slash = true;
      any_digit = false;
    } else {
      return std::nullopt;
    }
  }
  if (!any_digit) {
    return std::nullopt;
  }
  if (seen_slash) {
    if (slash_den == 0) {
      return std::nullopt;
    }
    den = slash_den;
  }
  Rational q(num, den);
  return neg ? -q : q;
}

Int rational_floor(const Rational& q) {
  Int n = numerator(q);
  Int d = denominator(q);
  Int f = n / d;
  if (n < 0 && f * d != n) {
    --f;
  }
  return f;
}

Int isqrt_floor(const Int& n) {
  if (n <= 0) {
    return 0;
  }
  return boost::multiprecision::sqrt(n);
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) {
    return std::nullopt;
  }
  Int num = numerator(q);
  Int den = denominator(q);
  Int rn = isqrt_floor(num);
  Int rd = isqrt_floor(den);
  if (rn * rn != num || rd * rd != den) {
    return std::nullopt;
  }
  return Rational(rn, rd);
}

}  // namespace lscert
