#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace opd {

using Rational = mpq_class;

// mpq_class(string) does not reduce the fraction; canonicalize before use.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string render_rational(const Rational& r) { return r.get_str(); }

inline Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace opd
