#pragma once

#include <string>
#include <vector>

#include "opd/rational.hpp"

namespace opd {

enum class SeriesKind { EGF, OGF };

// Truncated series with zero constant term; c[n] is the coefficient of t^n,
// c[0] always 0. EGF stores dim/n! per arity, OGF stores dim directly.
struct HilbertSeries {
  SeriesKind kind = SeriesKind::EGF;
  std::vector<Rational> c;  // size trunc+1

  int trunc() const { return static_cast<int>(c.size()) - 1; }
  Rational coeff(int n) const {
    return n >= 0 && n < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(n)] : Rational(0);
  }
};

// dims[0] = dimension in arity 1.
HilbertSeries from_dims(const std::vector<int>& dims, SeriesKind kind);

HilbertSeries series_t(SeriesKind kind, int trunc);

HilbertSeries add(const HilbertSeries& f, const HilbertSeries& g);
HilbertSeries mul(const HilbertSeries& f, const HilbertSeries& g);

// f(g(t)); needs g without constant term, which the type enforces.
HilbertSeries compose_series(const HilbertSeries& f, const HilbertSeries& g);

// Compositional inverse: h with f(h(t)) = t; needs nonzero linear coefficient.
HilbertSeries comp_inverse(const HilbertSeries& f);

// f(-t) up to sign bookkeeping: coefficient n scaled by (-1)^n.
HilbertSeries negate_arg(const HilbertSeries& f);

// The Koszul sign test: invert t -> -f(-t) and look for negative coefficients.
struct SignTest {
  bool passes = true;          // no negative coefficient up to the truncation
  int first_negative = -1;     // degree of the first negative coefficient
  HilbertSeries inverse;
};
SignTest koszul_sign_test(const HilbertSeries& f);

// Integer dimensions: c[n] * n! for EGF, c[n] for OGF; throws when not a
// nonnegative integer.
std::vector<long> series_dims(const HilbertSeries& f);

std::string render_series(const HilbertSeries& f);

}  // namespace opd
