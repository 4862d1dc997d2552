#include "opd/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace opd {

HilbertSeries from_dims(const std::vector<int>& dims, SeriesKind kind) {
  HilbertSeries f;
  f.kind = kind;
  f.c.assign(dims.size() + 1, Rational(0));
  for (std::size_t i = 0; i < dims.size(); ++i) {
    Rational v(dims[i]);
    if (kind == SeriesKind::EGF) v /= factorial(static_cast<int>(i) + 1);
    f.c[i + 1] = v;
  }
  return f;
}

HilbertSeries series_t(SeriesKind kind, int trunc) {
  HilbertSeries f;
  f.kind = kind;
  f.c.assign(static_cast<std::size_t>(std::max(trunc, 1)) + 1, Rational(0));
  f.c[1] = 1;
  return f;
}

namespace {

void check_kinds(const HilbertSeries& f, const HilbertSeries& g) {
  if (f.kind != g.kind) throw std::invalid_argument("series kinds must agree");
}

}  // namespace

HilbertSeries add(const HilbertSeries& f, const HilbertSeries& g) {
  check_kinds(f, g);
  HilbertSeries out;
  out.kind = f.kind;
  const int tr = std::min(f.trunc(), g.trunc());
  out.c.assign(static_cast<std::size_t>(tr) + 1, Rational(0));
  for (int n = 0; n <= tr; ++n) out.c[static_cast<std::size_t>(n)] = f.coeff(n) + g.coeff(n);
  return out;
}

HilbertSeries mul(const HilbertSeries& f, const HilbertSeries& g) {
  check_kinds(f, g);
  HilbertSeries out;
  out.kind = f.kind;
  // Both factors vanish at 0, so degree n needs factors only up to n-1; the
  // reliable truncation is the smaller of the two.
  const int tr = std::min(f.trunc(), g.trunc());
  out.c.assign(static_cast<std::size_t>(tr) + 1, Rational(0));
  for (int a = 1; a <= tr; ++a)
    for (int b = 1; a + b <= tr; ++b)
      out.c[static_cast<std::size_t>(a + b)] += f.coeff(a) * g.coeff(b);
  return out;
}

HilbertSeries compose_series(const HilbertSeries& f, const HilbertSeries& g) {
  check_kinds(f, g);
  if (g.coeff(0) != 0) throw std::invalid_argument("composition needs a series without constant term");
  const int tr = std::min(f.trunc(), g.trunc());
  HilbertSeries out;
  out.kind = f.kind;
  out.c.assign(static_cast<std::size_t>(tr) + 1, Rational(0));
  // Accumulate f_k * g^k; powers of g stay reliable to tr since g(0) = 0.
  HilbertSeries gp = g;
  gp.c.resize(static_cast<std::size_t>(tr) + 1);
  for (int k = 1; k <= tr; ++k) {
    if (f.coeff(k) != 0)
      for (int n = k; n <= tr; ++n)
        out.c[static_cast<std::size_t>(n)] += f.coeff(k) * gp.coeff(n);
    if (k < tr) gp = mul(gp, g);
  }
  return out;
}

HilbertSeries comp_inverse(const HilbertSeries& f) {
  if (f.coeff(1) == 0)
    throw std::invalid_argument("compositional inverse needs a nonzero linear term");
  const int tr = f.trunc();
  HilbertSeries h;
  h.kind = f.kind;
  h.c.assign(static_cast<std::size_t>(tr) + 1, Rational(0));
  h.c[1] = Rational(1) / f.coeff(1);
  // Solve f(h(t)) = t degree by degree: the defect at degree n is linear in
  // the unknown h_n with coefficient f_1.
  for (int n = 2; n <= tr; ++n) {
    HilbertSeries fh = compose_series(f, h);
    Rational defect = fh.coeff(n);
    h.c[static_cast<std::size_t>(n)] = -defect / f.coeff(1);
  }
  return h;
}

HilbertSeries negate_arg(const HilbertSeries& f) {
  HilbertSeries out = f;
  for (int n = 1; n <= out.trunc(); n += 2) out.c[static_cast<std::size_t>(n)] *= -1;
  return out;
}

SignTest koszul_sign_test(const HilbertSeries& f) {
  HilbertSeries g = negate_arg(f);
  for (Rational& c : g.c) c = -c;  // g = -f(-t)
  SignTest st;
  st.inverse = comp_inverse(g);
  for (int n = 1; n <= st.inverse.trunc(); ++n) {
    if (st.inverse.coeff(n) < 0) {
      st.passes = false;
      st.first_negative = n;
      break;
    }
  }
  return st;
}

std::vector<long> series_dims(const HilbertSeries& f) {
  std::vector<long> dims;
  for (int n = 1; n <= f.trunc(); ++n) {
    Rational v = f.coeff(n);
    if (f.kind == SeriesKind::EGF) v *= factorial(n);
    v.canonicalize();
    if (v.get_den() != 1 || v < 0)
      throw std::invalid_argument("series coefficient is not a nonnegative integer dimension");
    dims.push_back(v.get_num().get_si());
  }
  return dims;
}

std::string render_series(const HilbertSeries& f) {
  std::string out;
  bool first = true;
  for (int n = 1; n <= f.trunc(); ++n) {
    Rational v = f.coeff(n);
    if (v == 0) continue;
    Rational a = v;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1 || n == 0) out += render_rational(a) + "*";
    out += "t";
    if (n != 1) out += "^" + std::to_string(n);
    first = false;
  }
  if (first) out = "0";
  return out;
}

}  // namespace opd
