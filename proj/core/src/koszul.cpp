#include "opd/koszul.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace opd {

QuadraticData quadratic_data(const Presentation& p) {
  validate_presentation(p);
  for (const Generator& g : p.sig.gens)
    if (g.arity != 2)
      throw std::invalid_argument("quadratic data needs binary generators");
  for (const Element& r : p.relations)
    for (const auto& [t, c] : r.terms)
      if (tree_weight(t) != 2)
        throw std::invalid_argument("quadratic data needs weight-2 relations");
  QuadraticData q;
  q.sig = p.sig;
  q.spec = p.order;
  q.relations = interreduce(p.sig, p.order, p.relations);
  for (const Element& r : q.relations) q.lt2.push_back(leading_term(p.order, r).first);
  return q;
}

std::vector<Tree> lt2_complement(const QuadraticData& q) {
  std::set<Tree> in(q.lt2.begin(), q.lt2.end());
  std::vector<Tree> out;
  for (const Tree& m : enumerate_monomials(q.sig, 3))
    if (!in.count(m)) out.push_back(m);
  return out;
}

int pairing_sign(const Tree& m) {
  if (tree_weight(m) != 2) throw std::invalid_argument("pairing sign needs a weight-2 monomial");
  PathData pd = path_sequence(m);
  int s = perm_sign(pd.perm);
  if (m.kids[0].is_leaf()) s = -s;  // inner vertex not on the first input
  return s;
}

Presentation dual_presentation(const Presentation& p) {
  QuadraticData q = quadratic_data(p);
  Presentation d;
  d.name = p.name + "!";
  d.sig.mode = p.sig.mode;
  for (const Generator& g : p.sig.gens) {
    Generator dg = g;
    dg.name = g.name + "*";
    d.sig.gens.push_back(dg);
  }
  const std::vector<Tree>& basis = enumerate_monomials(p.sig, 3);
  // Row per relation, column per weight-2 monomial, entries weighted by the
  // pairing sign; the dual relation space is the right nullspace.
  QMatrix m;
  for (const Element& r : q.relations) {
    QRow row;
    row.reserve(basis.size());
    for (const Tree& b : basis) {
      auto it = r.terms.find(b);
      Rational c = it == r.terms.end() ? Rational(0) : it->second;
      row.push_back(c * pairing_sign(b));
    }
    m.push_back(std::move(row));
  }
  if (m.empty()) m.push_back(QRow(basis.size(), Rational(0)));
  QMatrix null = nullspace(m);
  for (const QRow& v : null) {
    Element rel;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (v[i] != 0) add_term(rel, basis[i], v[i]);  // same trees, starred generators
    d.relations.push_back(std::move(rel));
  }
  d.order = opposite_of(p.order);
  validate_presentation(d);
  return d;
}

std::vector<int> dual_dim_upper_bound(const QuadraticData& q, int N) {
  std::set<Tree> allowed(q.lt2.begin(), q.lt2.end());
  std::vector<int> bound;
  for (int n = 1; n <= N; ++n) {
    if (n == 1) {
      bound.push_back(1);
      continue;
    }
    int count = 0;
    for (const Tree& m : enumerate_monomials(q.sig, n)) {
      bool ok = true;
      for (const VertexSet& region : connected_regions(m, 2)) {
        if (!allowed.count(divisor_at(m, region))) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
    }
    bound.push_back(count);
  }
  return bound;
}

bool confirm_quadratic_by_sharp_bound(const QuadraticData& q, const std::vector<int>& dual_dims) {
  std::vector<int> bound = dual_dim_upper_bound(q, static_cast<int>(dual_dims.size()));
  for (std::size_t i = 0; i < dual_dims.size(); ++i)
    if (bound[i] != dual_dims[i]) return false;
  return true;
}

}  // namespace opd
