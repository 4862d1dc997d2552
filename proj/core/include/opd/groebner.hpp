#pragma once

#include <vector>

#include "opd/rewriting.hpp"

namespace opd {

// A common multiple of two leading monomials inside one host, with both
// regions covering every host vertex and overlapping in at least one.
struct Overlap {
  Tree host;
  VertexSet first;
  VertexSet second;
};

// All small common multiples of t1 and t2. Small: every vertex of the host is
// covered, so the host weight is at most w(t1) + w(t2) - 1; hosts are
// enumerated per arity up to that bound (and optionally max_arity).
std::vector<Overlap> small_common_multiples(const Signature& sig, const Tree& t1, const Tree& t2,
                                            int max_arity = -1);

Element s_polynomial(const Element& g1, const Element& g2, const Overlap& o);

struct GroebnerResult {
  Signature sig;
  OrderSpec spec;
  std::vector<Element> basis;  // interreduced, monic
  int complete_up_to = 0;      // truncation arity
  bool is_quadratic = false;   // every basis monomial has two vertices

  std::vector<Tree> leading_terms() const;
  RewriteSystem rewrite_system() const;
};

// Truncated Buchberger completion up to arity N. Deterministic for any thread
// count: each round reduces all S-polynomials against the frozen basis and
// merges the survivors in enumeration order.
GroebnerResult complete(const Presentation& p, int N, int threads = 1);

std::vector<Tree> normal_monomials(const GroebnerResult& g, int arity);

// dims[0] = dimension in arity 1 (always 1), up to arity N.
std::vector<int> hilbert_dims(const GroebnerResult& g, int N);

// True when the normal monomial counts match the given dimensions (same
// indexing as hilbert_dims); a match certifies the truncated basis is a
// Groebner basis through that arity.
bool certify_by_dimensions(const GroebnerResult& g, const std::vector<int>& known_dims);

}  // namespace opd
