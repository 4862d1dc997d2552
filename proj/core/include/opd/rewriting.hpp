#pragma once

#include <cstdint>
#include <vector>

#include "opd/element.hpp"
#include "opd/embedding.hpp"
#include "opd/presentation.hpp"

namespace opd {

// Replace the divisor on `region` (which must equal some pattern of the same
// shape) by each monomial of `repl`, grafting the hanging subtrees back by
// matching leaf labels to the ranked minimal host labels.
Tree substitute_mono(const Tree& host, const VertexSet& region, const Tree& repl);
Element substitute(const Tree& host, const VertexSet& region, const Element& repl);

struct RewriteSystem {
  Signature sig;
  OrderSpec spec;
  std::vector<Element> rules;      // monic
  std::vector<Tree> lts;           // lts[i] = leading monomial of rules[i]
  std::vector<Element> tails;      // rules[i] - lts[i]

  static RewriteSystem build(const Signature& sig, const OrderSpec& spec,
                             std::vector<Element> rules);
};

// Fully reduces f. Deterministic strategy: reduce the largest reducible
// monomial, using the first rule in rule order, at its lexicographically
// smallest embedding.
Element normal_form(const RewriteSystem& rs, Element f);

// Same result is required for any strategy; this variant picks reducible
// monomial, rule and embedding pseudo-randomly from the seed (used by tests).
Element normal_form_randomized(const RewriteSystem& rs, Element f, std::uint64_t seed);

// Reduces every rule against the others until a fixpoint; drops rules that
// reduce to zero, keeps everything monic, sorts by (arity, leading monomial).
std::vector<Element> interreduce(const Signature& sig, const OrderSpec& spec,
                                 std::vector<Element> rules);

}  // namespace opd
