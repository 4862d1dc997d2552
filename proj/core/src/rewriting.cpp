#include "opd/rewriting.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace opd {

namespace {

// Rebuild of the host with the region collapsed to a single replacement
// subtree. Hanging subtrees are collected in planar order together with their
// minimal leaf labels.
struct Cut {
  std::vector<Tree> hanging;
  std::vector<int> mins;
};

// Returns the host with the region root replaced by a marker leaf 0 and fills
// the cut; `next_id` walks preorder ids of internal vertices.
Tree cut_region(const Tree& t, const std::set<int>& region, int& next_id, bool& here, Cut& cut) {
  if (t.is_leaf()) return t;
  const int my = next_id++;
  const bool in_region = region.count(my) > 0;
  if (in_region && !here) {
    // Topmost region vertex: walk the region, recording hanging subtrees.
    here = true;
    Tree marker = Tree::make_leaf(0);
    struct Rec {
      static void walk(const Tree& node, const std::set<int>& reg, int& id, Cut& c) {
        // node is an internal region vertex whose id was already consumed.
        for (const Tree& k : node.kids) {
          if (k.is_leaf()) {
            c.hanging.push_back(k);
            c.mins.push_back(k.leaf);
          } else {
            const int kid = id;
            if (reg.count(kid)) {
              ++id;
              walk(k, reg, id, c);
            } else {
              c.hanging.push_back(k);
              c.mins.push_back(min_leaf(k));
              skip(k, id);
            }
          }
        }
      }
      static void skip(const Tree& node, int& id) {
        if (node.is_leaf()) return;
        ++id;
        for (const Tree& k : node.kids) skip(k, id);
      }
    };
    Rec::walk(t, region, next_id, cut);
    return marker;
  }
  Tree r;
  r.gen = t.gen;
  r.kids.reserve(t.kids.size());
  for (const Tree& k : t.kids) r.kids.push_back(cut_region(k, region, next_id, here, cut));
  return r;
}

Tree replace_marker(const Tree& t, const Tree& sub) {
  if (t.is_leaf()) return t.leaf == 0 ? sub : t;
  Tree r;
  r.gen = t.gen;
  r.kids.reserve(t.kids.size());
  for (const Tree& k : t.kids) r.kids.push_back(replace_marker(k, sub));
  return r;
}

Tree graft_replacement(const Tree& repl, const std::vector<Tree>& by_label) {
  if (repl.is_leaf()) return by_label[static_cast<std::size_t>(repl.leaf - 1)];
  Tree r;
  r.gen = repl.gen;
  r.kids.reserve(repl.kids.size());
  for (const Tree& k : repl.kids) r.kids.push_back(graft_replacement(k, by_label));
  return r;
}

}  // namespace

Tree substitute_mono(const Tree& host, const VertexSet& region, const Tree& repl) {
  if (!valid_region(host, region))
    throw std::invalid_argument("substitute: region is not connected and rooted");
  std::set<int> reg(region.begin(), region.end());
  Cut cut;
  int id = 0;
  bool here = false;
  Tree skeleton = cut_region(host, reg, id, here, cut);
  if (static_cast<int>(cut.hanging.size()) != tree_arity(repl))
    throw std::invalid_argument("substitute: replacement arity mismatch");
  // Hanging subtree with the k-th smallest minimum receives replacement leaf k+1.
  std::vector<int> order(cut.mins.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return cut.mins[static_cast<std::size_t>(a)] < cut.mins[static_cast<std::size_t>(b)]; });
  std::vector<Tree> by_label(cut.hanging.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    by_label[rank] = cut.hanging[static_cast<std::size_t>(order[rank])];
  Tree grafted = graft_replacement(repl, by_label);
  return canonicalize(replace_marker(skeleton, grafted));
}

Element substitute(const Tree& host, const VertexSet& region, const Element& repl) {
  Element out;
  for (const auto& [t, c] : repl.terms) add_term(out, substitute_mono(host, region, t), c);
  return out;
}

RewriteSystem RewriteSystem::build(const Signature& sig, const OrderSpec& spec,
                                   std::vector<Element> rules) {
  RewriteSystem rs;
  rs.sig = sig;
  rs.spec = spec;
  for (Element& r : rules) {
    if (r.is_zero()) continue;
    Element m = make_monic(spec, std::move(r));
    auto [lt, lc] = leading_term(spec, m);
    Element tail = m;
    tail.terms.erase(lt);
    rs.rules.push_back(std::move(m));
    rs.lts.push_back(lt);
    rs.tails.push_back(std::move(tail));
  }
  return rs;
}

namespace {

struct Reduction {
  std::size_t term_index;
  std::size_t rule;
  VertexSet region;
};

// All reductions available on one monomial.
void reductions_on(const RewriteSystem& rs, const Tree& t, std::size_t term_index,
                   std::vector<Reduction>& out) {
  for (std::size_t r = 0; r < rs.rules.size(); ++r) {
    if (tree_weight(rs.lts[r]) > tree_weight(t)) continue;
    for (VertexSet& e : find_embeddings(t, rs.lts[r]))
      out.push_back({term_index, r, std::move(e)});
  }
}

Element apply_reduction(const RewriteSystem& rs, const Element& f, const Tree& t,
                        const Rational& coeff, const Reduction& red) {
  // t = lts[rule] at region, so t - substitute(region, rule) kills the term.
  Element replaced = substitute(t, red.region, rs.tails[red.rule]);
  Element out = f;
  add_term(out, t, -coeff);
  for (const auto& [m, c] : replaced.terms) add_term(out, m, -coeff * c);
  return out;
}

}  // namespace

Element normal_form(const RewriteSystem& rs, Element f) {
  for (;;) {
    bool reduced = false;
    // Largest reducible monomial first.
    std::vector<const Tree*> terms;
    terms.reserve(f.terms.size());
    for (const auto& [t, c] : f.terms) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [&](const Tree* a, const Tree* b) { return less(rs.spec, *b, *a); });
    for (const Tree* t : terms) {
      std::vector<Reduction> reds;
      reductions_on(rs, *t, 0, reds);
      if (reds.empty()) continue;
      // First rule, then lexicographically smallest region.
      const Reduction* best = &reds[0];
      for (const Reduction& r : reds)
        if (r.rule < best->rule || (r.rule == best->rule && r.region < best->region)) best = &r;
      f = apply_reduction(rs, f, *t, f.terms.at(*t), *best);
      reduced = true;
      break;
    }
    if (!reduced) return f;
  }
}

Element normal_form_randomized(const RewriteSystem& rs, Element f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<std::pair<Tree, Rational>> terms(f.terms.begin(), f.terms.end());
    std::vector<Reduction> reds;
    for (std::size_t i = 0; i < terms.size(); ++i) reductions_on(rs, terms[i].first, i, reds);
    if (reds.empty()) return f;
    const Reduction& pick = reds[rng() % reds.size()];
    const auto& [t, c] = terms[pick.term_index];
    f = apply_reduction(rs, f, t, c, pick);
  }
}

std::vector<Element> interreduce(const Signature& sig, const OrderSpec& spec,
                                 std::vector<Element> rules) {
  // Drop zeros and exact duplicates up front.
  std::vector<Element> work;
  for (Element& r : rules) {
    if (r.is_zero()) continue;
    Element m = make_monic(spec, std::move(r));
    bool dup = false;
    for (const Element& w : work) dup = dup || cmp_element_struct(w, m) == 0;
    if (!dup) work.push_back(std::move(m));
  }
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < work.size(); ++i) {
      std::vector<Element> others;
      others.reserve(work.size() - 1);
      for (std::size_t j = 0; j < work.size(); ++j)
        if (j != i) others.push_back(work[j]);
      RewriteSystem rs = RewriteSystem::build(sig, spec, others);
      Element nf = normal_form(rs, work[i]);
      if (cmp_element_struct(nf, work[i]) != 0) {
        changed = true;
        if (nf.is_zero()) {
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          work[i] = make_monic(spec, std::move(nf));
        }
      }
    }
    if (!changed) break;
  }
  std::sort(work.begin(), work.end(), [&](const Element& a, const Element& b) {
    int aa = a.arity();
    int ab = b.arity();
    if (aa != ab) return aa < ab;
    Tree la = leading_term(spec, a).first;
    Tree lb = leading_term(spec, b).first;
    int c = compare(spec, la, lb);
    if (c != 0) return c < 0;
    return cmp_element_struct(a, b) < 0;
  });
  return work;
}

}  // namespace opd
