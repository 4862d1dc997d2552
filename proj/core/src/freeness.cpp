#include "opd/freeness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "opd/embedding.hpp"
#include "opd/linalg.hpp"

namespace opd {

namespace {

// Mask over q's generators marking the image of p, matched by name.
std::vector<char> sub_mask(const Signature& p, const Signature& q) {
  std::vector<char> in(static_cast<std::size_t>(q.size()), 0);
  for (const auto& g : p.gens) {
    const int j = q.find(g.name);
    if (j < 0) throw std::invalid_argument("generator " + g.name + " not present in the ambient presentation");
    const Generator& h = q.at(j);
    if (h.arity != g.arity || h.symmetry != g.symmetry)
      throw std::invalid_argument("generator " + g.name + " disagrees with the ambient declaration");
    in[static_cast<std::size_t>(j)] = 1;
  }
  return in;
}

bool tree_all_in(const Tree& t, const std::vector<char>& in) {
  if (t.gen < 0) return true;
  if (!in[static_cast<std::size_t>(t.gen)]) return false;
  for (const auto& k : t.kids)
    if (!tree_all_in(k, in)) return false;
  return true;
}

bool elem_all_in(const Element& e, const std::vector<char>& in) {
  for (const auto& [t, c] : e.terms) {
    (void)c;
    if (!tree_all_in(t, in)) return false;
  }
  return true;
}

// Every vertex with a leaf input must be decorated outside the mask.
bool leaf_parents_outside(const Tree& t, const std::vector<char>& in) {
  if (t.gen < 0) return true;
  bool leaf_kid = false;
  for (const auto& k : t.kids) leaf_kid = leaf_kid || k.gen < 0;
  if (leaf_kid && in[static_cast<std::size_t>(t.gen)]) return false;
  for (const auto& k : t.kids)
    if (!leaf_parents_outside(k, in)) return false;
  return true;
}

// Some vertex whose full subtree is decorated inside the mask.
bool has_pure_subtree(const Tree& t, const std::vector<char>& in) {
  if (t.gen < 0) return false;
  if (tree_all_in(t, in)) return true;
  for (const auto& k : t.kids)
    if (has_pure_subtree(k, in)) return true;
  return false;
}

Tree remap_tree(const Tree& t, const std::vector<int>& to) {
  if (t.gen < 0) return t;
  Tree out;
  out.gen = to[static_cast<std::size_t>(t.gen)];
  for (const auto& k : t.kids) out.kids.push_back(remap_tree(k, to));
  return out;
}

Element remap_elem(const Element& e, const std::vector<int>& to) {
  Element out;
  for (const auto& [t, c] : e.terms) add_term(out, remap_tree(t, to), c);
  return out;
}

}  // namespace

FreenessReport check_free_nonsymmetric(const GroebnerResult& r) {
  FreenessReport rep;
  for (const auto& e : r.basis) {
    Tree lt = leading_term(r.spec, e).first;
    if (!is_prime(lt)) rep.witnesses.push_back(std::move(lt));
  }
  rep.holds = rep.witnesses.empty();
  return rep;
}

std::vector<std::vector<Tree>> nonsymmetric_generators(const GroebnerResult& r, int max_arity) {
  if (max_arity > r.complete_up_to)
    throw std::invalid_argument("nonsymmetric_generators: basis not complete up to requested arity");
  if (!check_free_nonsymmetric(r).holds)
    throw std::invalid_argument("nonsymmetric_generators: a leading term is not prime");
  std::vector<std::vector<Tree>> out(static_cast<std::size_t>(max_arity) + 1);
  for (int n = 2; n <= max_arity; ++n)
    for (const auto& m : normal_monomials(r, n))
      if (is_prime(m)) out[static_cast<std::size_t>(n)].push_back(m);
  return out;
}

Presentation sub_presentation(const Presentation& q, const std::vector<std::string>& sub_gens,
                              const std::string& name) {
  std::vector<int> old_of;
  std::vector<int> new_of(static_cast<std::size_t>(q.sig.size()), -1);
  for (const auto& nm : sub_gens) {
    const int j = q.sig.find(nm);
    if (j < 0) throw std::invalid_argument("sub_presentation: unknown generator " + nm);
    if (new_of[static_cast<std::size_t>(j)] >= 0)
      throw std::invalid_argument("sub_presentation: duplicate generator " + nm);
    new_of[static_cast<std::size_t>(j)] = static_cast<int>(old_of.size());
    old_of.push_back(j);
  }

  Presentation p;
  p.name = name;
  p.sig.mode = q.sig.mode;
  for (const int j : old_of) {
    Generator g = q.sig.at(j);
    if (g.partner >= 0) {
      if (new_of[static_cast<std::size_t>(g.partner)] < 0)
        throw std::invalid_argument("sub_presentation: partner of " + g.name + " was dropped");
      g.partner = new_of[static_cast<std::size_t>(g.partner)];
    }
    p.sig.gens.push_back(std::move(g));
  }

  p.order = q.order;
  if (static_cast<int>(q.order.gen_rank.size()) == q.sig.size()) {
    // keep the relative ranks of the surviving generators
    std::vector<int> idx(old_of.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      return q.order.gen_rank[static_cast<std::size_t>(old_of[static_cast<std::size_t>(a)])] <
             q.order.gen_rank[static_cast<std::size_t>(old_of[static_cast<std::size_t>(b)])];
    });
    p.order.gen_rank.assign(old_of.size(), 0);
    for (std::size_t r = 0; r < idx.size(); ++r)
      p.order.gen_rank[static_cast<std::size_t>(idx[r])] = static_cast<int>(r);
  } else {
    p.order.gen_rank = default_ranks(p.sig);
  }
  for (auto& key : p.order.keys) {
    if (auto* c = std::get_if<KeyCorolla>(&key)) {
      std::vector<char> in_class;
      for (const int j : old_of) in_class.push_back(c->in_class[static_cast<std::size_t>(j)]);
      c->in_class = std::move(in_class);
    } else if (auto* pr = std::get_if<KeyProjected>(&key)) {
      std::vector<int> gm;
      for (const int j : old_of) gm.push_back(pr->gen_map[static_cast<std::size_t>(j)]);
      pr->gen_map = std::move(gm);
    }
  }

  std::vector<char> mask(static_cast<std::size_t>(q.sig.size()), 0);
  for (const int j : old_of) mask[static_cast<std::size_t>(j)] = 1;
  for (const auto& rel : q.relations)
    if (elem_all_in(rel, mask)) p.relations.push_back(remap_elem(rel, new_of));
  return p;
}

bool check_embedding(const Presentation& p, const Presentation& q, const GroebnerResult& rp,
                     const GroebnerResult& rq) {
  const std::vector<char> in_v = sub_mask(p.sig, q.sig);
  std::vector<int> to_q(static_cast<std::size_t>(p.sig.size()));
  for (int i = 0; i < p.sig.size(); ++i)
    to_q[static_cast<std::size_t>(i)] = q.sig.find(p.sig.at(i).name);
  std::vector<char> used(rq.basis.size(), 0);
  for (const auto& e : rp.basis) {
    const Element m = remap_elem(e, to_q);
    bool found = false;
    for (std::size_t j = 0; j < rq.basis.size(); ++j) {
      if (used[j]) continue;
      if (cmp_element_struct(m, rq.basis[j]) == 0) {
        used[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  for (std::size_t j = 0; j < rq.basis.size(); ++j) {
    if (used[j]) continue;
    const Tree lt = leading_term(rq.spec, rq.basis[j]).first;
    if (tree_all_in(lt, in_v)) return false;
  }
  return true;
}

ModuleReport check_left_module_free(const Presentation& p, const Presentation& q,
                                    const GroebnerResult& rq) {
  const std::vector<char> in_v = sub_mask(p.sig, q.sig);
  ModuleReport rep;
  for (const auto& e : rq.basis) {
    if (elem_all_in(e, in_v)) continue;
    Tree lt = leading_term(rq.spec, e).first;
    if (lt.gen >= 0 && in_v[static_cast<std::size_t>(lt.gen)]) rep.witnesses.push_back(std::move(lt));
  }
  rep.holds = rep.witnesses.empty();
  rep.k_dims.push_back(1);
  for (int n = 2; n <= rq.complete_up_to; ++n) {
    int count = 0;
    for (const auto& m : normal_monomials(rq, n))
      if (!in_v[static_cast<std::size_t>(m.gen)]) ++count;
    rep.k_dims.push_back(count);
  }
  return rep;
}

ModuleReport check_right_module_free(const Presentation& p, const Presentation& q,
                                     const GroebnerResult& rq) {
  const std::vector<char> in_v = sub_mask(p.sig, q.sig);
  ModuleReport rep;
  for (const auto& e : rq.basis) {
    if (elem_all_in(e, in_v)) continue;
    Tree lt = leading_term(rq.spec, e).first;
    if (!leaf_parents_outside(lt, in_v)) rep.witnesses.push_back(std::move(lt));
  }
  rep.holds = rep.witnesses.empty();
  rep.k_dims.push_back(1);
  for (int n = 2; n <= rq.complete_up_to; ++n) {
    int count = 0;
    for (const auto& m : normal_monomials(rq, n))
      if (!has_pure_subtree(m, in_v)) ++count;
    rep.k_dims.push_back(count);
  }
  return rep;
}

bool verify_module_decomposition(const std::vector<int>& outer_dims,
                                 const std::vector<int>& inner_dims,
                                 const std::vector<int>& q_dims, SeriesKind kind) {
  const std::size_t n = std::min({outer_dims.size(), inner_dims.size(), q_dims.size()});
  const std::vector<int> outer(outer_dims.begin(), outer_dims.begin() + static_cast<long>(n));
  const std::vector<int> inner(inner_dims.begin(), inner_dims.begin() + static_cast<long>(n));
  const HilbertSeries composed = compose_series(from_dims(outer, kind), from_dims(inner, kind));
  const HilbertSeries target = from_dims(std::vector<int>(q_dims.begin(), q_dims.begin() + static_cast<long>(n)), kind);
  for (std::size_t d = 1; d <= n; ++d)
    if (composed.coeff(static_cast<int>(d)) != target.coeff(static_cast<int>(d))) return false;
  return true;
}

namespace {

Tree decorate(const Tree& shape, const std::vector<int>& deco, int& pos) {
  if (shape.gen < 0) return shape;
  Tree t;
  t.gen = deco[static_cast<std::size_t>(pos++)];
  for (const auto& k : shape.kids) t.kids.push_back(decorate(k, deco, pos));
  return t;
}

}  // namespace

SmallReport check_small(const Presentation& p, const GroebnerResult& r, int max_arity) {
  if (max_arity > r.complete_up_to)
    throw std::invalid_argument("check_small: basis not complete up to requested arity");
  const RewriteSystem rs = r.rewrite_system();
  Signature shapes_sig;
  shapes_sig.mode = Mode::Nonsymmetric;
  shapes_sig.gens.push_back(Generator{"x", 2, Symmetry::None, 0, -1});
  const int s = p.sig.size();

  SmallReport rep;
  rep.holds = true;
  for (int n = 3; n <= max_arity; ++n) {
    const std::vector<Tree> normal = normal_monomials(r, n);
    if (normal.empty()) continue;
    std::map<Tree, int> col;
    for (std::size_t i = 0; i < normal.size(); ++i) col[normal[i]] = static_cast<int>(i);
    for (const Tree& shape : enumerate_monomials(shapes_sig, n)) {
      QMatrix rows;
      std::vector<int> deco(static_cast<std::size_t>(n) - 1, 0);
      for (;;) {
        int pos = 0;
        const Tree dec = decorate(shape, deco, pos);
        auto push_row = [&](const Tree& t) {
          const Element nf = normal_form(rs, el_mono(t));
          QRow row(normal.size(), Rational(0));
          for (const auto& [m, c] : nf.terms) row[static_cast<std::size_t>(col.at(m))] = c;
          rows.push_back(std::move(row));
        };
        if (p.sig.mode == Mode::Shuffle) {
          std::vector<int> sigma(static_cast<std::size_t>(n));
          std::iota(sigma.begin(), sigma.end(), 1);
          do {
            // the sign only scales a row, which never changes the span
            push_row(apply_permutation(p.sig, dec, sigma).second);
          } while (std::next_permutation(sigma.begin(), sigma.end()));
        } else {
          push_row(dec);
        }
        std::size_t i = 0;
        while (i < deco.size()) {
          if (++deco[i] < s) break;
          deco[i++] = 0;
        }
        if (i == deco.size()) break;
      }
      if (rank(rows) < static_cast<int>(normal.size())) {
        rep.holds = false;
        rep.fail_arity = n;
        rep.fail_shape = shape;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace opd
