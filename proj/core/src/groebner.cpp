#include "opd/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace opd {

std::vector<Overlap> small_common_multiples(const Signature& sig, const Tree& t1, const Tree& t2,
                                            int max_arity) {
  std::vector<Overlap> out;
  const int w1 = tree_weight(t1);
  const int w2 = tree_weight(t2);
  const bool same = cmp_struct(t1, t2) == 0;
  // Joint cover of all host vertices with a shared vertex caps the host
  // weight at w1 + w2 - 1; with binary-and-up generators the arity then stays
  // below the sum of the two arities.
  int lo = std::max(tree_arity(t1), tree_arity(t2));
  int hi = tree_arity(t1) + tree_arity(t2) - 1;
  if (max_arity >= 0) hi = std::min(hi, max_arity);
  for (int n = lo; n <= hi; ++n) {
    for (const Tree& host : enumerate_monomials(sig, n)) {
      if (tree_weight(host) > w1 + w2 - 1) continue;
      std::vector<VertexSet> e1 = find_embeddings(host, t1);
      if (e1.empty()) continue;
      std::vector<VertexSet> e2 = find_embeddings(host, t2);
      for (const VertexSet& a : e1) {
        for (const VertexSet& b : e2) {
          if (same && !(a < b)) continue;  // unordered pair for equal patterns
          // Need full cover and a genuine overlap.
          std::vector<int> inter;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(inter));
          if (inter.empty()) continue;
          std::vector<int> uni;
          std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
          if (static_cast<int>(uni.size()) != tree_weight(host)) continue;
          out.push_back({host, a, b});
        }
      }
    }
  }
  return out;
}

Element s_polynomial(const Element& g1, const Element& g2, const Overlap& o) {
  // Both rules monic with leading monomial embedded at the recorded regions;
  // the two substituted copies share the leading host monomial, which cancels.
  Element s1 = substitute(o.host, o.first, g1);
  Element s2 = substitute(o.host, o.second, g2);
  return combine(s1, s2, Rational(1), Rational(-1));
}

std::vector<Tree> GroebnerResult::leading_terms() const {
  std::vector<Tree> out;
  out.reserve(basis.size());
  for (const Element& e : basis) out.push_back(leading_term(spec, e).first);
  return out;
}

RewriteSystem GroebnerResult::rewrite_system() const {
  return RewriteSystem::build(sig, spec, basis);
}

GroebnerResult complete(const Presentation& p, int N, int threads) {
  validate_presentation(p);
  GroebnerResult g;
  g.sig = p.sig;
  g.spec = p.order;
  g.complete_up_to = N;
  g.basis = interreduce(p.sig, p.order, p.relations);
  if (threads < 1) threads = 1;

  for (;;) {
    RewriteSystem rs = RewriteSystem::build(g.sig, g.spec, g.basis);
    std::vector<Tree> lts = g.leading_terms();
    // Enumerate S-polynomial jobs over the frozen basis.
    struct Job {
      std::size_t i, j;
      Overlap o;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < g.basis.size(); ++i) {
      for (std::size_t j = i; j < g.basis.size(); ++j) {
        for (Overlap& o : small_common_multiples(g.sig, lts[i], lts[j], N))
          jobs.push_back({i, j, std::move(o)});
      }
    }
    std::vector<Element> residues(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        std::size_t k = next.fetch_add(1);
        if (k >= jobs.size()) return;
        const Job& jb = jobs[k];
        Element s = s_polynomial(g.basis[jb.i], g.basis[jb.j], jb.o);
        residues[k] = normal_form(rs, std::move(s));
      }
    };
    if (threads == 1 || jobs.size() < 2) {
      worker();
    } else {
      std::vector<std::thread> pool;
      const int use = std::min<std::size_t>(static_cast<std::size_t>(threads), jobs.size());
      for (int t = 0; t < use; ++t) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
    // Merge survivors deterministically: job order, monic, dedupe.
    std::vector<Element> fresh;
    for (Element& r : residues) {
      if (r.is_zero()) continue;
      Element m = make_monic(g.spec, std::move(r));
      bool dup = false;
      for (const Element& f : fresh) dup = dup || cmp_element_struct(f, m) == 0;
      if (!dup) fresh.push_back(std::move(m));
    }
    if (fresh.empty()) break;
    for (Element& f : fresh) g.basis.push_back(std::move(f));
    g.basis = interreduce(g.sig, g.spec, std::move(g.basis));
  }

  g.is_quadratic = true;
  for (const Element& e : g.basis)
    for (const auto& [t, c] : e.terms)
      if (tree_weight(t) != 2) g.is_quadratic = false;
  return g;
}

std::vector<Tree> normal_monomials(const GroebnerResult& g, int arity) {
  std::vector<Tree> out;
  std::vector<Tree> lts = g.leading_terms();
  for (const Tree& m : enumerate_monomials(g.sig, arity)) {
    bool reducible = false;
    for (const Tree& lt : lts) {
      if (tree_weight(lt) > tree_weight(m)) continue;
      if (divides(m, lt)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(m);
  }
  return out;
}

std::vector<int> hilbert_dims(const GroebnerResult& g, int N) {
  std::vector<int> dims;
  for (int n = 1; n <= N; ++n)
    dims.push_back(static_cast<int>(normal_monomials(g, n).size()));
  return dims;
}

bool certify_by_dimensions(const GroebnerResult& g, const std::vector<int>& known_dims) {
  for (std::size_t i = 0; i < known_dims.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (n > g.complete_up_to) break;
    if (static_cast<int>(normal_monomials(g, n).size()) != known_dims[i]) return false;
  }
  return true;
}

}  // namespace opd
