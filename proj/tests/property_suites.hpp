#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "opd/element.hpp"
#include "opd/embedding.hpp"
#include "opd/ordering.hpp"
#include "opd/rewriting.hpp"
#include "opd/tree.hpp"

// Randomized and exhaustive suites shared by the property tests and the
// acceptance checks. All randomness is seeded, so runs are reproducible.

namespace opd::suites {

struct SuiteResult {
  int checked = 0;
  int failures = 0;
};

// An order is usable for rewriting when u < v forces c[u] < c[v] for every
// composition context c: pick a random host, a random connected region, and a
// random pair of same-arity monomials, then substitute both into the region.
inline SuiteResult check_admissibility(const Signature& sig, const OrderSpec& spec, int trials,
                                       std::uint64_t seed) {
  SuiteResult res;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  while (res.checked < trials) {
    int n = 4 + static_cast<int>(pick(2));
    const auto& hosts = enumerate_monomials(sig, n);
    const Tree& host = hosts[pick(hosts.size())];
    auto regions = connected_regions(host);
    const auto& region = regions[pick(regions.size())];
    Tree div = divisor_at(host, region);
    const auto& cand = enumerate_monomials(sig, tree_arity(div));
    if (cand.size() < 2) continue;
    std::size_t iu = pick(cand.size());
    std::size_t iv = pick(cand.size());
    if (iu == iv) continue;
    const Tree& u = cand[iu];
    const Tree& v = cand[iv];
    int direct = compare(spec, u, v);
    int substituted =
        compare(spec, substitute_mono(host, region, u), substitute_mono(host, region, v));
    ++res.checked;
    if (direct == 0 || direct != substituted) ++res.failures;
  }
  return res;
}

// Normal forms on a certified system: reducing a normal form is the identity,
// and the result does not depend on which reducible divisor is rewritten
// first.
inline SuiteResult check_normal_forms(const RewriteSystem& rs, int min_arity, int max_arity,
                                      int trials, std::uint64_t seed) {
  SuiteResult res;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  for (int t = 0; t < trials; ++t) {
    int n = min_arity + static_cast<int>(pick(static_cast<std::size_t>(max_arity - min_arity + 1)));
    const auto& basis = enumerate_monomials(rs.sig, n);
    Element f;
    for (int k = 0; k < 3; ++k) {
      int c = num(rng);
      if (c == 0) c = 1;
      f = combine(f, el_mono(basis[pick(basis.size())]), Rational(1), Rational(c) / den(rng));
    }
    Element nf = normal_form(rs, f);
    ++res.checked;
    if (cmp_element_struct(normal_form(rs, nf), nf) != 0) {
      ++res.failures;
      continue;
    }
    bool bad = false;
    for (std::uint64_t s : {1u, 7u, 99u})
      if (cmp_element_struct(normal_form_randomized(rs, f, s), nf) != 0) bad = true;
    if (bad) ++res.failures;
  }
  return res;
}

// find_embeddings against the definition: scan every vertex subset of every
// host, keep the valid connected regions, and group them by their divisor.
inline SuiteResult check_embeddings_oracle(const Signature& sig, int max_arity) {
  SuiteResult res;
  for (int n = 2; n <= max_arity; ++n) {
    for (const Tree& host : enumerate_monomials(sig, n)) {
      int verts = n - 1;  // binary internal vertices, preorder ids
      std::map<Tree, std::vector<VertexSet>> oracle;
      for (unsigned mask = 1; mask < (1u << verts); ++mask) {
        VertexSet vs;
        for (int v = 0; v < verts; ++v)
          if (mask & (1u << v)) vs.push_back(v);
        if (!valid_region(host, vs)) continue;
        oracle[divisor_at(host, vs)].push_back(vs);
      }
      for (auto& [pat, regions] : oracle) {
        std::sort(regions.begin(), regions.end());
        ++res.checked;
        if (find_embeddings(host, pat) != regions) ++res.failures;
      }
    }
  }
  return res;
}

}  // namespace opd::suites
