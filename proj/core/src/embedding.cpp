#include "opd/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace opd {

namespace {

struct Indexed {
  const Tree* node;
  int id;                    // preorder id, internal vertices only
  int parent;                // -1 for root
  std::vector<int> kid_ids;  // ids of internal children, -1 for leaf children
  int min_label;             // minimal leaf label of the subtree
};

void index_rec(const Tree& t, int parent, std::vector<Indexed>& out) {
  const int my = static_cast<int>(out.size());
  out.push_back({&t, my, parent, {}, 0});
  std::vector<int> kid_ids;
  for (const Tree& k : t.kids) {
    if (k.is_leaf()) {
      kid_ids.push_back(-1);
    } else {
      kid_ids.push_back(static_cast<int>(out.size()));
      index_rec(k, my, out);
    }
  }
  out[static_cast<std::size_t>(my)].kid_ids = std::move(kid_ids);
  out[static_cast<std::size_t>(my)].min_label = min_leaf(t);
}

std::vector<Indexed> index_tree(const Tree& host) {
  if (host.is_leaf()) return {};
  std::vector<Indexed> out;
  index_rec(host, -1, out);
  return out;
}

}  // namespace

bool valid_region(const Tree& host, const VertexSet& region) {
  if (region.empty()) return false;
  std::vector<Indexed> ix = index_tree(host);
  std::set<int> in(region.begin(), region.end());
  if (in.size() != region.size()) return false;
  int roots = 0;
  for (int v : region) {
    if (v < 0 || v >= static_cast<int>(ix.size())) return false;
    int p = ix[static_cast<std::size_t>(v)].parent;
    if (p < 0 || !in.count(p)) ++roots;
  }
  return roots == 1;
}

namespace {

// Builds the divisor rooted at `vid` restricted to `in`; hanging subtrees are
// recorded by their minimal host leaf label, relabeled afterwards.
Tree build_divisor(const std::vector<Indexed>& ix, const std::set<int>& in, int vid,
                   std::vector<int>& hanging_mins) {
  const Indexed& v = ix[static_cast<std::size_t>(vid)];
  Tree t;
  t.gen = v.node->gen;
  for (std::size_t i = 0; i < v.node->kids.size(); ++i) {
    int kid = v.kid_ids[i];
    if (kid >= 0 && in.count(kid)) {
      t.kids.push_back(build_divisor(ix, in, kid, hanging_mins));
    } else {
      int m = kid >= 0 ? ix[static_cast<std::size_t>(kid)].min_label : v.node->kids[i].leaf;
      hanging_mins.push_back(m);
      t.kids.push_back(Tree::make_leaf(m));  // placeholder, relabeled below
    }
  }
  return t;
}

Tree standardize_labels(const Tree& t, const std::map<int, int>& rank) {
  if (t.is_leaf()) return Tree::make_leaf(rank.at(t.leaf));
  Tree r;
  r.gen = t.gen;
  for (const Tree& k : t.kids) r.kids.push_back(standardize_labels(k, rank));
  return r;
}

}  // namespace

Tree divisor_at(const Tree& host, const VertexSet& region) {
  if (!valid_region(host, region))
    throw std::invalid_argument("divisor_at: region is not connected and rooted");
  std::vector<Indexed> ix = index_tree(host);
  std::set<int> in(region.begin(), region.end());
  int top = -1;
  for (int v : region) {
    int p = ix[static_cast<std::size_t>(v)].parent;
    if (p < 0 || !in.count(p)) top = v;
  }
  std::vector<int> hanging;
  Tree raw = build_divisor(ix, in, top, hanging);
  std::sort(hanging.begin(), hanging.end());
  std::map<int, int> rank;
  for (std::size_t i = 0; i < hanging.size(); ++i) rank[hanging[i]] = static_cast<int>(i) + 1;
  // Children stay sorted: ranks are monotone in the minimal host labels.
  return standardize_labels(raw, rank);
}

std::vector<VertexSet> find_embeddings(const Tree& host, const Tree& pattern) {
  std::vector<VertexSet> out;
  if (host.is_leaf() || pattern.is_leaf()) return out;
  std::vector<Indexed> ix = index_tree(host);

  // Positional descent: child order of a divisor agrees with the host's child
  // order, so the overlay of the pattern shape on a host root is unique.
  // Collect the candidate region, then confirm by extracting the divisor
  // (the leaf standardization can still reject the shape match).
  for (int root = 0; root < static_cast<int>(ix.size()); ++root) {
    VertexSet region;
    bool ok = true;
    struct Frame {
      const Tree* pat;
      int host_id;
    };
    std::vector<Frame> stack{{&pattern, root}};
    while (!stack.empty() && ok) {
      Frame f = stack.back();
      stack.pop_back();
      const Indexed& hv = ix[static_cast<std::size_t>(f.host_id)];
      if (f.pat->gen != hv.node->gen || f.pat->kids.size() != hv.node->kids.size()) {
        ok = false;
        break;
      }
      region.push_back(f.host_id);
      for (std::size_t i = 0; i < f.pat->kids.size(); ++i) {
        const Tree& pk = f.pat->kids[i];
        if (pk.is_leaf()) continue;  // hanging subtree absorbs anything
        if (hv.kid_ids[i] < 0) {
          ok = false;
          break;
        }
        stack.push_back({&pk, hv.kid_ids[i]});
      }
    }
    if (!ok) continue;
    std::sort(region.begin(), region.end());
    if (divisor_at(host, region) == pattern) out.push_back(std::move(region));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool divides(const Tree& host, const Tree& pattern) {
  return !find_embeddings(host, pattern).empty();
}

std::vector<VertexSet> connected_regions(const Tree& host, int weight) {
  std::vector<VertexSet> out;
  if (host.is_leaf()) return out;
  std::vector<Indexed> ix = index_tree(host);
  const int n = static_cast<int>(ix.size());
  // Grow regions rooted at each vertex: frontier = internal children of the
  // region not yet decided. Standard connected-subtree enumeration.
  struct State {
    VertexSet region;
    std::vector<int> frontier;
  };
  for (int root = 0; root < n; ++root) {
    std::vector<State> stack;
    State init;
    init.region = {root};
    for (int k : ix[static_cast<std::size_t>(root)].kid_ids)
      if (k >= 0) init.frontier.push_back(k);
    stack.push_back(std::move(init));
    while (!stack.empty()) {
      State st = std::move(stack.back());
      stack.pop_back();
      if (st.frontier.empty()) {
        if (weight < 0 || static_cast<int>(st.region.size()) == weight) {
          VertexSet r = st.region;
          std::sort(r.begin(), r.end());
          out.push_back(std::move(r));
        }
        continue;
      }
      int v = st.frontier.back();
      st.frontier.pop_back();
      // Exclude v.
      stack.push_back(st);
      // Include v.
      if (weight < 0 || static_cast<int>(st.region.size()) < weight) {
        st.region.push_back(v);
        for (int k : ix[static_cast<std::size_t>(v)].kid_ids)
          if (k >= 0) st.frontier.push_back(k);
        stack.push_back(std::move(st));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(const Tree& t) {
  if (t.is_leaf()) return true;
  struct Walk {
    static bool interval_free(const Tree& node, bool is_root) {
      if (node.is_leaf()) return true;
      if (!is_root) {
        std::vector<int> ls;
        gather(node, ls);
        auto [lo, hi] = std::minmax_element(ls.begin(), ls.end());
        if (*hi - *lo + 1 == static_cast<int>(ls.size())) return false;
      }
      for (const Tree& k : node.kids)
        if (!interval_free(k, false)) return false;
      return true;
    }
    static void gather(const Tree& node, std::vector<int>& out) {
      if (node.is_leaf()) {
        out.push_back(node.leaf);
        return;
      }
      for (const Tree& k : node.kids) gather(k, out);
    }
  };
  return Walk::interval_free(t, true);
}

}  // namespace opd
