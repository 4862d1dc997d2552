#include "opd/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace opd {

int cmp_struct(const Tree& a, const Tree& b) {
  if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
  if (a.is_leaf()) {
    if (a.leaf != b.leaf) return a.leaf < b.leaf ? -1 : 1;
    return 0;
  }
  if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    int c = cmp_struct(a.kids[i], b.kids[i]);
    if (c != 0) return c;
  }
  return 0;
}

int tree_arity(const Tree& t) {
  if (t.is_leaf()) return 1;
  int n = 0;
  for (const Tree& k : t.kids) n += tree_arity(k);
  return n;
}

int tree_weight(const Tree& t) {
  if (t.is_leaf()) return 0;
  int w = 1;
  for (const Tree& k : t.kids) w += tree_weight(k);
  return w;
}

int min_leaf(const Tree& t) {
  if (t.is_leaf()) return t.leaf;
  int m = min_leaf(t.kids[0]);
  for (std::size_t i = 1; i < t.kids.size(); ++i) m = std::min(m, min_leaf(t.kids[i]));
  return m;
}

Tree canonicalize(Tree t) {
  if (t.is_leaf()) return t;
  for (Tree& k : t.kids) k = canonicalize(std::move(k));
  std::stable_sort(t.kids.begin(), t.kids.end(),
                   [](const Tree& a, const Tree& b) { return min_leaf(a) < min_leaf(b); });
  return t;
}

namespace {

void collect_leaves(const Tree& t, std::vector<int>& out) {
  if (t.is_leaf()) {
    out.push_back(t.leaf);
    return;
  }
  for (const Tree& k : t.kids) collect_leaves(k, out);
}

void validate_rec(const Signature& sig, const Tree& t) {
  if (t.is_leaf()) {
    if (t.leaf < 1) throw std::invalid_argument("leaf label must be >= 1");
    return;
  }
  const Generator& g = sig.at(t.gen);
  if (static_cast<int>(t.kids.size()) != g.arity)
    throw std::invalid_argument("vertex arity mismatch for generator " + g.name);
  int prev = -1;
  for (const Tree& k : t.kids) {
    validate_rec(sig, k);
    int m = min_leaf(k);
    if (m <= prev) throw std::invalid_argument("children not sorted by minimal leaf");
    prev = m;
  }
  if (sig.mode == Mode::Nonsymmetric) {
    std::vector<int> ls;
    collect_leaves(t, ls);
    auto [lo, hi] = std::minmax_element(ls.begin(), ls.end());
    if (*hi - *lo + 1 != static_cast<int>(ls.size()))
      throw std::invalid_argument("nonsymmetric subtree leaves must form an interval");
  }
}

}  // namespace

void validate_tree(const Signature& sig, const Tree& t) {
  validate_rec(sig, t);
  std::vector<int> ls;
  collect_leaves(t, ls);
  std::vector<int> sorted = ls;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("leaf labels must be a permutation of 1..n");
}

namespace {

void paths_rec(const Tree& t, std::vector<int>& word, PathData& out) {
  if (t.is_leaf()) {
    out.words[static_cast<std::size_t>(t.leaf - 1)] = word;
    out.perm.push_back(t.leaf);
    return;
  }
  word.push_back(t.gen);
  for (const Tree& k : t.kids) paths_rec(k, word, out);
  word.pop_back();
}

}  // namespace

PathData path_sequence(const Tree& t) {
  PathData out;
  out.words.resize(static_cast<std::size_t>(tree_arity(t)));
  std::vector<int> word;
  paths_rec(t, word, out);
  return out;
}

int perm_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

Tree relabel_leaves(const Tree& t, const std::vector<int>& sigma) {
  if (t.is_leaf()) {
    if (t.leaf < 1 || t.leaf > static_cast<int>(sigma.size()))
      throw std::invalid_argument("relabel: leaf label out of range");
    return Tree::make_leaf(sigma[static_cast<std::size_t>(t.leaf - 1)]);
  }
  Tree r;
  r.gen = t.gen;
  r.kids.reserve(t.kids.size());
  for (const Tree& k : t.kids) r.kids.push_back(relabel_leaves(k, sigma));
  return r;
}

namespace {

Tree graft(const Tree& outer, const std::vector<Tree>& grafts) {
  if (outer.is_leaf()) return grafts[static_cast<std::size_t>(outer.leaf - 1)];
  Tree r;
  r.gen = outer.gen;
  r.kids.reserve(outer.kids.size());
  for (const Tree& k : outer.kids) r.kids.push_back(graft(k, grafts));
  return r;
}

}  // namespace

Tree compose(const Signature& sig, const Tree& outer, const std::vector<Tree>& inners,
             const std::vector<std::vector<int>>& blocks) {
  const int k = tree_arity(outer);
  if (static_cast<int>(inners.size()) != k || static_cast<int>(blocks.size()) != k)
    throw std::invalid_argument("compose: need one inner tree and one block per outer leaf");
  int n = 0;
  for (int i = 0; i < k; ++i) n += tree_arity(inners[static_cast<std::size_t>(i)]);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int prev_min = 0;
  int prev_end = 0;
  for (int i = 0; i < k; ++i) {
    const auto& blk = blocks[static_cast<std::size_t>(i)];
    if (static_cast<int>(blk.size()) != tree_arity(inners[static_cast<std::size_t>(i)]))
      throw std::invalid_argument("compose: block size must match inner arity");
    for (std::size_t j = 0; j < blk.size(); ++j) {
      int v = blk[j];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("compose: blocks must partition 1..n");
      if (j > 0 && blk[j] <= blk[j - 1])
        throw std::invalid_argument("compose: blocks must be sorted ascending");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    if (blk.front() <= prev_min)
      throw std::invalid_argument("compose: block minima must increase");
    prev_min = blk.front();
    if (sig.mode == Mode::Nonsymmetric) {
      if (blk.front() != prev_end + 1 || blk.back() - blk.front() + 1 != static_cast<int>(blk.size()))
        throw std::invalid_argument("compose: nonsymmetric blocks must be consecutive intervals");
      prev_end = blk.back();
    }
  }
  std::vector<Tree> grafts;
  grafts.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    grafts.push_back(relabel_leaves(inners[static_cast<std::size_t>(i)], blocks[static_cast<std::size_t>(i)]));
  return canonicalize(graft(outer, grafts));
}

namespace {

std::mutex enum_mutex;
std::map<std::string, std::map<int, std::vector<Tree>>> enum_cache;

std::string enum_key(const Signature& sig) {
  std::string key = sig.mode == Mode::Shuffle ? "s" : "n";
  for (const Generator& g : sig.gens) key += ":" + std::to_string(g.arity);
  return key;
}

// Subsets of labels (sorted) containing labels[0], partitioned into parts
// blocks with increasing minima; shuffle-mode recursion.
void shuffle_blocks(const std::vector<int>& labels, int parts,
                    std::vector<std::vector<int>>& cur,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (parts == 1) {
    cur.push_back(labels);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  // First block takes labels[0] plus any subset of the rest, leaving enough
  // labels for the remaining parts (each nonempty).
  const int rest = static_cast<int>(labels.size()) - 1;
  for (int mask = 0; mask < (1 << rest); ++mask) {
    if (static_cast<int>(labels.size()) - (1 + __builtin_popcount(static_cast<unsigned>(mask))) <
        parts - 1)
      continue;
    std::vector<int> first{labels[0]};
    std::vector<int> remain;
    for (int i = 0; i < rest; ++i) {
      if (mask & (1 << i))
        first.push_back(labels[static_cast<std::size_t>(i) + 1]);
      else
        remain.push_back(labels[static_cast<std::size_t>(i) + 1]);
    }
    cur.push_back(std::move(first));
    shuffle_blocks(remain, parts - 1, cur, out);
    cur.pop_back();
  }
}

void interval_blocks(const std::vector<int>& labels, int parts,
                     std::vector<std::vector<int>>& cur,
                     std::vector<std::vector<std::vector<int>>>& out) {
  if (parts == 1) {
    cur.push_back(labels);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int take = 1; take <= static_cast<int>(labels.size()) - (parts - 1); ++take) {
    cur.emplace_back(labels.begin(), labels.begin() + take);
    std::vector<int> remain(labels.begin() + take, labels.end());
    interval_blocks(remain, parts - 1, cur, out);
    cur.pop_back();
  }
}

// All canonical trees on the given sorted label set.
std::vector<Tree> enum_on_labels(const Signature& sig, const std::vector<int>& labels) {
  std::vector<Tree> out;
  if (labels.size() == 1) {
    out.push_back(Tree::make_leaf(labels[0]));
    return out;
  }
  for (int g = 0; g < sig.size(); ++g) {
    const int ar = sig.gens[static_cast<std::size_t>(g)].arity;
    if (ar > static_cast<int>(labels.size())) continue;
    std::vector<std::vector<std::vector<int>>> partitions;
    std::vector<std::vector<int>> cur;
    if (sig.mode == Mode::Shuffle)
      shuffle_blocks(labels, ar, cur, partitions);
    else
      interval_blocks(labels, ar, cur, partitions);
    for (const auto& blocks : partitions) {
      std::vector<std::vector<Tree>> child_sets;
      child_sets.reserve(blocks.size());
      for (const auto& blk : blocks) child_sets.push_back(enum_on_labels(sig, blk));
      std::vector<std::size_t> idx(blocks.size(), 0);
      for (;;) {
        Tree t;
        t.gen = g;
        for (std::size_t i = 0; i < blocks.size(); ++i)
          t.kids.push_back(child_sets[i][idx[i]]);
        out.push_back(std::move(t));
        std::size_t pos = blocks.size();
        bool done = false;
        for (;;) {
          if (pos == 0) {
            done = true;
            break;
          }
          --pos;
          if (++idx[pos] < child_sets[pos].size()) break;
          idx[pos] = 0;
        }
        if (done) break;
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<Tree>& enumerate_monomials(const Signature& sig, int arity) {
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  for (const Generator& g : sig.gens)
    if (g.arity < 2)
      throw std::invalid_argument("enumeration requires every generator arity >= 2");
  std::lock_guard<std::mutex> lock(enum_mutex);
  auto& per_sig = enum_cache[enum_key(sig)];
  auto it = per_sig.find(arity);
  if (it != per_sig.end()) return it->second;
  std::vector<int> labels(static_cast<std::size_t>(arity));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<Tree> all = enum_on_labels(sig, labels);
  std::sort(all.begin(), all.end());
  return per_sig.emplace(arity, std::move(all)).first->second;
}

std::pair<int, Tree> symmetric_canonicalize(const Signature& sig, Tree t) {
  if (t.is_leaf()) return {1, std::move(t)};
  int sign = 1;
  for (Tree& k : t.kids) {
    auto [s, kk] = symmetric_canonicalize(sig, std::move(k));
    sign *= s;
    k = std::move(kk);
  }
  if (t.kids.size() == 2 && min_leaf(t.kids[0]) > min_leaf(t.kids[1])) {
    const Generator& g = sig.at(t.gen);
    std::swap(t.kids[0], t.kids[1]);
    switch (g.symmetry) {
      case Symmetry::Symmetric: break;
      case Symmetry::Antisymmetric: sign = -sign; break;
      case Symmetry::None:
        if (g.partner < 0 || g.partner == t.gen)
          throw std::invalid_argument("generator " + g.name +
                                      " carries no symmetry data for an argument swap");
        t.gen = g.partner;
        break;
    }
  } else if (t.kids.size() > 2) {
    for (std::size_t i = 1; i < t.kids.size(); ++i)
      if (min_leaf(t.kids[i - 1]) > min_leaf(t.kids[i]))
        throw std::invalid_argument("symmetric canonicalization implemented for binary corollas only");
  }
  return {sign, std::move(t)};
}

std::pair<int, Tree> apply_permutation(const Signature& sig, const Tree& t,
                                       const std::vector<int>& sigma) {
  return symmetric_canonicalize(sig, relabel_leaves(t, sigma));
}

std::string render_tree(const Signature& sig, const Tree& t) {
  if (t.is_leaf()) return std::to_string(t.leaf);
  std::string s = sig.at(t.gen).name;
  s += '(';
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    if (i) s += ',';
    s += render_tree(sig, t.kids[i]);
  }
  s += ')';
  return s;
}

namespace {

struct TreeParser {
  const Signature& sig;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }
  bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '*';
  }
  Tree parse() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int label = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        label = label * 10 + (s[pos++] - '0');
      return Tree::make_leaf(label);
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') fail("expected leaf label or generator name");
    std::size_t start = pos;
    while (pos < s.size() && name_char(s[pos])) ++pos;
    std::string name = s.substr(start, pos - start);
    int g = sig.find(name);
    if (g < 0) fail("unknown generator: " + name);
    skip_ws();
    if (pos >= s.size() || s[pos] != '(') fail("expected ( after generator " + name);
    ++pos;
    Tree t;
    t.gen = g;
    for (;;) {
      t.kids.push_back(parse());
      skip_ws();
      if (pos >= s.size()) fail("unterminated corolla for " + name);
      if (s[pos] == ',') {
        ++pos;
        continue;
      }
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected , or )");
    }
    return t;
  }
};

}  // namespace

Tree parse_tree(const Signature& sig, const std::string& text) {
  TreeParser p{sig, text};
  Tree t = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  // No silent reordering: a misordered corolla under an antisymmetric
  // generator would need a sign, so the input must already be canonical.
  validate_tree(sig, t);
  return t;
}

}  // namespace opd
