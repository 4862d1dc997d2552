#include "opd/ordering.hpp"

#include <numeric>
#include <stdexcept>

namespace opd {

namespace {

int count_class(const Tree& t, const std::vector<char>& in_class) {
  if (t.is_leaf()) return 0;
  int c = in_class[static_cast<std::size_t>(t.gen)] ? 1 : 0;
  for (const Tree& k : t.kids) c += count_class(k, in_class);
  return c;
}

int cmp_word(const std::vector<int>& a, const std::vector<int>& b, WordOrder wo,
             const std::vector<int>& rank) {
  if (wo == WordOrder::DegLex && a.size() != b.size())
    return a.size() < b.size() ? -1 : 1;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ra = rank[static_cast<std::size_t>(a[i])];
    int rb = rank[static_cast<std::size_t>(b[i])];
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

Tree map_gens(const Tree& t, const std::vector<int>& gen_map) {
  if (t.is_leaf()) return t;
  Tree r;
  r.gen = gen_map[static_cast<std::size_t>(t.gen)];
  for (const Tree& k : t.kids) r.kids.push_back(map_gens(k, gen_map));
  return r;
}

int cmp_keys(const OrderSpec& spec, const Tree& a, const Tree& b) {
  // Path data is shared by two of the keys; computed lazily once.
  PathData pa, pb;
  bool have_paths = false;
  auto paths = [&]() {
    if (!have_paths) {
      pa = path_sequence(a);
      pb = path_sequence(b);
      have_paths = true;
    }
  };
  for (const OrderKey& key : spec.keys) {
    int c = 0;
    if (const auto* kc = std::get_if<KeyCorolla>(&key)) {
      int ca = count_class(a, kc->in_class);
      int cb = count_class(b, kc->in_class);
      if (ca != cb) c = ca < cb ? 1 : -1;  // more in class = smaller
      if (!kc->more_is_smaller) c = -c;
    } else if (const auto* kw = std::get_if<KeyPathWords>(&key)) {
      paths();
      for (std::size_t i = 0; i < pa.words.size() && c == 0; ++i)
        c = cmp_word(pa.words[i], pb.words[i], kw->word_order, spec.gen_rank);
      if (kw->reversed) c = -c;
    } else if (const auto* kp = std::get_if<KeyPermLex>(&key)) {
      paths();
      for (std::size_t i = 0; i < pa.perm.size() && c == 0; ++i)
        if (pa.perm[i] != pb.perm[i]) c = pa.perm[i] < pb.perm[i] ? -1 : 1;
      if (kp->reversed) c = -c;
    } else if (const auto* kj = std::get_if<KeyProjected>(&key)) {
      c = compare(*kj->inner, map_gens(a, kj->gen_map), map_gens(b, kj->gen_map));
      if (kj->reversed) c = -c;
    }
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

int compare(const OrderSpec& spec, const Tree& a, const Tree& b) {
  const int aa = tree_arity(a);
  const int ab = tree_arity(b);
  if (aa != ab) return aa < ab ? -1 : 1;
  int c = cmp_keys(spec, a, b);
  return spec.opposite ? -c : c;
}

std::vector<int> default_ranks(const Signature& sig) {
  std::vector<int> r(static_cast<std::size_t>(sig.size()));
  std::iota(r.begin(), r.end(), 0);
  return r;
}

OrderSpec opposite_of(OrderSpec spec) {
  spec.opposite = !spec.opposite;
  const std::string& l = spec.label;
  if (l.size() > 10 && l.rfind("opposite(", 0) == 0 && l.back() == ')')
    spec.label = l.substr(9, l.size() - 10);
  else
    spec.label = "opposite(" + l + ")";
  return spec;
}

namespace {

// Reconstructs the two-copy structure of a compatible-pair signature from its
// generator names: <stem>1 / <stem>2, optionally followed by dual stars.
OrderSpec make_o2(const Signature& sig) {
  std::vector<std::string> stems;
  std::vector<int> gen_map(static_cast<std::size_t>(sig.size()), -1);
  std::vector<int> copy_of(static_cast<std::size_t>(sig.size()), 0);
  for (int i = 0; i < sig.size(); ++i) {
    std::string n = sig.gens[static_cast<std::size_t>(i)].name;
    while (!n.empty() && n.back() == '*') n.pop_back();
    if (n.size() < 2 || (n.back() != '1' && n.back() != '2'))
      throw std::invalid_argument("o2 order needs generators named <stem>1/<stem>2");
    int copy = n.back() - '0';
    std::string stem = n.substr(0, n.size() - 1);
    int si = -1;
    for (std::size_t j = 0; j < stems.size(); ++j)
      if (stems[j] == stem) si = static_cast<int>(j);
    if (si < 0) {
      si = static_cast<int>(stems.size());
      stems.push_back(stem);
    }
    gen_map[static_cast<std::size_t>(i)] = si;
    copy_of[static_cast<std::size_t>(i)] = copy;
  }
  Signature base;
  base.mode = sig.mode;
  for (std::size_t j = 0; j < stems.size(); ++j) {
    Generator g;
    g.name = stems[j];
    g.arity = 2;
    base.gens.push_back(g);
  }
  auto inner = std::make_shared<OrderSpec>(builtin_spec(base, "pathlex_DK"));

  OrderSpec spec;
  spec.label = "o2";
  KeyCorolla kc;
  kc.in_class.resize(static_cast<std::size_t>(sig.size()));
  for (int i = 0; i < sig.size(); ++i)
    kc.in_class[static_cast<std::size_t>(i)] = copy_of[static_cast<std::size_t>(i)] == 1;
  kc.more_is_smaller = false;
  spec.keys.push_back(kc);
  KeyProjected kj;
  kj.gen_map = gen_map;
  kj.inner = inner;
  spec.keys.push_back(kj);
  spec.keys.push_back(KeyPathWords{});
  spec.keys.push_back(KeyPermLex{});
  // More first-copy corollas = larger; ties compare through the projected
  // base order, so on pure monomials of either copy the order agrees with
  // the base order. The word tie-break ranks second-copy letters above
  // first-copy ones, which roots the leading terms of the mixed relations
  // at second-copy corollas: every basis element beyond the first copy's
  // own relations then has a second-copy root, and the first copy acts
  // freely on normal forms.
  spec.gen_rank.resize(static_cast<std::size_t>(sig.size()));
  const int s = static_cast<int>(stems.size());
  for (int i = 0; i < sig.size(); ++i)
    spec.gen_rank[static_cast<std::size_t>(i)] =
        (copy_of[static_cast<std::size_t>(i)] == 2 ? s : 0) + gen_map[static_cast<std::size_t>(i)];
  return spec;
}

}  // namespace

OrderSpec builtin_spec(const Signature& sig, const std::string& name) {
  if (name.size() > 10 && name.rfind("opposite(", 0) == 0 && name.back() == ')')
    return opposite_of(builtin_spec(sig, name.substr(9, name.size() - 10)));

  OrderSpec spec;
  spec.gen_rank = default_ranks(sig);
  spec.label = name;
  if (name == "pathlex_DK") {
    spec.keys = {KeyPathWords{}, KeyPermLex{}};
    return spec;
  }
  if (name == "nonsymfree") {
    spec.keys = {KeyPermLex{}, KeyPathWords{}};
    return spec;
  }
  if (name == "magprelie" || name == "prelie_module") {
    if (name == "magprelie") {
      // Fewer product corollas = larger, so the pure-bracket monomials lead.
      KeyCorolla kc;
      kc.in_class.resize(static_cast<std::size_t>(sig.size()));
      for (int i = 0; i < sig.size(); ++i)
        kc.in_class[static_cast<std::size_t>(i)] =
            sig.gens[static_cast<std::size_t>(i)].weight_class == 1;
      kc.more_is_smaller = true;
      spec.keys = {kc, KeyPathWords{}, KeyPermLex{}};
    } else {
      // Module order: permutation first, and the weight-class generators
      // (the products) rank above the rest as path-word letters.
      spec.keys = {KeyPermLex{}, KeyPathWords{}};
      for (int i = 0; i < sig.size(); ++i)
        if (sig.gens[static_cast<std::size_t>(i)].weight_class == 1)
          spec.gen_rank[static_cast<std::size_t>(i)] += sig.size();
    }
    return spec;
  }
  if (name == "o2") return make_o2(sig);
  throw std::invalid_argument("unknown builtin order: " + name);
}

}  // namespace opd
