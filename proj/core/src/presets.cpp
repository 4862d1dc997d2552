#include "opd/presets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "opd/koszul.hpp"
#include "opd/linalg.hpp"

namespace opd {

namespace {

Signature one_gen(const std::string& name, Symmetry sym, Mode mode) {
  Signature sig;
  sig.mode = mode;
  sig.gens.push_back(Generator{name, 2, sym, 0, -1});
  return sig;
}

Presentation make_plain(const std::string& name, Signature sig,
                        const std::vector<std::string>& rels, const std::string& order) {
  Presentation p;
  p.name = name;
  p.sig = std::move(sig);
  for (const auto& s : rels) p.relations.push_back(parse_element(p.sig, s));
  p.order = builtin_spec(p.sig, order);
  return p;
}

CompatInput one_gen_gamma(Signature base, std::vector<std::array<Rational, 3>> rows) {
  CompatInput in;
  in.base = std::move(base);
  for (const auto& r : rows) {
    std::array<std::vector<std::vector<Rational>>, 3> blocks;
    for (int l = 0; l < 3; ++l) blocks[static_cast<std::size_t>(l)] = {{r[static_cast<std::size_t>(l)]}};
    in.gamma.push_back(std::move(blocks));
  }
  return in;
}

}  // namespace

CompatInput preset_gamma(const std::string& name) {
  if (name == "lie")
    return one_gen_gamma(one_gen("b", Symmetry::Antisymmetric, Mode::Shuffle),
                         {{Rational(1), Rational(-1), Rational(-1)}});
  if (name == "com")
    return one_gen_gamma(one_gen("c", Symmetry::Symmetric, Mode::Shuffle),
                         {{Rational(1), Rational(0), Rational(-1)},
                          {Rational(0), Rational(-1), Rational(1)}});
  if (name == "as")
    return one_gen_gamma(one_gen("a", Symmetry::None, Mode::Nonsymmetric),
                         {{Rational(1), Rational(-1), Rational(0)}});
  if (name == "nilpotent")
    return one_gen_gamma(one_gen("c", Symmetry::Symmetric, Mode::Shuffle),
                         {{Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(0)},
                          {Rational(0), Rational(0), Rational(1)}});
  throw std::invalid_argument("no gamma data for " + name);
}

Presentation preset(const std::string& name) {
  if (name == "lie")
    return make_plain("lie", one_gen("b", Symmetry::Antisymmetric, Mode::Shuffle),
                      {"b(b(1,2),3) - b(b(1,3),2) - b(1,b(2,3))"}, "nonsymfree");
  if (name == "com") {
    Presentation p = dual_presentation(preset("lie"));
    p.name = "com";
    // Path-lex makes the left combs lead, so the right comb stays normal;
    // the inherited opposite order would put the right comb among the
    // leading terms and break the two-products construction hypothesis.
    p.order = builtin_spec(p.sig, "pathlex_DK");
    return p;
  }
  if (name == "prelie") {
    Signature sig;
    sig.mode = Mode::Shuffle;
    sig.gens.push_back(Generator{"alpha", 2, Symmetry::None, 0, 1});
    sig.gens.push_back(Generator{"beta", 2, Symmetry::None, 0, 0});
    return make_plain(
        "prelie", sig,
        {"alpha(alpha(1,2),3) - alpha(1,alpha(2,3)) - alpha(alpha(1,3),2) + alpha(1,beta(2,3))",
         "alpha(beta(1,2),3) - beta(alpha(1,3),2) - beta(1,alpha(2,3)) + beta(beta(1,3),2)",
         "alpha(beta(1,3),2) - beta(alpha(1,2),3) - beta(1,beta(2,3)) + beta(beta(1,2),3)"},
        "nonsymfree");
  }
  if (name == "perm") {
    Presentation p = dual_presentation(preset("prelie"));
    p.name = "perm";
    return p;
  }
  if (name == "prelie-pb") {
    Signature sig;
    sig.mode = Mode::Shuffle;
    sig.gens.push_back(Generator{"m", 2, Symmetry::Symmetric, 1, -1});
    sig.gens.push_back(Generator{"b", 2, Symmetry::Antisymmetric, 0, -1});
    return make_plain(
        "prelie-pb", sig,
        {"b(b(1,2),3) - b(b(1,3),2) - b(1,b(2,3))",
         "m(m(1,2),3) - m(1,m(2,3)) - m(1,b(2,3)) - m(b(1,2),3) - 2*m(b(1,3),2) + b(1,m(2,3)) + "
         "b(m(1,2),3) + b(b(1,3),2)",
         "m(m(1,3),2) - m(1,m(2,3)) + m(1,b(2,3)) - m(b(1,3),2) - 2*m(b(1,2),3) + b(1,m(2,3)) + "
         "b(m(1,3),2) + b(b(1,2),3)"},
        "magprelie");
  }
  if (name == "mag")
    return make_plain("mag", one_gen("m", Symmetry::Symmetric, Mode::Shuffle), {}, "pathlex_DK");
  if (name == "nilpotent")
    return make_plain("nilpotent", one_gen("c", Symmetry::Symmetric, Mode::Shuffle),
                      {"c(c(1,2),3)", "c(c(1,3),2)", "c(1,c(2,3))"}, "pathlex_DK");
  if (name == "lie2") {
    Presentation p = linear_compatibility(preset_gamma("lie"));
    p.name = "lie2";
    p.order = builtin_spec(p.sig, "nonsymfree");
    p.order.gen_rank = {1, 0};  // first bracket above the second
    return p;
  }
  if (name == "com2") {
    Presentation p = linear_compatibility(preset_gamma("com"));
    p.name = "com2";
    return p;
  }
  if (name == "as2") {
    Presentation p = linear_compatibility(preset_gamma("as"));
    p.name = "as2";
    return p;
  }
  if (name == "n2") {
    Presentation p = linear_compatibility(preset_gamma("nilpotent"));
    p.name = "n2";
    return p;
  }
  if (name == "2com") {
    Presentation p = total_compatibility(preset_gamma("com"));
    p.name = "2com";
    return p;
  }
  if (name == "as")
    return make_plain("as", one_gen("a", Symmetry::None, Mode::Nonsymmetric),
                      {"a(a(1,2),3) - a(1,a(2,3))"}, "pathlex_DK");
  if (name == "dend") {
    Signature sig;
    sig.mode = Mode::Nonsymmetric;
    sig.gens.push_back(Generator{"star", 2, Symmetry::None, 0, -1});
    sig.gens.push_back(Generator{"succ", 2, Symmetry::None, 0, -1});
    return make_plain(
        "dend", sig,
        {"star(star(1,2),3) - star(1,star(2,3))",
         "succ(succ(1,2),3) - star(succ(1,2),3) - succ(1,succ(2,3)) + succ(1,star(2,3))",
         "succ(star(1,2),3) - succ(1,succ(2,3))"},
        "pathlex_DK");
  }
  if (name == "dend-ps") {
    Signature sig;
    sig.mode = Mode::Nonsymmetric;
    sig.gens.push_back(Generator{"prec", 2, Symmetry::None, 0, -1});
    sig.gens.push_back(Generator{"succ", 2, Symmetry::None, 0, -1});
    return make_plain(
        "dend-ps", sig,
        {"prec(prec(1,2),3) - prec(1,prec(2,3)) - prec(1,succ(2,3))",
         "prec(succ(1,2),3) - succ(1,prec(2,3))",
         "succ(prec(1,2),3) + succ(succ(1,2),3) - succ(1,succ(2,3))"},
        "pathlex_DK");
  }
  if (name == "dias") {
    Signature sig;
    sig.mode = Mode::Nonsymmetric;
    sig.gens.push_back(Generator{"dashl", 2, Symmetry::None, 0, -1});
    sig.gens.push_back(Generator{"dashr", 2, Symmetry::None, 0, -1});
    return make_plain(
        "dias", sig,
        {"dashl(dashl(1,2),3) - dashl(1,dashl(2,3))",
         "dashr(dashr(1,2),3) - dashr(1,dashr(2,3))",
         "dashl(dashl(1,2),3) - dashl(1,dashr(2,3))",
         "dashr(dashl(1,2),3) - dashr(1,dashr(2,3))",
         "dashl(dashr(1,2),3) - dashr(1,dashl(2,3))"},
        "pathlex_DK");
  }
  throw std::invalid_argument("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  return {"lie",  "com", "prelie", "perm", "prelie-pb", "mag",  "nilpotent", "lie2",
          "com2", "as2", "n2",     "2com", "as",        "dend", "dend-ps",   "dias"};
}

std::string preset_info(const std::string& name) {
  static const std::map<std::string, std::string> info = {
      {"lie", "Lie bracket in shuffle form, Jacobi relation"},
      {"com", "commutative associative product, built as the dual of lie"},
      {"prelie", "pre-Lie product split into two shuffle corollas"},
      {"perm", "one argument emphasized, built as the dual of prelie"},
      {"prelie-pb", "pre-Lie in symmetrized-product and bracket generators"},
      {"mag", "free operad on one symmetric binary generator"},
      {"nilpotent", "one symmetric generator, every two-vertex monomial vanishes"},
      {"lie2", "two compatible Lie brackets, linear compatibility"},
      {"com2", "two linearly compatible commutative products"},
      {"as2", "two linearly compatible associative products, nonsymmetric"},
      {"n2", "linear compatibility built from the nilpotent operad"},
      {"2com", "two totally compatible commutative products"},
      {"as", "associative product, nonsymmetric"},
      {"dend", "dendriform in the star/succ generators, nonsymmetric"},
      {"dend-ps", "dendriform in the prec/succ generators, nonsymmetric"},
      {"dias", "diassociative, nonsymmetric"}};
  const auto it = info.find(name);
  if (it == info.end()) throw std::invalid_argument("unknown preset: " + name);
  return it->second;
}

Presentation shuffleize(const SymPresentation& sp) {
  Presentation p;
  p.name = sp.name;
  p.sig.mode = Mode::Shuffle;
  std::vector<int> direct;  // input generator -> its in-order shuffle corolla
  for (const auto& g : sp.gens) {
    const int base = p.sig.size();
    direct.push_back(base);
    if (g.symmetry == Symmetry::None) {
      if (g.twin.empty())
        throw std::invalid_argument("shuffleize: generator " + g.name + " needs a twin name");
      p.sig.gens.push_back(Generator{g.name, 2, Symmetry::None, g.weight_class, base + 1});
      p.sig.gens.push_back(Generator{g.twin, 2, Symmetry::None, g.weight_class, base});
    } else {
      p.sig.gens.push_back(Generator{g.name, 2, g.symmetry, g.weight_class, -1});
    }
  }

  const int ngens = static_cast<int>(sp.gens.size());
  auto term_elem = [&](const SymTerm& tm) {
    if (tm.outer < 0 || tm.outer >= ngens || tm.inner < 0 || tm.inner >= ngens)
      throw std::invalid_argument("shuffleize: generator index out of range");
    std::array<int, 3> sorted = tm.args;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 2, 3})
      throw std::invalid_argument("shuffleize: term arguments must permute 1, 2, 3");
    const Tree inner =
        Tree::node(direct[static_cast<std::size_t>(tm.inner)],
                   {Tree::make_leaf(tm.args[0]), Tree::make_leaf(tm.args[1])});
    const Tree raw =
        tm.inner_first
            ? Tree::node(direct[static_cast<std::size_t>(tm.outer)], {inner, Tree::make_leaf(tm.args[2])})
            : Tree::node(direct[static_cast<std::size_t>(tm.outer)], {Tree::make_leaf(tm.args[2]), inner});
    const auto [sgn, canon] = symmetric_canonicalize(p.sig, raw);
    return std::pair<Tree, Rational>(canon, tm.coeff * sgn);
  };

  std::vector<Element> raw_relations;
  for (const auto& rel : sp.relations) {
    Element e;
    for (const auto& tm : rel) {
      const auto [t, c] = term_elem(tm);
      add_term(e, t, c);
    }
    if (!e.is_zero()) raw_relations.push_back(std::move(e));
  }

  const std::vector<Tree>& basis = enumerate_monomials(p.sig, 3);
  std::map<Tree, int> col;
  for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = static_cast<int>(i);

  QMatrix mat;
  std::vector<int> sigma{1, 2, 3};
  for (const auto& rel : raw_relations) {
    std::sort(sigma.begin(), sigma.end());
    do {
      Element img;
      for (const auto& [t, c] : rel.terms) {
        const auto [sg, u] = apply_permutation(p.sig, t, sigma);
        add_term(img, u, c * sg);
      }
      if (img.is_zero()) continue;
      QRow row(basis.size(), Rational(0));
      for (const auto& [t, c] : img.terms) row[static_cast<std::size_t>(col.at(t))] = c;
      mat.push_back(std::move(row));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  rref(mat);
  for (const auto& row : mat) {
    Element e;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) add_term(e, basis[j], row[j]);
    p.relations.push_back(std::move(e));
  }

  p.order = builtin_spec(p.sig, "pathlex_DK");
  return p;
}

}  // namespace opd
