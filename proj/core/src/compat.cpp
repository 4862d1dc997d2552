#include "opd/compat.hpp"

#include <fstream>
#include <stdexcept>

#include "opd/linalg.hpp"

namespace opd {

using nlohmann::json;

namespace {

// Decorated two-vertex shape: outer generator over inner generator.
Tree shape_tree(int l, int outer, int inner) {
  switch (l) {
    case 1:
      return Tree::node(outer, {Tree::node(inner, {Tree::make_leaf(1), Tree::make_leaf(2)}),
                                Tree::make_leaf(3)});
    case 2:
      return Tree::node(outer, {Tree::make_leaf(1),
                                Tree::node(inner, {Tree::make_leaf(2), Tree::make_leaf(3)})});
    case 3:
      return Tree::node(outer, {Tree::node(inner, {Tree::make_leaf(1), Tree::make_leaf(3)}),
                                Tree::make_leaf(2)});
    default:
      throw std::invalid_argument("shape index must be 1, 2 or 3");
  }
}

int copy_index(const CompatInput& in, int c, int base_gen) {
  return (c - 1) * in.base.size() + base_gen;
}

}  // namespace

void validate_compat(const CompatInput& in) {
  const int s = in.base.size();
  if (s == 0) throw std::invalid_argument("compatibility input needs base generators");
  for (const Generator& g : in.base.gens)
    if (g.arity != 2) throw std::invalid_argument("compatibility input needs binary generators");
  const int lmax = in.base.mode == Mode::Nonsymmetric ? 2 : 3;
  for (const auto& blocks : in.gamma) {
    for (int l = 1; l <= 3; ++l) {
      const auto& blk = blocks[static_cast<std::size_t>(l - 1)];
      if (static_cast<int>(blk.size()) != s)
        throw std::invalid_argument("gamma block must be s x s");
      for (const auto& row : blk) {
        if (static_cast<int>(row.size()) != s)
          throw std::invalid_argument("gamma block must be s x s");
        if (l > lmax)
          for (const Rational& c : row)
            if (c != 0)
              throw std::invalid_argument("nonsymmetric gamma must vanish on the third shape");
      }
    }
  }
  // The t base relations must be linearly independent.
  QMatrix m;
  for (const auto& blocks : in.gamma) {
    QRow row;
    for (int l = 1; l <= 3; ++l)
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
          row.push_back(blocks[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(j)]);
    m.push_back(std::move(row));
  }
  if (!m.empty() && rank(m) != static_cast<int>(in.gamma.size()))
    throw std::invalid_argument("base relations encoded by gamma must be linearly independent");
}

Signature two_copy_signature(const CompatInput& in) {
  Signature sig;
  sig.mode = in.base.mode;
  for (int c = 1; c <= 2; ++c) {
    for (const Generator& g : in.base.gens) {
      Generator cg = g;
      cg.name = g.name + std::to_string(c);
      cg.weight_class = c == 1 ? 1 : 0;
      cg.partner = -1;
      sig.gens.push_back(cg);
    }
  }
  // Partner pairs stay within each copy.
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < in.base.size(); ++i) {
      int p = in.base.gens[static_cast<std::size_t>(i)].partner;
      if (p >= 0)
        sig.gens[static_cast<std::size_t>(c * in.base.size() + i)].partner =
            c * in.base.size() + p;
    }
  return sig;
}

std::vector<Element> copy_relations(const CompatInput& in, int c) {
  const int s = in.base.size();
  const int lmax = in.base.mode == Mode::Nonsymmetric ? 2 : 3;
  std::vector<Element> out;
  for (const auto& blocks : in.gamma) {
    Element r;
    for (int l = 1; l <= lmax; ++l)
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
          const Rational& coeff = blocks[static_cast<std::size_t>(l - 1)]
                                        [static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if (coeff == 0) continue;
          add_term(r, shape_tree(l, copy_index(in, c, j), copy_index(in, c, i)), coeff);
        }
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Mixed terms with a fixed assignment: outer from copy co, inner from copy ci.
Element mixed_gamma(const CompatInput& in, int k, int co, int ci) {
  const int s = in.base.size();
  const int lmax = in.base.mode == Mode::Nonsymmetric ? 2 : 3;
  Element r;
  for (int l = 1; l <= lmax; ++l)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        const Rational& coeff =
            in.gamma[static_cast<std::size_t>(k)][static_cast<std::size_t>(l - 1)]
                    [static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (coeff == 0) continue;
        add_term(r, shape_tree(l, copy_index(in, co, j), copy_index(in, ci, i)), coeff);
      }
  return r;
}

}  // namespace

Presentation linear_compatibility(const CompatInput& in) {
  validate_compat(in);
  Presentation p;
  p.name = "linear-compat";
  p.sig = two_copy_signature(in);
  for (Element& r : copy_relations(in, 1)) p.relations.push_back(std::move(r));
  for (Element& r : copy_relations(in, 2)) p.relations.push_back(std::move(r));
  // Linearization: replace one copy by the other in all positions and sum.
  for (std::size_t k = 0; k < in.gamma.size(); ++k) {
    Element r = combine(mixed_gamma(in, static_cast<int>(k), 1, 2),
                        mixed_gamma(in, static_cast<int>(k), 2, 1), Rational(1), Rational(1));
    if (!r.is_zero()) p.relations.push_back(std::move(r));
  }
  p.order = o2_order(p.sig);
  validate_presentation(p);
  return p;
}

Presentation total_compatibility(const CompatInput& in) {
  validate_compat(in);
  Presentation p;
  p.name = "total-compat";
  p.sig = two_copy_signature(in);
  const int s = in.base.size();
  const int lmax = in.base.mode == Mode::Nonsymmetric ? 2 : 3;
  for (Element& r : copy_relations(in, 1)) p.relations.push_back(std::move(r));
  for (Element& r : copy_relations(in, 2)) p.relations.push_back(std::move(r));
  // Identifications: each mixed decorated shape agrees for the two assignments.
  for (int l = 1; l <= lmax; ++l)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        Element r;
        add_term(r, shape_tree(l, copy_index(in, 1, j), copy_index(in, 2, i)), Rational(1));
        add_term(r, shape_tree(l, copy_index(in, 2, j), copy_index(in, 1, i)), Rational(-1));
        p.relations.push_back(std::move(r));
      }
  // Gamma family decorated outer-first, plus the redundant outer-second form;
  // the latter follows from the identifications and drops out on interreduction.
  for (std::size_t k = 0; k < in.gamma.size(); ++k) {
    Element a = mixed_gamma(in, static_cast<int>(k), 1, 2);
    if (!a.is_zero()) p.relations.push_back(std::move(a));
    Element b = mixed_gamma(in, static_cast<int>(k), 2, 1);
    if (!b.is_zero()) p.relations.push_back(std::move(b));
  }
  p.order = builtin_spec(p.sig, "opposite(o2)");
  validate_presentation(p);
  return p;
}

OrderSpec o2_order(const Signature& two_copy_sig) { return builtin_spec(two_copy_sig, "o2"); }

bool check_o2_hypothesis(const GroebnerResult& base) {
  const int s = base.sig.size();
  std::vector<Tree> lts = base.leading_terms();
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < s; ++i) {
      Tree m = shape_tree(2, j, i);
      bool reducible = false;
      for (const Tree& lt : lts)
        if (tree_weight(lt) <= 2 && divides(m, lt)) reducible = true;
      if (reducible) return false;
    }
  return true;
}

CompatInput compat_from_json(const json& j) {
  CompatInput in;
  const std::string mode = j.value("mode", std::string("shuffle"));
  if (mode == "shuffle")
    in.base.mode = Mode::Shuffle;
  else if (mode == "nonsymmetric" || mode == "ns")
    in.base.mode = Mode::Nonsymmetric;
  else
    throw std::invalid_argument("unknown mode: " + mode);
  for (const json& jg : j.at("generators")) {
    Generator g;
    if (jg.is_string()) {
      g.name = jg.get<std::string>();
    } else {
      g.name = jg.at("name").get<std::string>();
      g.symmetry = symmetry_from_name(jg.value("symmetry", std::string("none")));
    }
    in.base.gens.push_back(g);
  }
  for (const json& jg : j.at("generators")) {
    if (!jg.is_object() || !jg.contains("partner")) continue;
    int self = in.base.find(jg.at("name").get<std::string>());
    int other = in.base.find(jg.at("partner").get<std::string>());
    if (other < 0) throw std::invalid_argument("unknown partner generator");
    in.base.gens[static_cast<std::size_t>(self)].partner = other;
  }
  for (const json& jk : j.at("gamma")) {
    std::array<std::vector<std::vector<Rational>>, 3> blocks;
    if (static_cast<int>(jk.size()) != 3)
      throw std::invalid_argument("each gamma entry needs three shape blocks");
    for (int l = 0; l < 3; ++l) {
      for (const json& jrow : jk.at(static_cast<std::size_t>(l))) {
        std::vector<Rational> row;
        for (const json& jc : jrow) {
          if (jc.is_number_integer())
            row.push_back(Rational(jc.get<long>()));
          else
            row.push_back(parse_rational(jc.get<std::string>()));
        }
        blocks[static_cast<std::size_t>(l)].push_back(std::move(row));
      }
    }
    in.gamma.push_back(std::move(blocks));
  }
  validate_compat(in);
  return in;
}

json compat_to_json(const CompatInput& in) {
  json j;
  j["mode"] = mode_name(in.base.mode);
  json gens = json::array();
  for (const Generator& g : in.base.gens) {
    json jg;
    jg["name"] = g.name;
    jg["symmetry"] = symmetry_name(g.symmetry);
    if (g.partner >= 0) jg["partner"] = in.base.gens[static_cast<std::size_t>(g.partner)].name;
    gens.push_back(jg);
  }
  j["generators"] = gens;
  json gammas = json::array();
  for (const auto& blocks : in.gamma) {
    json jk = json::array();
    for (int l = 0; l < 3; ++l) {
      json jb = json::array();
      for (const auto& row : blocks[static_cast<std::size_t>(l)]) {
        json jr = json::array();
        for (const Rational& c : row) jr.push_back(render_rational(c));
        jb.push_back(jr);
      }
      jk.push_back(jb);
    }
    gammas.push_back(jk);
  }
  j["gamma"] = gammas;
  return j;
}

CompatInput load_compat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open gamma file: " + path);
  json j;
  in >> j;
  return compat_from_json(j);
}

}  // namespace opd
