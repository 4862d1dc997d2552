#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "opd/compat.hpp"
#include "opd/koszul.hpp"
#include "opd/linalg.hpp"
#include "opd/presets.hpp"

using namespace opd;

namespace {

QMatrix relation_span(const Presentation& p) {
  const auto& basis = enumerate_monomials(p.sig, 3);
  std::map<Tree, int> col;
  int k = 0;
  for (const Tree& t : basis) col[t] = k++;
  QMatrix rows;
  for (const Element& r : p.relations) {
    QRow row(basis.size(), Rational(0));
    for (const auto& [t, c] : r.terms) row[static_cast<std::size_t>(col.at(t))] = c;
    rows.push_back(std::move(row));
  }
  rref(rows);
  while (!rows.empty()) {
    bool all0 = true;
    for (const Rational& c : rows.back())
      if (c != 0) all0 = false;
    if (!all0) break;
    rows.pop_back();
  }
  return rows;
}

}  // namespace

TEST_CASE("every preset loads and validates") {
  std::vector<std::string> names = preset_names();
  CHECK(names.size() == 16);
  for (const std::string& name : names) {
    CAPTURE(name);
    Presentation p = preset(name);
    CHECK(p.name == name);
    CHECK(!p.sig.gens.empty());
    CHECK(!p.order.label.empty());
    validate_presentation(p);
    for (const Element& r : p.relations) CHECK(r.arity() == 3);
    CHECK(!preset_info(name).empty());
  }
  CHECK_THROWS(preset("bogus"));
  CHECK_THROWS(preset_info("bogus"));
}

TEST_CASE("generator layout spot checks") {
  Presentation lie = preset("lie");
  CHECK(lie.sig.mode == Mode::Shuffle);
  CHECK(lie.sig.gens[0].symmetry == Symmetry::Antisymmetric);
  CHECK(lie.sig.gens[0].partner == -1);

  Presentation prelie = preset("prelie");
  REQUIRE(prelie.sig.gens.size() == 2);
  CHECK(prelie.sig.gens[0].name == "alpha");
  CHECK(prelie.sig.gens[1].name == "beta");
  CHECK(prelie.sig.gens[0].partner == 1);
  CHECK(prelie.sig.gens[1].partner == 0);

  Presentation pb = preset("prelie-pb");
  CHECK(pb.sig.gens[0].name == "m");
  CHECK(pb.sig.gens[0].symmetry == Symmetry::Symmetric);
  CHECK(pb.sig.gens[0].weight_class == 1);
  CHECK(pb.sig.gens[1].name == "b");
  CHECK(pb.sig.gens[1].weight_class == 0);

  CHECK(preset("mag").relations.empty());
  CHECK(preset("nilpotent").relations.size() == 3);
  CHECK(preset("perm").sig.gens[0].name == "alpha*");
  CHECK(preset("dend").sig.mode == Mode::Nonsymmetric);
}

TEST_CASE("preset order labels") {
  CHECK(preset("lie").order.label == "nonsymfree");
  CHECK(preset("prelie").order.label == "nonsymfree");
  CHECK(preset("com").order.label == "pathlex_DK");
  CHECK(preset("prelie-pb").order.label == "magprelie");
  CHECK(preset("com2").order.label == "o2");
  CHECK(preset("2com").order.label == "opposite(o2)");
}

TEST_CASE("derived presets match their constructions") {
  CHECK(relation_span(preset("lie2")) == relation_span(linear_compatibility(preset_gamma("lie"))));
  CHECK(relation_span(preset("n2")) ==
        relation_span(linear_compatibility(preset_gamma("nilpotent"))));
  CHECK(relation_span(preset("2com")) == relation_span(total_compatibility(preset_gamma("com"))));
  CHECK(relation_span(preset("com")) == relation_span(dual_presentation(preset("lie"))));
  CHECK(relation_span(preset("perm")) == relation_span(dual_presentation(preset("prelie"))));
}
