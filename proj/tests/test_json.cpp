#include <doctest.h>

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "opd/element.hpp"
#include "opd/groebner.hpp"
#include "opd/presentation.hpp"
#include "opd/presets.hpp"

using namespace opd;

namespace {

bool same_order(const OrderSpec& a, const OrderSpec& b, const Signature& sig, int arity) {
  const auto& ms = enumerate_monomials(sig, arity);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (compare(a, ms[i], ms[j]) != compare(b, ms[i], ms[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("presentation json round trip for every preset") {
  for (const std::string& name : preset_names()) {
    CAPTURE(name);
    Presentation p = preset(name);
    Presentation q = presentation_from_json(presentation_to_json(p));
    CHECK(q.name == p.name);
    REQUIRE(q.sig.gens.size() == p.sig.gens.size());
    CHECK(q.sig.mode == p.sig.mode);
    for (std::size_t i = 0; i < p.sig.gens.size(); ++i) {
      CHECK(q.sig.gens[i].name == p.sig.gens[i].name);
      CHECK(q.sig.gens[i].symmetry == p.sig.gens[i].symmetry);
      CHECK(q.sig.gens[i].weight_class == p.sig.gens[i].weight_class);
      CHECK(q.sig.gens[i].partner == p.sig.gens[i].partner);
    }
    REQUIRE(q.relations.size() == p.relations.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i)
      CHECK(cmp_element_struct(q.relations[i], p.relations[i]) == 0);
    CHECK(q.order.label == p.order.label);
    CHECK(same_order(q.order, p.order, p.sig, 3));
  }
}

TEST_CASE("round-tripped order agrees beyond weight 2") {
  Presentation p = preset("prelie-pb");
  Presentation q = presentation_from_json(presentation_to_json(p));
  CHECK(same_order(q.order, p.order, p.sig, 4));
}

TEST_CASE("presentation file round trip") {
  Presentation p = preset("prelie");
  std::string path = "prelie_roundtrip.json";
  save_presentation_file(p, path);
  Presentation q = load_presentation_file(path);
  CHECK(q.sig.gens[0].name == "alpha");
  CHECK(hilbert_dims(complete(q, 4), 4) == std::vector<int>{1, 2, 9, 64});
}

TEST_CASE("order json round trip") {
  Presentation p = preset("prelie-pb");
  OrderSpec spec = order_from_json(p.sig, order_to_json(p.order));
  CHECK(spec.label == p.order.label);
  CHECK(same_order(spec, p.order, p.sig, 3));
  OrderSpec opp = order_from_json(p.sig, order_to_json(opposite_of(p.order)));
  CHECK(opp.label == "opposite(magprelie)");
  CHECK(same_order(opp, opposite_of(p.order), p.sig, 3));
}

TEST_CASE("element and tree text round trips") {
  Presentation lie = preset("lie");
  const Element& jac = lie.relations[0];
  Element back = parse_element(lie.sig, render_element(lie.sig, jac));
  CHECK(cmp_element_struct(back, jac) == 0);
  Presentation prelie = preset("prelie");
  for (const Tree& t : enumerate_monomials(prelie.sig, 4)) {
    Tree rt = parse_tree(prelie.sig, render_tree(prelie.sig, t));
    CHECK(rt == t);
  }
}

TEST_CASE("malformed presentation json is rejected") {
  nlohmann::json j;
  j["name"] = "broken";
  CHECK_THROWS(presentation_from_json(j));
}
