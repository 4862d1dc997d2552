#include "opd/presentation.hpp"

#include <fstream>
#include <stdexcept>

namespace opd {

using nlohmann::json;

void validate_presentation(const Presentation& p) {
  if (p.sig.gens.empty()) throw std::invalid_argument("presentation needs at least one generator");
  for (const Generator& g : p.sig.gens) {
    if (g.arity < 2) throw std::invalid_argument("generator arity must be >= 2");
    if (g.partner >= p.sig.size()) throw std::invalid_argument("partner index out of range");
  }
  if (p.order.gen_rank.size() != static_cast<std::size_t>(p.sig.size()))
    throw std::invalid_argument("order gen_rank size must match the signature");
  for (const Element& r : p.relations) {
    if (r.is_zero()) throw std::invalid_argument("zero relation");
    for (const auto& [t, c] : r.terms) validate_tree(p.sig, t);
  }
}

namespace {

json key_to_json(const OrderKey& key) {
  json j;
  if (const auto* kc = std::get_if<KeyCorolla>(&key)) {
    j["kind"] = "corolla_count";
    j["in_class"] = std::vector<int>(kc->in_class.begin(), kc->in_class.end());
    j["more_is_smaller"] = kc->more_is_smaller;
  } else if (const auto* kw = std::get_if<KeyPathWords>(&key)) {
    j["kind"] = "path_words";
    j["word_order"] = kw->word_order == WordOrder::DegLex ? "deglex" : "lex";
    j["reversed"] = kw->reversed;
  } else if (const auto* kp = std::get_if<KeyPermLex>(&key)) {
    j["kind"] = "perm_lex";
    j["reversed"] = kp->reversed;
  } else if (const auto* kj = std::get_if<KeyProjected>(&key)) {
    j["kind"] = "projected";
    j["gen_map"] = kj->gen_map;
    j["reversed"] = kj->reversed;
    j["inner"] = order_to_json(*kj->inner);
  }
  return j;
}

OrderKey key_from_json(const Signature& sig, const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "corolla_count") {
    KeyCorolla kc;
    for (int v : j.at("in_class").get<std::vector<int>>()) kc.in_class.push_back(v ? 1 : 0);
    kc.more_is_smaller = j.value("more_is_smaller", true);
    return kc;
  }
  if (kind == "path_words") {
    KeyPathWords kw;
    kw.word_order =
        j.value("word_order", std::string("deglex")) == "lex" ? WordOrder::Lex : WordOrder::DegLex;
    kw.reversed = j.value("reversed", false);
    return kw;
  }
  if (kind == "perm_lex") {
    KeyPermLex kp;
    kp.reversed = j.value("reversed", false);
    return kp;
  }
  if (kind == "projected") {
    KeyProjected kj;
    kj.gen_map = j.at("gen_map").get<std::vector<int>>();
    kj.reversed = j.value("reversed", false);
    Signature inner_sig;  // inner order is self-contained after serialization
    inner_sig.mode = sig.mode;
    int m = 0;
    for (int v : kj.gen_map) m = std::max(m, v + 1);
    for (int i = 0; i < m; ++i) {
      Generator g;
      g.name = "p" + std::to_string(i);
      inner_sig.gens.push_back(g);
    }
    kj.inner = std::make_shared<OrderSpec>(order_from_json(inner_sig, j.at("inner")));
    return kj;
  }
  throw std::invalid_argument("unknown order key kind: " + kind);
}

}  // namespace

json order_to_json(const OrderSpec& spec) {
  json j;
  j["label"] = spec.label;
  j["opposite"] = spec.opposite;
  j["gen_rank"] = spec.gen_rank;
  json keys = json::array();
  for (const OrderKey& k : spec.keys) keys.push_back(key_to_json(k));
  j["keys"] = keys;
  return j;
}

OrderSpec order_from_json(const Signature& sig, const json& j) {
  if (j.is_string()) return builtin_spec(sig, j.get<std::string>());
  OrderSpec spec;
  spec.label = j.value("label", std::string("custom"));
  if (!j.contains("keys")) return builtin_spec(sig, spec.label);
  spec.opposite = j.value("opposite", false);
  spec.gen_rank = j.at("gen_rank").get<std::vector<int>>();
  for (const json& k : j.at("keys")) spec.keys.push_back(key_from_json(sig, k));
  return spec;
}

json presentation_to_json(const Presentation& p) {
  json j;
  j["name"] = p.name;
  j["mode"] = mode_name(p.sig.mode);
  json gens = json::array();
  for (const Generator& g : p.sig.gens) {
    json jg;
    jg["name"] = g.name;
    jg["arity"] = g.arity;
    jg["symmetry"] = symmetry_name(g.symmetry);
    jg["weight_class"] = g.weight_class;
    if (g.partner >= 0) jg["partner"] = p.sig.gens[static_cast<std::size_t>(g.partner)].name;
    gens.push_back(jg);
  }
  j["generators"] = gens;
  json rels = json::array();
  for (const Element& r : p.relations) rels.push_back(render_element(p.sig, r));
  j["relations"] = rels;
  j["order"] = order_to_json(p.order);
  return j;
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  p.name = j.value("name", std::string("anonymous"));
  const std::string mode = j.value("mode", std::string("shuffle"));
  if (mode == "shuffle")
    p.sig.mode = Mode::Shuffle;
  else if (mode == "nonsymmetric" || mode == "ns")
    p.sig.mode = Mode::Nonsymmetric;
  else
    throw std::invalid_argument("unknown mode: " + mode);
  for (const json& jg : j.at("generators")) {
    Generator g;
    g.name = jg.at("name").get<std::string>();
    g.arity = jg.value("arity", 2);
    g.symmetry = symmetry_from_name(jg.value("symmetry", std::string("none")));
    g.weight_class = jg.value("weight_class", 0);
    p.sig.gens.push_back(g);
  }
  for (const json& jg : j.at("generators")) {
    if (!jg.contains("partner")) continue;
    int self = p.sig.find(jg.at("name").get<std::string>());
    int other = p.sig.find(jg.at("partner").get<std::string>());
    if (other < 0) throw std::invalid_argument("unknown partner generator");
    p.sig.gens[static_cast<std::size_t>(self)].partner = other;
  }
  for (const json& jr : j.value("relations", json::array()))
    p.relations.push_back(parse_element(p.sig, jr.get<std::string>()));
  if (j.contains("order"))
    p.order = order_from_json(p.sig, j.at("order"));
  else
    p.order = builtin_spec(p.sig, "pathlex_DK");
  validate_presentation(p);
  return p;
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open presentation file: " + path);
  json j;
  in >> j;
  return presentation_from_json(j);
}

void save_presentation_file(const Presentation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write presentation file: " + path);
  out << presentation_to_json(p).dump(2) << "\n";
}

}  // namespace opd
