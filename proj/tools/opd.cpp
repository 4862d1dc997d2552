#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "opd/compat.hpp"
#include "opd/embedding.hpp"
#include "opd/freeness.hpp"
#include "opd/koszul.hpp"
#include "opd/presets.hpp"
#include "opd/series.hpp"

using nlohmann::json;
using namespace opd;

namespace {

int g_threads = 1;
bool g_json = false;

// Presets resolve by name, anything else is treated as a file path.
Presentation resolve(const std::string& arg) {
  const auto names = preset_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) return preset(arg);
  if (std::filesystem::exists(arg)) return load_presentation_file(arg);
  throw std::invalid_argument("not a preset or a readable file: " + arg);
}

CompatInput resolve_gamma(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_compat_file(arg);
  return preset_gamma(arg);
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (out.empty()) throw std::invalid_argument("empty dimension list");
  return out;
}

SeriesKind parse_kind(const std::string& s) {
  if (s == "egf") return SeriesKind::EGF;
  if (s == "ogf") return SeriesKind::OGF;
  throw std::invalid_argument("kind must be egf or ogf");
}

json dims_json(const std::vector<int>& d) { return json(d); }

json groebner_json(const GroebnerResult& r, int N) {
  json out;
  out["order"] = r.spec.label;
  out["complete_up_to"] = r.complete_up_to;
  out["quadratic"] = r.is_quadratic;
  out["basis_size"] = r.basis.size();
  json lts = json::array();
  for (const auto& t : r.leading_terms()) lts.push_back(render_tree(r.sig, t));
  out["leading_terms"] = lts;
  out["dims"] = dims_json(hilbert_dims(r, N));
  if (std::getenv("OPD_VERBOSE")) {
    json basis = json::array();
    for (const auto& e : r.basis) basis.push_back(render_element(r.sig, e));
    out["basis"] = basis;
  }
  return out;
}

void print_groebner(const Presentation& p, const GroebnerResult& r, int N) {
  if (g_json) {
    json out = groebner_json(r, N);
    out["presentation"] = p.name;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << p.name << ": completed to arity " << r.complete_up_to << " under " << r.spec.label
            << "\n";
  std::cout << "quadratic: " << (r.is_quadratic ? "yes" : "no") << ", basis size "
            << r.basis.size() << "\n";
  std::cout << "dims:";
  for (int d : hilbert_dims(r, N)) std::cout << " " << d;
  std::cout << "\nleading terms:\n";
  for (const auto& t : r.leading_terms()) std::cout << "  " << render_tree(r.sig, t) << "\n";
  if (std::getenv("OPD_VERBOSE")) {
    std::cout << "basis:\n";
    for (const auto& e : r.basis) std::cout << "  " << render_element(r.sig, e) << "\n";
  }
}

int report_verdict(const std::string& what, bool holds, const json& extra) {
  if (g_json) {
    json out = extra;
    out["check"] = what;
    out["holds"] = holds;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << what << ": " << (holds ? "holds" : "fails") << "\n";
    for (const auto& [k, v] : extra.items())
      std::cout << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  return holds ? 0 : 1;
}

json witness_list(const Signature& sig, const std::vector<Tree>& ws) {
  json out = json::array();
  for (const auto& t : ws) out.push_back(render_tree(sig, t));
  return out;
}

void emit_presentation(const Presentation& p, const std::string& out_path) {
  json j = presentation_to_json(p);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write " + out_path);
    f << j.dump(2) << "\n";
  }
}

void print_series(const char* tag, const HilbertSeries& f) {
  if (g_json) {
    json out;
    out["what"] = tag;
    out["kind"] = f.kind == SeriesKind::EGF ? "egf" : "ogf";
    json c = json::array();
    for (int n = 1; n <= f.trunc(); ++n) c.push_back(f.coeff(n).get_str());
    out["coeffs"] = c;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << tag << ": " << render_series(f) << "\n";
  }
}

int run_repro(const std::string& id) {
  bool all = true;
  auto step = [&](const std::string& name, bool ok) {
    std::cout << "  " << name << ": " << (ok ? "holds" : "fails") << "\n";
    all = all && ok;
  };
  if (id == "nonsymfree") {
    std::cout << "free as nonsymmetric operads:\n";
    for (const char* name : {"lie", "prelie", "lie2"}) {
      Presentation p = preset(name);
      auto r = complete(p, 5, g_threads);
      step(p.name, check_free_nonsymmetric(r).holds);
    }
  } else if (id == "n2-not-koszul") {
    Presentation p = preset("n2");
    auto r = complete(p, 5, g_threads);
    auto d = hilbert_dims(r, 5);
    std::cout << "N2 dims:";
    for (int x : d) std::cout << " " << x;
    std::cout << "\n";
    step("dims 1 2 3 0 0", d == std::vector<int>({1, 2, 3, 0, 0}));
    std::vector<int> padded(d);
    padded.resize(12, 0);
    auto st = koszul_sign_test(from_dims(padded, SeriesKind::EGF));
    std::cout << "  sign test: first negative coefficient at degree " << st.first_negative
              << "\n";
    step("negative coefficient found", !st.passes);
  } else if (id == "magprelie") {
    Presentation q = preset("prelie-pb");
    auto rq = complete(q, 5, g_threads);
    print_groebner(q, rq, 5);
    Presentation sub = sub_presentation(q, {"m"}, "mag");
    auto rp = complete(sub, 5, g_threads);
    step("embedding Mag into PreLie", check_embedding(sub, q, rp, rq));
    auto rep = check_left_module_free(sub, q, rq);
    std::cout << "  K dims:";
    for (int x : rep.k_dims) std::cout << " " << x;
    std::cout << "\n";
    step("left module over Mag", rep.holds);
    step("EGF identity with K dims 1,1,3,16,125",
         verify_module_decomposition(hilbert_dims(rp, 5), {1, 1, 3, 16, 125},
                                     hilbert_dims(rq, 5), SeriesKind::EGF));
  } else if (id == "prelie-module") {
    Presentation q = preset("prelie-pb");
    q.order = builtin_spec(q.sig, "prelie_module");
    auto rq = complete(q, 5, g_threads);
    print_groebner(q, rq, 5);
    Presentation sub = sub_presentation(q, {"b"}, "lie");
    auto rep = check_left_module_free(sub, q, rq);
    std::cout << "  K dims:";
    for (int x : rep.k_dims) std::cout << " " << x;
    std::cout << "\n";
    step("left module over Lie", rep.holds);
    auto rp = complete(sub, 5, g_threads);
    step("EGF identity", verify_module_decomposition(hilbert_dims(rp, 5), rep.k_dims,
                                                     hilbert_dims(rq, 5), SeriesKind::EGF));
  } else if (id == "o2") {
    for (const char* name : {"com", "as"}) {
      CompatInput c = preset_gamma(name);
      Presentation base(preset(name));
      auto rbase = complete(base, 4, g_threads);
      step(std::string(name) + " o2 hypothesis", check_o2_hypothesis(rbase));
      Presentation p2 = linear_compatibility(c);
      p2.name = std::string(name) + "2";
      auto r2 = complete(p2, 5, g_threads);
      step(p2.name + " quadratic", r2.is_quadratic);
      Presentation sub =
          sub_presentation(p2, {p2.sig.gens[0].name}, std::string(name) + "-first");
      step(p2.name + " free over first copy", check_left_module_free(sub, p2, r2).holds);
    }
  } else if (id == "dend") {
    Presentation q = preset("dend");
    auto rq = complete(q, 5, g_threads);
    print_groebner(q, rq, 5);
    step("dims are Catalan", hilbert_dims(rq, 5) == std::vector<int>({1, 2, 5, 14, 42}));
    Presentation sub = sub_presentation(q, {"star"}, "as");
    step("left module over As", check_left_module_free(sub, q, rq).holds);
  } else {
    throw std::invalid_argument(
        "unknown repro id (try: nonsymfree, n2-not-koszul, magprelie, prelie-module, o2, dend)");
  }
  std::cout << (all ? "all steps hold" : "some steps fail") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computer algebra for shuffle and nonsymmetric operads"};
  app.require_subcommand(1);
  app.add_option("--threads", g_threads, "worker threads for completion")->capture_default_str();
  app.add_flag("--json", g_json, "machine-readable output");

  std::string pres_arg, order_arg, out_path;
  int max_arity = 6;
  int arity = 3;

  auto* groebner = app.add_subcommand("groebner", "run truncated completion");
  groebner->add_option("presentation", pres_arg)->required();
  groebner->add_option("--order", order_arg, "builtin order name overriding the preset");
  groebner->add_option("--max-arity", max_arity)->capture_default_str();

  auto* dims = app.add_subcommand("dims", "normal-monomial dimensions");
  dims->add_option("presentation", pres_arg)->required();
  dims->add_option("--max-arity", max_arity)->capture_default_str();

  auto* normals = app.add_subcommand("normal-monomials", "list normal monomials of one arity");
  normals->add_option("presentation", pres_arg)->required();
  normals->add_option("--arity", arity)->capture_default_str();
  normals->add_option("--max-arity", max_arity)->capture_default_str();

  auto* dual = app.add_subcommand("dual", "Koszul dual presentation");
  dual->add_option("presentation", pres_arg)->required();
  dual->add_option("-o,--out", out_path, "write the dual presentation to a file");

  auto* check = app.add_subcommand("check", "freeness and hypothesis checkers");
  check->require_subcommand(1);
  std::vector<std::string> sub_gens;
  std::string side = "left";

  auto* freens = check->add_subcommand("free-ns", "prime leading terms");
  freens->add_option("presentation", pres_arg)->required();
  freens->add_option("--max-arity", max_arity)->capture_default_str();

  auto* embed = check->add_subcommand("embedding", "suboperad embedding");
  embed->add_option("presentation", pres_arg)->required();
  embed->add_option("--sub", sub_gens, "generators of the sub-presentation")->required();
  embed->add_option("--max-arity", max_arity)->capture_default_str();

  auto* modfree = check->add_subcommand("module-free", "free module over a suboperad");
  modfree->add_option("presentation", pres_arg)->required();
  modfree->add_option("--sub", sub_gens, "generators of the sub-presentation")->required();
  modfree->add_option("--side", side, "left or right")->capture_default_str();
  modfree->add_option("--max-arity", max_arity)->capture_default_str();

  auto* small = check->add_subcommand("small", "shape decoration surjectivity");
  small->add_option("presentation", pres_arg)->required();
  small->add_option("--max-arity", max_arity)->capture_default_str();

  auto* o2hyp = check->add_subcommand("o2-hypothesis", "right combs normal for the base");
  o2hyp->add_option("presentation", pres_arg)->required();
  o2hyp->add_option("--max-arity", max_arity)->capture_default_str();

  std::string kind_arg = "linear";
  auto* compat = app.add_subcommand("compat", "build a compatible-pair presentation");
  compat->add_option("gamma", pres_arg, "gamma file or preset name")->required();
  compat->add_option("--kind", kind_arg, "linear or total")->capture_default_str();
  compat->add_option("-o,--out", out_path, "write the presentation to a file");

  auto* series = app.add_subcommand("series", "Hilbert series tools");
  series->require_subcommand(1);
  std::string dims_arg, inner_arg, skind = "egf";
  int trunc = 12;

  auto* ktest = series->add_subcommand("koszul-test", "sign test on the inverse series");
  ktest->add_option("--dims", dims_arg)->required();
  ktest->add_option("--kind", skind)->capture_default_str();
  ktest->add_option("--trunc", trunc)->capture_default_str();

  auto* scomp = series->add_subcommand("compose", "compose two series given by dims");
  scomp->add_option("--outer", dims_arg)->required();
  scomp->add_option("--inner", inner_arg)->required();
  scomp->add_option("--kind", skind)->capture_default_str();

  auto* sinv = series->add_subcommand("inverse", "compositional inverse");
  sinv->add_option("--dims", dims_arg)->required();
  sinv->add_option("--kind", skind)->capture_default_str();

  auto* presets_cmd = app.add_subcommand("presets", "preset catalogue");
  presets_cmd->add_subcommand("list", "names with descriptions");

  std::string repro_id;
  auto* repro = app.add_subcommand("repro", "run a whole pipeline");
  repro->add_option("id", repro_id)->required();

  // Let --json / --threads appear after the subcommand as well.
  std::function<void(CLI::App*)> allow_global = [&](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) {
      s->fallthrough();
      allow_global(s);
    }
  };
  allow_global(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*groebner) {
      Presentation p = resolve(pres_arg);
      if (!order_arg.empty()) p.order = builtin_spec(p.sig, order_arg);
      auto r = complete(p, max_arity, g_threads);
      print_groebner(p, r, max_arity);
      return 0;
    }
    if (*dims) {
      Presentation p = resolve(pres_arg);
      auto r = complete(p, max_arity, g_threads);
      auto d = hilbert_dims(r, max_arity);
      if (g_json) {
        std::cout << json({{"presentation", p.name}, {"dims", d}}).dump(2) << "\n";
      } else {
        std::cout << p.name << " dims:";
        for (int x : d) std::cout << " " << x;
        std::cout << "\n";
      }
      return 0;
    }
    if (*normals) {
      Presentation p = resolve(pres_arg);
      auto r = complete(p, std::max(arity, max_arity), g_threads);
      auto nm = normal_monomials(r, arity);
      if (g_json) {
        std::cout << json({{"presentation", p.name},
                           {"arity", arity},
                           {"count", nm.size()},
                           {"monomials", witness_list(p.sig, nm)}})
                         .dump(2)
                  << "\n";
      } else {
        std::cout << nm.size() << " normal monomials of arity " << arity << ":\n";
        for (const auto& t : nm) std::cout << "  " << render_tree(p.sig, t) << "\n";
      }
      return 0;
    }
    if (*dual) {
      Presentation p = resolve(pres_arg);
      emit_presentation(dual_presentation(p), out_path);
      return 0;
    }
    if (*freens) {
      Presentation p = resolve(pres_arg);
      auto r = complete(p, max_arity, g_threads);
      auto rep = check_free_nonsymmetric(r);
      return report_verdict("free-ns " + p.name, rep.holds,
                            {{"witnesses", witness_list(p.sig, rep.witnesses)}});
    }
    if (*embed) {
      Presentation q = resolve(pres_arg);
      Presentation p = sub_presentation(q, sub_gens, q.name + "-sub");
      auto rq = complete(q, max_arity, g_threads);
      auto rp = complete(p, max_arity, g_threads);
      bool ok = check_embedding(p, q, rp, rq);
      return report_verdict("embedding into " + q.name, ok, json::object());
    }
    if (*modfree) {
      if (side != "left" && side != "right")
        throw std::invalid_argument("--side must be left or right");
      Presentation q = resolve(pres_arg);
      Presentation p = sub_presentation(q, sub_gens, q.name + "-sub");
      auto rq = complete(q, max_arity, g_threads);
      auto rep = side == "left" ? check_left_module_free(p, q, rq)
                                : check_right_module_free(p, q, rq);
      return report_verdict(side + " module-free " + q.name, rep.holds,
                            {{"k_dims", rep.k_dims},
                             {"witnesses", witness_list(q.sig, rep.witnesses)}});
    }
    if (*small) {
      Presentation p = resolve(pres_arg);
      auto r = complete(p, max_arity, g_threads);
      auto rep = check_small(p, r, max_arity);
      json extra;
      if (!rep.holds) {
        extra["fail_arity"] = rep.fail_arity;
        extra["fail_shape"] = render_tree(p.sig, rep.fail_shape);
      }
      return report_verdict("small " + p.name, rep.holds, extra);
    }
    if (*o2hyp) {
      Presentation p = resolve(pres_arg);
      auto r = complete(p, max_arity, g_threads);
      return report_verdict("o2-hypothesis " + p.name, check_o2_hypothesis(r), json::object());
    }
    if (*compat) {
      CompatInput in = resolve_gamma(pres_arg);
      Presentation p =
          kind_arg == "total" ? total_compatibility(in) : linear_compatibility(in);
      if (kind_arg != "linear" && kind_arg != "total")
        throw std::invalid_argument("--kind must be linear or total");
      emit_presentation(p, out_path);
      return 0;
    }
    if (*ktest) {
      std::vector<int> d = parse_dims(dims_arg);
      d.resize(static_cast<std::size_t>(std::max<int>(trunc, static_cast<int>(d.size()))), 0);
      auto st = koszul_sign_test(from_dims(d, parse_kind(skind)));
      json extra;
      extra["first_negative"] = st.first_negative;
      int code = report_verdict("koszul sign test", st.passes, extra);
      if (!g_json) print_series("inverse", st.inverse);
      return code;
    }
    if (*scomp) {
      SeriesKind k = parse_kind(skind);
      HilbertSeries f = from_dims(parse_dims(dims_arg), k);
      HilbertSeries g = from_dims(parse_dims(inner_arg), k);
      print_series("composition", compose_series(f, g));
      return 0;
    }
    if (*sinv) {
      HilbertSeries f = from_dims(parse_dims(dims_arg), parse_kind(skind));
      print_series("inverse", comp_inverse(f));
      return 0;
    }
    if (*presets_cmd) {
      if (g_json) {
        json out = json::array();
        for (const auto& n : preset_names())
          out.push_back({{"name", n}, {"info", preset_info(n)}});
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& n : preset_names())
          std::cout << n << ": " << preset_info(n) << "\n";
      }
      return 0;
    }
    if (*repro) return run_repro(repro_id);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
