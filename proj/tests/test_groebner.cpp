#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "opd/compat.hpp"
#include "opd/embedding.hpp"
#include "opd/groebner.hpp"
#include "opd/linalg.hpp"
#include "opd/presets.hpp"
#include "opd/rewriting.hpp"

using namespace opd;

namespace {

std::set<std::string> lt_names(const GroebnerResult& r) {
  std::set<std::string> out;
  for (const Tree& t : r.leading_terms()) out.insert(render_tree(r.sig, t));
  return out;
}

// Independent of completion: dimension as the corank of the span of all
// single-substitution images of the relations inside one arity component.
int oracle_dim(const Presentation& p, int n) {
  const auto& basis = enumerate_monomials(p.sig, n);
  std::map<Tree, int> col;
  int k = 0;
  for (const Tree& t : basis) col[t] = k++;
  QMatrix rows;
  for (const Tree& host : basis)
    for (const auto& region : connected_regions(host, 2))
      for (const auto& rel : p.relations) {
        Element img = substitute(host, region, rel);
        if (img.is_zero()) continue;
        QRow row(basis.size(), Rational(0));
        for (const auto& [t, c] : img.terms) row[static_cast<std::size_t>(col.at(t))] = c;
        rows.push_back(std::move(row));
      }
  return static_cast<int>(basis.size()) - rank(rows);
}

}  // namespace

TEST_CASE("preset dimension tables") {
  auto dims = [](const char* name, int N) { return hilbert_dims(complete(preset(name), N), N); };
  CHECK(dims("lie", 6) == std::vector<int>{1, 1, 2, 6, 24, 120});
  CHECK(dims("com", 6) == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(dims("prelie", 6) == std::vector<int>{1, 2, 9, 64, 625, 7776});
  CHECK(dims("perm", 6) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(dims("lie2", 6) == std::vector<int>{1, 2, 9, 64, 625, 7776});
  CHECK(dims("2com", 6) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(dims("as", 6) == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(dims("dend", 6) == std::vector<int>{1, 2, 5, 14, 42, 132});
  CHECK(dims("dend-ps", 6) == std::vector<int>{1, 2, 5, 14, 42, 132});
  CHECK(dims("dias", 6) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(dims("mag", 5) == std::vector<int>{1, 1, 3, 15, 105});
  CHECK(dims("nilpotent", 5) == std::vector<int>{1, 1, 0, 0, 0});
  CHECK(dims("n2", 5) == std::vector<int>{1, 2, 3, 0, 0});
  CHECK(dims("com2", 5) == std::vector<int>{1, 2, 6, 24, 120});
  CHECK(dims("as2", 5) == std::vector<int>{1, 2, 5, 14, 42});
}

TEST_CASE("quadratic flags and basis sizes") {
  auto shape = [](const char* name, int N) {
    GroebnerResult r = complete(preset(name), N);
    return std::pair<bool, std::size_t>(r.is_quadratic, r.basis.size());
  };
  CHECK(shape("lie", 5) == std::pair<bool, std::size_t>(true, 1));
  CHECK(shape("com", 5) == std::pair<bool, std::size_t>(true, 2));
  CHECK(shape("prelie", 5) == std::pair<bool, std::size_t>(true, 3));
  CHECK(shape("perm", 5) == std::pair<bool, std::size_t>(true, 9));
  CHECK(shape("lie2", 5) == std::pair<bool, std::size_t>(true, 3));
  CHECK(shape("2com", 5) == std::pair<bool, std::size_t>(true, 9));
  CHECK(shape("as", 5) == std::pair<bool, std::size_t>(true, 1));
  CHECK(shape("dend", 5) == std::pair<bool, std::size_t>(true, 3));
  CHECK(shape("dend-ps", 5) == std::pair<bool, std::size_t>(true, 3));
  CHECK(shape("dias", 5) == std::pair<bool, std::size_t>(true, 5));
  CHECK(shape("com2", 5) == std::pair<bool, std::size_t>(true, 6));
  CHECK(shape("as2", 5) == std::pair<bool, std::size_t>(true, 3));
  // The nilpotent pair is the stock non-quadratic case: every weight-2
  // monomial is eventually a leading term.
  GroebnerResult n2 = complete(preset("n2"), 5);
  CHECK_FALSE(n2.is_quadratic);
  CHECK(n2.basis.size() == 12);
}

TEST_CASE("leading term sets match the stated monomials") {
  CHECK(lt_names(complete(preset("lie"), 4)) == std::set<std::string>{"b(b(1,3),2)"});
  CHECK(lt_names(complete(preset("prelie"), 4)) ==
        std::set<std::string>{"alpha(alpha(1,3),2)", "alpha(beta(1,3),2)", "beta(beta(1,3),2)"});
  CHECK(lt_names(complete(preset("lie2"), 4)) ==
        std::set<std::string>{"b1(b1(1,3),2)", "b1(b2(1,3),2)", "b2(b2(1,3),2)"});
  CHECK(lt_names(complete(preset("dend"), 4)) ==
        std::set<std::string>{"star(star(1,2),3)", "succ(star(1,2),3)", "succ(succ(1,2),3)"});
  CHECK(lt_names(complete(preset("com"), 4)) ==
        std::set<std::string>{"b*(b*(1,2),3)", "b*(b*(1,3),2)"});
}

TEST_CASE("normal monomials complement the leading terms") {
  GroebnerResult lie = complete(preset("lie"), 4);
  auto n3 = normal_monomials(lie, 3);
  REQUIRE(n3.size() == 2);
  CHECK(render_tree(lie.sig, n3[0]) != "b(b(1,3),2)");
  CHECK(render_tree(lie.sig, n3[1]) != "b(b(1,3),2)");
  GroebnerResult com = complete(preset("com"), 4);
  auto c3 = normal_monomials(com, 3);
  REQUIRE(c3.size() == 1);
  CHECK(render_tree(com.sig, c3[0]) == "b*(1,b*(2,3))");
}

TEST_CASE("certify_by_dimensions accepts the true table and rejects a wrong one") {
  GroebnerResult lie = complete(preset("lie"), 6);
  CHECK(certify_by_dimensions(lie, {1, 1, 2, 6, 24, 120}));
  CHECK_FALSE(certify_by_dimensions(lie, {1, 1, 2, 6, 24, 121}));
}

TEST_CASE("dimensions agree with the substitution-span oracle") {
  CHECK(oracle_dim(preset("prelie"), 3) == 9);
  CHECK(oracle_dim(preset("prelie"), 4) == 64);
  CHECK(oracle_dim(preset("lie"), 3) == 2);
  CHECK(oracle_dim(preset("lie"), 4) == 6);
  CHECK(oracle_dim(preset("com"), 3) == 1);
  CHECK(oracle_dim(preset("com"), 4) == 1);
  CHECK(oracle_dim(preset("dend-ps"), 3) == 5);
  CHECK(oracle_dim(preset("dend-ps"), 4) == 14);
  CHECK(oracle_dim(preset("n2"), 3) == 3);
  CHECK(oracle_dim(preset("n2"), 4) == 0);
  CHECK(oracle_dim(linear_compatibility(preset_gamma("as")), 3) == 5);
  CHECK(oracle_dim(linear_compatibility(preset_gamma("as")), 4) == 14);
}

TEST_CASE("completion is deterministic across thread counts") {
  GroebnerResult a = complete(preset("prelie"), 5, 1);
  GroebnerResult b = complete(preset("prelie"), 5, 4);
  REQUIRE(a.basis.size() == b.basis.size());
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    CHECK(cmp_element_struct(a.basis[i], b.basis[i]) == 0);
}

TEST_CASE("truncation bound is recorded") {
  GroebnerResult r = complete(preset("lie"), 5);
  CHECK(r.complete_up_to == 5);
  CHECK(hilbert_dims(r, 5).size() == 5);
}
