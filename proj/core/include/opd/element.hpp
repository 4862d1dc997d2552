#pragma once

#include <map>
#include <string>
#include <utility>

#include "opd/ordering.hpp"
#include "opd/rational.hpp"
#include "opd/tree.hpp"

namespace opd {

// Linear combination of tree monomials of one arity. Invariants: no zero
// coefficients, all monomials share the arity (0 when empty).
struct Element {
  std::map<Tree, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  int arity() const { return terms.empty() ? 0 : tree_arity(terms.begin()->first); }
};

Element el_mono(Tree t, Rational c = Rational(1));

// Adds c * t, erasing the term if the coefficient cancels.
void add_term(Element& e, const Tree& t, const Rational& c);

// ca * a + cb * b; arities must agree when both are nonzero.
Element combine(const Element& a, const Element& b, const Rational& ca, const Rational& cb);

Element scale(Element e, const Rational& c);

// Throws on the zero element.
std::pair<Tree, Rational> leading_term(const OrderSpec& spec, const Element& e);

Element make_monic(const OrderSpec& spec, Element e);

int cmp_element_struct(const Element& a, const Element& b);

std::string render_element(const Signature& sig, const Element& e);
Element parse_element(const Signature& sig, const std::string& text);

}  // namespace opd
