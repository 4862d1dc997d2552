#include "opd/element.hpp"

#include <cctype>
#include <stdexcept>

namespace opd {

Element el_mono(Tree t, Rational c) {
  Element e;
  if (c != 0) e.terms.emplace(std::move(t), std::move(c));
  return e;
}

void add_term(Element& e, const Tree& t, const Rational& c) {
  if (c == 0) return;
  auto it = e.terms.find(t);
  if (it == e.terms.end()) {
    e.terms.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second == 0) e.terms.erase(it);
}

Element combine(const Element& a, const Element& b, const Rational& ca, const Rational& cb) {
  if (!a.is_zero() && !b.is_zero() && a.arity() != b.arity())
    throw std::invalid_argument("combine: arity mismatch");
  Element out;
  if (ca != 0)
    for (const auto& [t, c] : a.terms) add_term(out, t, ca * c);
  if (cb != 0)
    for (const auto& [t, c] : b.terms) add_term(out, t, cb * c);
  return out;
}

Element scale(Element e, const Rational& c) {
  if (c == 0) return Element{};
  for (auto& [t, coeff] : e.terms) coeff *= c;
  return e;
}

std::pair<Tree, Rational> leading_term(const OrderSpec& spec, const Element& e) {
  if (e.is_zero()) throw std::invalid_argument("leading_term of zero element");
  auto best = e.terms.begin();
  for (auto it = std::next(e.terms.begin()); it != e.terms.end(); ++it)
    if (less(spec, best->first, it->first)) best = it;
  return {best->first, best->second};
}

Element make_monic(const OrderSpec& spec, Element e) {
  if (e.is_zero()) return e;
  Rational lc = leading_term(spec, e).second;
  for (auto& [t, c] : e.terms) c /= lc;
  return e;
}

int cmp_element_struct(const Element& a, const Element& b) {
  auto ia = a.terms.begin();
  auto ib = b.terms.begin();
  for (; ia != a.terms.end() && ib != b.terms.end(); ++ia, ++ib) {
    int c = cmp_struct(ia->first, ib->first);
    if (c != 0) return c;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia != a.terms.end()) return 1;
  if (ib != b.terms.end()) return -1;
  return 0;
}

std::string render_element(const Signature& sig, const Element& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : e.terms) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "- ";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    out += render_rational(a) + "*" + render_tree(sig, t);
    first = false;
  }
  return out;
}

Element parse_element(const Signature& sig, const std::string& text) {
  Element out;
  std::size_t pos = 0;
  auto skip_ws = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty element text");
  if (text.compare(pos, 1, "0") == 0 && pos + 1 == text.size()) return out;
  bool first = true;
  int expected_arity = -1;
  while (pos < text.size()) {
    skip_ws();
    if (pos == text.size()) break;
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("expected + or - between terms");
    }
    // Optional coefficient: digits (with optional /den) followed by '*'.
    Rational coeff = 1;
    std::size_t save = pos;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t end = pos;
      while (end < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/'))
        ++end;
      std::size_t after = end;
      while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
      if (after < text.size() && text[after] == '*') {
        coeff = parse_rational(text.substr(pos, end - pos));
        pos = after + 1;
        skip_ws();
      } else {
        pos = save;  // bare monomial starting with a digit is not valid here
        throw std::invalid_argument("coefficient must be followed by *");
      }
    }
    // Monomial: read a balanced name(...) chunk.
    std::size_t start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == '+' || c == '-') && pos > start) break;
      ++pos;
    }
    std::string mono = text.substr(start, pos - start);
    while (!mono.empty() && std::isspace(static_cast<unsigned char>(mono.back()))) mono.pop_back();
    if (mono.empty()) throw std::invalid_argument("missing monomial");
    Tree t = parse_tree(sig, mono);
    int ar = tree_arity(t);
    if (expected_arity < 0)
      expected_arity = ar;
    else if (ar != expected_arity)
      throw std::invalid_argument("element terms must share one arity");
    add_term(out, t, sign * coeff);
    first = false;
  }
  return out;
}

}  // namespace opd
