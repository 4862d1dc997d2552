#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "opd/tree.hpp"

namespace opd {

enum class WordOrder { Lex, DegLex };

// Order keys, tried after the mandatory arity comparison. Each compares two
// monomials of equal arity and returns -1/0/1.
struct KeyCorolla {
  std::vector<char> in_class;  // per generator: counted or not
  bool more_is_smaller = true;
};
struct KeyPathWords {
  WordOrder word_order = WordOrder::DegLex;
  bool reversed = false;  // flip the verdict of this key
};
struct KeyPermLex {
  bool reversed = false;
};
struct OrderSpec;
struct KeyProjected {
  std::vector<int> gen_map;  // generator index -> image index in the inner signature
  std::shared_ptr<const OrderSpec> inner;
  bool reversed = false;
};

using OrderKey = std::variant<KeyCorolla, KeyPathWords, KeyPermLex, KeyProjected>;

// Monomial order: arity ascending first (never reversed), then the key chain;
// `opposite` flips the combined verdict of the keys at equal arity. Letters of
// path words compare through gen_rank (higher rank = greater letter).
struct OrderSpec {
  std::vector<OrderKey> keys;
  std::vector<int> gen_rank;
  bool opposite = false;
  std::string label = "custom";
};

int compare(const OrderSpec& spec, const Tree& a, const Tree& b);
inline bool less(const OrderSpec& spec, const Tree& a, const Tree& b) {
  return compare(spec, a, b) < 0;
}

// Builtins: pathlex_DK, nonsymfree, magprelie, prelie_module, o2, plus
// opposite(<name>) recursively. The o2 builtin reconstructs the two-copy
// structure from <stem>1/<stem>2 generator names. Throws on unknown names.
OrderSpec builtin_spec(const Signature& sig, const std::string& name);

OrderSpec opposite_of(OrderSpec spec);

std::vector<int> default_ranks(const Signature& sig);

}  // namespace opd
