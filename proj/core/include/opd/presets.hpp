#pragma once

#include <array>
#include <string>
#include <vector>

#include "opd/compat.hpp"
#include "opd/presentation.hpp"

namespace opd {

std::vector<std::string> preset_names();
Presentation preset(const std::string& name);
std::string preset_info(const std::string& name);

// Gamma data for the compatibility constructions: lie, com, as, nilpotent.
CompatInput preset_gamma(const std::string& name);

// Symmetric-notation input for the shuffle converter. A generator with no
// symmetry splits into an ordered pair of shuffle corollas (the twin takes
// its arguments swapped); (anti)symmetric generators keep one corolla.
struct SymGenerator {
  std::string name;
  Symmetry symmetry = Symmetry::None;
  std::string twin;  // required when symmetry is none
  int weight_class = 0;
};

// coeff * outer(inner(args[0], args[1]), args[2]) when inner_first, else
// coeff * outer(args[2], inner(args[0], args[1])); args permute 1, 2, 3.
struct SymTerm {
  Rational coeff = Rational(1);
  int outer = 0;
  int inner = 0;
  std::array<int, 3> args{1, 2, 3};
  bool inner_first = true;
};

struct SymPresentation {
  std::string name;
  std::vector<SymGenerator> gens;
  std::vector<std::vector<SymTerm>> relations;
};

// Shuffle presentation whose relation space is the span of all leaf
// permutations of the given relations; rows come back reduced against the
// arity-3 monomial basis. Order defaults to pathlex_DK.
Presentation shuffleize(const SymPresentation& sp);

}  // namespace opd
