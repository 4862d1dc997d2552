#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace opd {

enum class Mode { Shuffle, Nonsymmetric };

enum class Symmetry { None, Symmetric, Antisymmetric };

struct Generator {
  std::string name;
  int arity = 2;
  Symmetry symmetry = Symmetry::None;  // only meaningful for binary generators
  int weight_class = 0;                // extra grading used by some orders
  int partner = -1;                    // index swapped with under the transposition; -1 = self
};

struct Signature {
  std::vector<Generator> gens;
  Mode mode = Mode::Shuffle;

  int find(const std::string& name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].name == name) return static_cast<int>(i);
    return -1;
  }
  const Generator& at(int g) const {
    if (g < 0 || g >= static_cast<int>(gens.size()))
      throw std::out_of_range("generator index out of range");
    return gens[static_cast<std::size_t>(g)];
  }
  int size() const { return static_cast<int>(gens.size()); }
};

inline std::string mode_name(Mode m) {
  return m == Mode::Shuffle ? "shuffle" : "nonsymmetric";
}

inline std::string symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Antisymmetric: return "antisymmetric";
    default: return "none";
  }
}

inline Symmetry symmetry_from_name(const std::string& s) {
  if (s == "symmetric") return Symmetry::Symmetric;
  if (s == "antisymmetric") return Symmetry::Antisymmetric;
  if (s == "none" || s.empty()) return Symmetry::None;
  throw std::invalid_argument("unknown symmetry: " + s);
}

}  // namespace opd
