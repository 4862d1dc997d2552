#pragma once

#include <array>
#include <vector>

#include <nlohmann/json.hpp>

#include "opd/groebner.hpp"
#include "opd/presentation.hpp"

namespace opd {

// Compatible-structure input: a base signature of s binary generators and, for
// each of t relations, three s x s coefficient blocks gamma[k][l-1][i][j]
// attached to the decorated shapes
//   l=1: a_j(a_i(x1,x2),x3)   l=2: a_j(x1,a_i(x2,x3))   l=3: a_j(a_i(x1,x3),x2)
// (outer a_j, inner a_i; l=3 must vanish in nonsymmetric mode).
struct CompatInput {
  Signature base;
  std::vector<std::array<std::vector<std::vector<Rational>>, 3>> gamma;
};

CompatInput compat_from_json(const nlohmann::json& j);
nlohmann::json compat_to_json(const CompatInput& in);
CompatInput load_compat_file(const std::string& path);

// Validates shapes, the nonsymmetric l=3 constraint, and linear independence
// of the base relations. Throws on failure.
void validate_compat(const CompatInput& in);

// Base relations of copy c (1 or 2) of the generators.
std::vector<Element> copy_relations(const CompatInput& in, int c);

// The two-copy signature: first-copy generators <name>1 with weight class 1,
// then second-copy generators <name>2 with weight class 0.
Signature two_copy_signature(const CompatInput& in);

// Linearly compatible pair: both copies of the base relations plus the mixed
// linearization of each base relation. Default order: o2.
Presentation linear_compatibility(const CompatInput& in);

// Totally compatible pair: both copies, the mixed identifications, the
// gamma family decorated outer-first, and the redundant outer-second family
// (interreduction removes it). Default order: opposite(o2).
Presentation total_compatibility(const CompatInput& in);

OrderSpec o2_order(const Signature& two_copy_sig);

// Every monomial a_j(x1, a_i(x2,x3)) is normal for the completed base.
bool check_o2_hypothesis(const GroebnerResult& base);

}  // namespace opd
