#pragma once

#include <vector>

#include "opd/groebner.hpp"
#include "opd/linalg.hpp"
#include "opd/presentation.hpp"

namespace opd {

// Quadratic presentation data: binary generators only, relations of weight 2,
// interreduced so the leading monomials are read off directly.
struct QuadraticData {
  Signature sig;
  OrderSpec spec;
  std::vector<Element> relations;
  std::vector<Tree> lt2;  // leading monomials of the interreduced relations
};

QuadraticData quadratic_data(const Presentation& p);

// Weight-2 monomials that are not in lt2.
std::vector<Tree> lt2_complement(const QuadraticData& q);

// Sign of a weight-2 monomial in the dual pairing: sign of the planar leaf
// permutation, times -1 when the inner vertex hangs off a later input of the
// root (only the first input keeps +1).
int pairing_sign(const Tree& two_vertex_monomial);

// Koszul dual presentation: generators starred, relation space the
// annihilator of the primal relations under the signed pairing, order the
// opposite of the primal order.
Presentation dual_presentation(const Presentation& p);

// bound[0] = 1 for arity 1; bound[n-1] counts monomials of arity n all of
// whose weight-2 divisors lie in lt2. Upper bound for the dual dimensions.
std::vector<int> dual_dim_upper_bound(const QuadraticData& q, int N);

// True when the bound meets the known dual dimensions on the whole range;
// equality certifies the quadratic relations are already a Groebner basis.
bool confirm_quadratic_by_sharp_bound(const QuadraticData& q, const std::vector<int>& dual_dims);

}  // namespace opd
