#pragma once

#include <string>
#include <vector>

#include "opd/groebner.hpp"
#include "opd/series.hpp"

namespace opd {

struct FreenessReport {
  bool holds = false;
  std::vector<Tree> witnesses;  // basis leading terms that are not prime
};

// The quotient is free as a nonsymmetric operad exactly when every leading
// term of the (truncated) Groebner basis is prime.
FreenessReport check_free_nonsymmetric(const GroebnerResult& r);

// Generators of the underlying free nonsymmetric operad: prime normal
// monomials, indexed by arity (slots 0 and 1 stay empty). Throws when the
// freeness criterion fails.
std::vector<std::vector<Tree>> nonsymmetric_generators(const GroebnerResult& r, int max_arity);

// Restriction of q to the named generators: same mode, the order keys and
// generator ranks cut down to the kept generators, and exactly the relations
// all of whose vertices are kept. Throws when a name is missing or a kept
// generator's partner is dropped.
Presentation sub_presentation(const Presentation& q, const std::vector<std::string>& sub_gens,
                              const std::string& name);

// True when rp's basis embeds into rq's basis (generators matched by name)
// and every extra element of rq's basis has a leading term containing at
// least one corolla outside the image of p.
bool check_embedding(const Presentation& p, const Presentation& q, const GroebnerResult& rp,
                     const GroebnerResult& rq);

struct ModuleReport {
  bool holds = false;
  std::vector<Tree> witnesses;  // offending leading terms of extra basis elements
  std::vector<int> k_dims;      // generating space dims per arity, k_dims[0] = 1 (unit)
};

// Extra basis elements (those involving a generator outside p) must have
// leading terms rooted outside p. K = unit plus the normal monomials whose
// root is outside p; then Q = P o K as graded spaces.
ModuleReport check_left_module_free(const Presentation& p, const Presentation& q,
                                    const GroebnerResult& rq);

// Mirror condition: in each extra leading term, the parent of every leaf
// lies outside p. K = unit plus the normal monomials with no vertex whose
// full subtree is decorated entirely inside p; then Q = K o P.
ModuleReport check_right_module_free(const Presentation& p, const Presentation& q,
                                     const GroebnerResult& rq);

// Termwise check that composing the outer series with the inner one
// reproduces q's dimensions, up to the shortest of the three lists.
bool verify_module_decomposition(const std::vector<int>& outer_dims,
                                 const std::vector<int>& inner_dims,
                                 const std::vector<int>& q_dims, SeriesKind kind);

struct SmallReport {
  bool holds = false;
  int fail_arity = -1;  // set on failure
  Tree fail_shape;      // planar shape whose decorations fail to span
};

// For every arity 3..max_arity and every planar (n-1)-vertex shape, the
// normal forms of all generator decorations must span the whole component;
// shuffle mode additionally closes each decoration under all leaf
// permutations. Requires r complete up to max_arity.
SmallReport check_small(const Presentation& p, const GroebnerResult& r, int max_arity);

}  // namespace opd
