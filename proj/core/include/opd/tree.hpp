#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opd/signature.hpp"

namespace opd {

// Tree monomial. Internal vertices carry a generator index, leaves carry a
// 1-based label. Canonical form: children of every vertex sorted by the
// smallest leaf label in their subtree (for nonsymmetric monomials this makes
// every subtree's leaf set an interval read left to right).
struct Tree {
  int gen = -1;  // -1 marks a leaf
  int leaf = 0;
  std::vector<Tree> kids;

  bool is_leaf() const { return gen < 0; }

  static Tree make_leaf(int label) {
    Tree t;
    t.leaf = label;
    return t;
  }
  static Tree node(int gen, std::vector<Tree> kids) {
    Tree t;
    t.gen = gen;
    t.leaf = 0;
    t.kids = std::move(kids);
    return t;
  }
};

// Structural comparison, unrelated to any monomial order; used as container key.
int cmp_struct(const Tree& a, const Tree& b);
inline bool operator==(const Tree& a, const Tree& b) { return cmp_struct(a, b) == 0; }
inline bool operator!=(const Tree& a, const Tree& b) { return cmp_struct(a, b) != 0; }
inline bool operator<(const Tree& a, const Tree& b) { return cmp_struct(a, b) < 0; }

int tree_arity(const Tree& t);   // number of leaves
int tree_weight(const Tree& t);  // number of internal vertices
int min_leaf(const Tree& t);

// Sorts children at every vertex by minimal leaf; leaf labels untouched.
Tree canonicalize(Tree t);

// Throws std::invalid_argument unless t is a valid canonical monomial over sig:
// correct vertex arities, leaf labels a permutation of 1..n, children sorted by
// min leaf, and in nonsymmetric mode every subtree's leaves an interval.
void validate_tree(const Signature& sig, const Tree& t);

struct PathData {
  // words[i] = generator indices on the root-to-leaf path of the leaf
  // LABELED i+1, root first; perm = leaf labels in planar left-to-right order.
  std::vector<std::vector<int>> words;
  std::vector<int> perm;
};
PathData path_sequence(const Tree& t);

int perm_sign(const std::vector<int>& perm);

// Relabel leaves: label i becomes sigma[i-1]. Result is NOT re-canonicalized.
Tree relabel_leaves(const Tree& t, const std::vector<int>& sigma);

// Operadic composition. blocks[i] lists the global labels fed into leaf i+1 of
// outer (sorted ascending, sizes matching the inner arities, disjoint, covering
// 1..n; shuffle mode requires increasing minima across blocks, nonsymmetric
// mode consecutive intervals).
Tree compose(const Signature& sig, const Tree& outer, const std::vector<Tree>& inners,
             const std::vector<std::vector<int>>& blocks);

// All canonical monomials of the given arity, memoized. Requires every
// generator arity >= 2 (a unary generator makes the set infinite).
const std::vector<Tree>& enumerate_monomials(const Signature& sig, int arity);

// Canonicalize a tree whose children may be misordered and whose corollas may
// need symmetry moves: an out-of-order swap under a binary generator is
// resolved through its symmetry (symmetric: keep, antisymmetric: flip sign,
// partner pair: switch corolla to the partner). Returns {sign, tree}. Throws
// if a swap is needed under a symmetry-less self-partnered generator.
std::pair<int, Tree> symmetric_canonicalize(const Signature& sig, Tree t);

// Leaf relabeling by sigma followed by symmetric_canonicalize.
std::pair<int, Tree> apply_permutation(const Signature& sig, const Tree& t,
                                       const std::vector<int>& sigma);

std::string render_tree(const Signature& sig, const Tree& t);
Tree parse_tree(const Signature& sig, const std::string& text);

}  // namespace opd
