#pragma once

#include <vector>

#include "opd/tree.hpp"

namespace opd {

// Internal vertices are addressed by preorder id: root = 0, then depth-first
// left to right, leaves skipped. A region is a sorted id vector that must be
// connected and rooted (one topmost vertex, every other vertex's parent inside).
using VertexSet = std::vector<int>;

bool valid_region(const Tree& host, const VertexSet& region);

// The divisor supported on a region: hanging subtrees become leaves labeled by
// the rank of their minimal host leaf. Throws on an invalid region.
Tree divisor_at(const Tree& host, const VertexSet& region);

// All regions whose divisor equals the (canonical) pattern, sorted lexicographically.
std::vector<VertexSet> find_embeddings(const Tree& host, const Tree& pattern);

bool divides(const Tree& host, const Tree& pattern);

// All connected rooted regions of the host, sorted; optionally only those of a
// fixed vertex count.
std::vector<VertexSet> connected_regions(const Tree& host, int weight = -1);

// Prime: no internal vertex other than the root carries a subtree whose leaf
// labels form an interval of consecutive integers.
bool is_prime(const Tree& t);

}  // namespace opd
