#ifndef OGW_TREE_HPP
#define OGW_TREE_HPP

#include <map>
#include <set>
#include <vector>

#include "ogw/moduli.hpp"

namespace ogw {

// An oriented tree with edge set rho and vertices carrying sturdy moduli
// specifications. Edge j runs from the vertex holding *'_j (its tail) to the
// vertex holding *''_j (its head); head/tail maps are kept explicit for the
// JSON format but are always consistent with the vertex labels.
//
// Vertices are stored in the canonical recursive order: split at the maximal
// edge, tail-side component first, then head-side, recursively. Two trees are
// isomorphic iff their canonical forms compare equal, so operator== decides
// isomorphism.
struct LabeledTree {
  std::vector<std::int32_t> edges;  // sorted ascending
  std::vector<ModuliSpec> vertices;
  std::map<std::int32_t, int> head;  // edge -> vertex index
  std::map<std::int32_t, int> tail;

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

// sigma-filtered view of a tree: each vertex keeps only the superfluous
// labels *'_j with j in S. Vertices need not satisfy the LabeledTree label
// conditions, so this is a separate type.
struct FilteredTreeView {
  std::vector<std::int32_t> edges;
  std::vector<ModuliSpec> vertices;
  std::map<std::int32_t, int> head;
  std::map<std::int32_t, int> tail;

  friend bool operator==(const FilteredTreeView&, const FilteredTreeView&) = default;
};

// Builds a tree from vertex specifications alone: edges and head/tail maps are
// derived from node label membership. Validates tree-ness, per-vertex
// sturdiness and canonicalizes the vertex order.
LabeledTree make_labeled_tree(std::vector<ModuliSpec> vertices);

void validate(const LabeledTree& tree);

// The ambient specification the tree resolves: label unions minus the node
// pairs 'rho', degree sum.
ModuliSpec base_of(const LabeledTree& tree);

// All isomorphism types of (base, rho)-labeled trees with sturdy vertices,
// computed by recursion on the maximal edge. `base` must be basic and its
// labels must not collide with rho. Each type is produced exactly once; the
// output order is deterministic.
std::vector<LabeledTree> enumerate_trees(const PreModuliSpec& base,
                                         const std::vector<std::int32_t>& rho);

// floor((|k| + 2|l| + 3 beta - 3) / 2). enumerate_trees(base, rho) is empty
// whenever |rho| exceeds this (per-vertex stability summed over the vertices).
std::int64_t max_resolution_depth(const PreModuliSpec& base);

// Removes edge e and merges its endpoints: the merged vertex carries the
// summed degree and the label unions minus the node pair of e. The result is
// returned in canonical form.
LabeledTree contract_edge(const LabeledTree& tree, std::int32_t e);

// [tree = T(0), T(1), ..., T(r)] where T(j) contracts edge j of T(j-1).
// Requires edges = {1, ..., r}.
std::vector<LabeledTree> smoothing_sequence(const LabeledTree& tree);

// Relabels edge j as perm[j] (and the node labels *'_j, *''_j accordingly),
// then restores canonical form. perm must be a bijection of the edge set.
LabeledTree sym_act(const std::map<std::int32_t, std::int32_t>& perm,
                    const LabeledTree& tree);

// General edge relabeling along an injective map into fresh positive indices
// (the image may differ from the edge set). sym_act is the special case of a
// bijection onto the same set.
LabeledTree relabel_edges(const std::map<std::int32_t, std::int32_t>& map,
                          const LabeledTree& tree);

// Odd-even: every even-degree vertex has sigma empty and every odd-degree
// vertex has k empty. Sorted additionally requires edges {1..a} to span a
// connected subgraph for every a and each vertex's sigma indices to be a
// contiguous interval; requires edges = {1, ..., r}.
bool is_odd_even(const LabeledTree& tree);
bool is_sorted_odd_even(const LabeledTree& tree);

// The sorted structure transported to smoothing steps, whose edge sets are
// suffixes {a, ..., r}: every initial edge segment spans a connected
// subgraph, each vertex's sigma indices form a contiguous interval, and the
// head of the minimal edge carries no sigma. The degree-parity conditions of
// is_odd_even cannot survive contraction (the merged vertex pools degrees
// and orienting labels), but this structure does; it is what the smoothing
// closure of sorted odd-even trees asserts.
bool is_sorted_step(const LabeledTree& tree);

// Number of vertices with odd degree.
int odd_vertex_count(const LabeledTree& tree);

// Some tau with is_sorted_odd_even(sym_act(tau, tree)). Backtracking search
// over which edge receives the next label, pruning on connectivity and sigma
// contiguity. Input must be odd-even with edges = {1, ..., r}; a solution
// always exists for such trees and this is asserted.
std::map<std::int32_t, std::int32_t> sorting_permutation(const LabeledTree& tree);

FilteredTreeView filter_view(const LabeledTree& tree, const std::set<std::int32_t>& S);

}  // namespace ogw

#endif
