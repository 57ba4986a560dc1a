#ifndef OGW_BOUNDARY_HPP
#define OGW_BOUNDARY_HPP

#include <vector>

#include "ogw/tree.hpp"

namespace ogw {

enum class BoundaryTag { sturdy, wobbly };

// One boundary component of a resolution level: vertex `vertex` of `parent`
// splits into (left, right) joined by the new node index `edge_index`. The
// sigma sequences of left/right are ordered; the wobbly involution transposes
// the wobbly side's order and this is the one place where sigma order carries
// information.
struct BoundaryComponent {
  LabeledTree parent;
  int vertex{0};
  ModuliSpec left;
  ModuliSpec right;
  std::int32_t edge_index{1};
  BoundaryTag tag{BoundaryTag::sturdy};

  friend bool operator==(const BoundaryComponent&, const BoundaryComponent&) = default;
};

// Vertex-wise boundary splitting (Leibniz rule): one component per vertex and
// per split of its specification at the fresh index r. r must exceed every
// node index in the tree.
std::vector<BoundaryComponent> boundary_components(const LabeledTree& tree, std::int32_t r);

// The sturdy components as trees at the next resolution level: vertex v is
// replaced by the two split vertices joined by edge r. Contracting r recovers
// the parent; conversely every tree of the enlarged edge set contracting onto
// `tree` arises exactly once.
std::vector<LabeledTree> sturdy_boundary_as_trees(const LabeledTree& tree, std::int32_t r);

LabeledTree boundary_component_as_tree(const BoundaryComponent& c);

// Swaps the first two superfluous labels of the wobbly side (first in the
// index order on node_out labels). A fixed-point free involution; erasing the
// sigma order makes input and output equal.
BoundaryComponent wobbly_involution(const BoundaryComponent& c);

}  // namespace ogw

#endif
