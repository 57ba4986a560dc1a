#include "ogw/boundary.hpp"

#include <algorithm>

namespace ogw {

namespace {

std::int32_t max_node_index(const LabeledTree& tree) {
  std::int32_t top = 0;
  for (const ModuliSpec& s : tree.vertices) top = std::max(top, max_node_index(s));
  return top;
}

}  // namespace

std::vector<BoundaryComponent> boundary_components(const LabeledTree& tree, std::int32_t r) {
  validate(tree);
  require(r > max_node_index(tree), "node index r must exceed every node index in the tree");
  std::vector<BoundaryComponent> out;
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    for (SplitPair& p : split_boundary(tree.vertices[v], r)) {
      BoundaryComponent c;
      c.parent = tree;
      c.vertex = static_cast<int>(v);
      c.left = std::move(p.left);
      c.right = std::move(p.right);
      c.edge_index = r;
      c.tag = p.kind == SplitKind::sturdy_sturdy ? BoundaryTag::sturdy : BoundaryTag::wobbly;
      out.push_back(std::move(c));
    }
  }
  return out;
}

LabeledTree boundary_component_as_tree(const BoundaryComponent& c) {
  require(c.tag == BoundaryTag::sturdy, "only sturdy components define resolution trees");
  std::vector<ModuliSpec> verts;
  verts.reserve(c.parent.vertices.size() + 1);
  for (std::size_t v = 0; v < c.parent.vertices.size(); ++v) {
    if (static_cast<int>(v) == c.vertex) {
      verts.push_back(c.left);
      verts.push_back(c.right);
    } else {
      verts.push_back(c.parent.vertices[v]);
    }
  }
  LabeledTree t = make_labeled_tree(std::move(verts));
  internal_check(contract_edge(t, c.edge_index) == c.parent,
                 "boundary tree does not contract back onto its parent");
  return t;
}

std::vector<LabeledTree> sturdy_boundary_as_trees(const LabeledTree& tree, std::int32_t r) {
  std::vector<LabeledTree> out;
  for (const BoundaryComponent& c : boundary_components(tree, r))
    if (c.tag == BoundaryTag::sturdy) out.push_back(boundary_component_as_tree(c));
  return out;
}

BoundaryComponent wobbly_involution(const BoundaryComponent& c) {
  require(c.tag == BoundaryTag::wobbly, "involution is defined on wobbly components only");
  BoundaryComponent out = c;
  ModuliSpec& wob = !is_stable(out.left.pre) ? out.left : out.right;
  internal_check(wob.sigma.size() >= 2, "wobbly side must carry at least two sigma labels");

  // The swapped pair consists of the two smallest node_out indices; locate
  // them in the stored order, which may already be transposed.
  std::vector<Label> sorted = wob.sigma;
  std::sort(sorted.begin(), sorted.end());
  const auto pos = [&wob](const Label& x) {
    return std::find(wob.sigma.begin(), wob.sigma.end(), x) - wob.sigma.begin();
  };
  const auto i = pos(sorted[0]);
  const auto j = pos(sorted[1]);
  std::swap(wob.sigma[i], wob.sigma[j]);
  return out;
}

}  // namespace ogw
