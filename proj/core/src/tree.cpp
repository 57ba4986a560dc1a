#include "ogw/tree.hpp"

#include <algorithm>
#include <numeric>

namespace ogw {

namespace {

// Vertices of the canonical recursive order: split at the maximal edge, the
// tail-side component comes first, then the head-side, recursively. This
// reproduces the order the enumeration recursion produces, so trees built by
// other routes (contraction, relabeling, JSON input) land in the same form.
void order_recurse(const std::vector<std::int32_t>& edge_subset,
                   const std::vector<int>& vertex_subset,
                   const std::map<std::int32_t, int>& head,
                   const std::map<std::int32_t, int>& tail, std::vector<int>& out) {
  if (edge_subset.empty()) {
    internal_check(vertex_subset.size() == 1, "component without edges must be a single vertex");
    out.push_back(vertex_subset.front());
    return;
  }
  const std::int32_t r = edge_subset.back();
  std::vector<std::int32_t> rest(edge_subset.begin(), edge_subset.end() - 1);

  // Flood from the tail of r through the remaining edges.
  std::set<int> tail_side{tail.at(r)};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::int32_t e : rest) {
      const bool h = tail_side.count(head.at(e)) != 0;
      const bool t = tail_side.count(tail.at(e)) != 0;
      if (h != t) {
        tail_side.insert(h ? tail.at(e) : head.at(e));
        grew = true;
      }
    }
  }

  std::vector<std::int32_t> edges1, edges2;
  for (std::int32_t e : rest)
    (tail_side.count(tail.at(e)) ? edges1 : edges2).push_back(e);
  std::vector<int> verts1, verts2;
  for (int v : vertex_subset) (tail_side.count(v) ? verts1 : verts2).push_back(v);

  order_recurse(edges1, verts1, head, tail, out);
  order_recurse(edges2, verts2, head, tail, out);
}

std::vector<int> canonical_vertex_order(std::size_t n_vertices,
                                        const std::vector<std::int32_t>& edges,
                                        const std::map<std::int32_t, int>& head,
                                        const std::map<std::int32_t, int>& tail) {
  std::vector<int> all(n_vertices);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> out;
  out.reserve(n_vertices);
  order_recurse(edges, all, head, tail, out);
  return out;
}

LabeledTree assemble(std::vector<ModuliSpec> vertices, std::vector<std::int32_t> edges,
                     std::map<std::int32_t, int> head, std::map<std::int32_t, int> tail) {
  const std::vector<int> order = canonical_vertex_order(vertices.size(), edges, head, tail);
  std::vector<int> position(vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);

  LabeledTree t;
  t.edges = std::move(edges);
  t.vertices.reserve(vertices.size());
  for (int v : order) t.vertices.push_back(std::move(vertices[v]));
  for (const auto& [e, v] : head) t.head[e] = position[v];
  for (const auto& [e, v] : tail) t.tail[e] = position[v];
  return t;
}

LabeledTree build_tree(std::vector<ModuliSpec> vertices,
                       const std::vector<std::int32_t>* declared_edges) {
  require(!vertices.empty(), "tree must have at least one vertex");
  for (const ModuliSpec& s : vertices) {
    validate(s);
    require(is_stable(s.pre), "every tree vertex must be sturdy");
  }

  std::map<std::int32_t, int> in_at, out_at;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (const Label& x : vertices[v].pre.k)
      if (x.kind == label_kind::node_in) {
        require(!in_at.count(x.index), "node_in label appears on two vertices");
        in_at[x.index] = static_cast<int>(v);
      }
    for (const Label& x : vertices[v].sigma) {
      require(!out_at.count(x.index), "node_out label appears on two vertices");
      out_at[x.index] = static_cast<int>(v);
    }
  }

  // An index is an edge when it occurs as both node halves; unmatched halves
  // belong to the ambient specification.
  std::vector<std::int32_t> edges;
  for (const auto& [j, v] : in_at)
    if (out_at.count(j)) edges.push_back(j);
  if (declared_edges) {
    std::vector<std::int32_t> want = *declared_edges;
    std::sort(want.begin(), want.end());
    require(want == edges, "declared edge set does not match the vertex node labels");
  }
  require(vertices.size() == edges.size() + 1, "vertex count must be edge count + 1");

  std::map<std::int32_t, int> head, tail;
  for (std::int32_t e : edges) {
    head[e] = in_at[e];
    tail[e] = out_at[e];
    require(head[e] != tail[e], "edge endpoints must be distinct vertices");
  }

  // Connectivity; acyclicity then follows from the vertex/edge count.
  if (!vertices.empty()) {
    std::set<int> seen{0};
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::int32_t e : edges) {
        const bool h = seen.count(head[e]) != 0;
        const bool t = seen.count(tail[e]) != 0;
        if (h != t) {
          seen.insert(h ? tail[e] : head[e]);
          grew = true;
        }
      }
    }
    require(seen.size() == vertices.size(), "tree must be connected");
  }

  return assemble(std::move(vertices), std::move(edges), std::move(head), std::move(tail));
}

}  // namespace

LabeledTree make_labeled_tree(std::vector<ModuliSpec> vertices) {
  return build_tree(std::move(vertices), nullptr);
}

void validate(const LabeledTree& tree) {
  LabeledTree rebuilt = build_tree(tree.vertices, &tree.edges);
  require(rebuilt == tree,
          "tree not in canonical form or head/tail maps inconsistent with labels");
}

ModuliSpec base_of(const LabeledTree& tree) {
  std::set<std::int32_t> rho(tree.edges.begin(), tree.edges.end());
  ModuliSpec base;
  std::int64_t beta = 0;
  std::vector<Label> k, l, sigma;
  for (const ModuliSpec& s : tree.vertices) {
    beta += s.pre.beta;
    for (const Label& x : s.pre.k)
      if (!(x.kind == label_kind::node_in && rho.count(x.index))) k.push_back(x);
    for (const Label& x : s.pre.l) l.push_back(x);
    for (const Label& x : s.sigma)
      if (!rho.count(x.index)) sigma.push_back(x);
  }
  std::sort(k.begin(), k.end());
  std::sort(l.begin(), l.end());
  std::sort(sigma.begin(), sigma.end());
  base.pre = PreModuliSpec{std::move(k), std::move(l), beta};
  base.sigma = std::move(sigma);
  return base;
}

namespace {

// Glues the root trees along a new edge r: the tail side keeps its vertex
// order and precedes the head side, which matches the canonical order because
// r is the maximal edge of the glued tree.
LabeledTree graft(const LabeledTree& t1, const LabeledTree& t2, std::int32_t r) {
  LabeledTree t;
  t.vertices = t1.vertices;
  t.vertices.insert(t.vertices.end(), t2.vertices.begin(), t2.vertices.end());
  t.edges.reserve(t1.edges.size() + t2.edges.size() + 1);
  std::merge(t1.edges.begin(), t1.edges.end(), t2.edges.begin(), t2.edges.end(),
             std::back_inserter(t.edges));
  t.edges.insert(std::upper_bound(t.edges.begin(), t.edges.end(), r), r);

  const int offset = static_cast<int>(t1.vertices.size());
  t.head = t1.head;
  t.tail = t1.tail;
  for (const auto& [e, v] : t2.head) t.head[e] = v + offset;
  for (const auto& [e, v] : t2.tail) t.tail[e] = v + offset;

  int tail_v = -1, head_v = -1;
  for (std::size_t v = 0; v < t1.vertices.size(); ++v)
    if (std::binary_search(t1.vertices[v].sigma.begin(), t1.vertices[v].sigma.end(),
                           Label::node_out(r)))
      tail_v = static_cast<int>(v);
  for (std::size_t v = 0; v < t2.vertices.size(); ++v) {
    const auto& k = t2.vertices[v].pre.k;
    if (std::binary_search(k.begin(), k.end(), Label::node_in(r)))
      head_v = static_cast<int>(v) + offset;
  }
  internal_check(tail_v >= 0 && head_v >= 0, "graft could not locate the new node labels");
  t.tail[r] = tail_v;
  t.head[r] = head_v;
  return t;
}

std::vector<LabeledTree> enumerate_spec_trees(const ModuliSpec& s,
                                              const std::vector<std::int32_t>& rho) {
  if (rho.empty()) {
    internal_check(is_stable(s.pre), "enumeration reached a non-sturdy one-vertex spec");
    LabeledTree t;
    t.vertices.push_back(s);
    return {t};
  }
  // Summing per-vertex stability over the |rho|+1 vertices bounds the edge
  // count; branches that cannot meet it are empty.
  const std::int64_t budget = static_cast<std::int64_t>(s.pre.k.size()) +
                              2 * static_cast<std::int64_t>(s.pre.l.size()) +
                              3 * s.pre.beta;
  const std::int64_t edges = static_cast<std::int64_t>(rho.size());
  if (budget + edges < 3 * (edges + 1)) return {};
  const std::int32_t r = rho.back();
  const std::vector<std::int32_t> rho_hat(rho.begin(), rho.end() - 1);

  std::vector<SplitPair> pairs = detail::split_pairs(s, r);
  std::erase_if(pairs, [](const SplitPair& p) { return p.kind != SplitKind::sturdy_sturdy; });

  std::vector<LabeledTree> out;
  const std::size_t nh = rho_hat.size();
  for (std::uint32_t mask = 0; mask < (1u << nh); ++mask) {
    std::vector<std::int32_t> rho1, rho2;
    for (std::size_t i = 0; i < nh; ++i)
      (((mask >> i) & 1u) ? rho1 : rho2).push_back(rho_hat[i]);
    for (const SplitPair& p : pairs) {
      const std::vector<LabeledTree> left = enumerate_spec_trees(p.left, rho1);
      if (left.empty()) continue;
      const std::vector<LabeledTree> right = enumerate_spec_trees(p.right, rho2);
      for (const LabeledTree& t1 : left)
        for (const LabeledTree& t2 : right) out.push_back(graft(t1, t2, r));
    }
  }
  return out;
}

}  // namespace

std::vector<LabeledTree> enumerate_trees(const PreModuliSpec& base,
                                         const std::vector<std::int32_t>& rho) {
  validate(base);
  require(is_basic(base), "base specification must be stable and orientable");
  std::vector<std::int32_t> rho_sorted = rho;
  std::sort(rho_sorted.begin(), rho_sorted.end());
  require(std::adjacent_find(rho_sorted.begin(), rho_sorted.end()) == rho_sorted.end(),
          "rho indices must be distinct");
  for (std::int32_t j : rho_sorted) {
    require(j >= 1, "rho indices must be positive");
    require(!std::binary_search(base.k.begin(), base.k.end(), Label::node_in(j)),
            "rho index collides with a node_in label of the base");
  }
  return enumerate_spec_trees(ModuliSpec{base, {}}, rho_sorted);
}

std::int64_t max_resolution_depth(const PreModuliSpec& base) {
  validate(base);
  // Stability is what the bound rests on (summing the per-vertex inequality);
  // non-orientable stable bases get the same bound with an empty enumeration.
  require(is_stable(base), "base specification must be stable");
  const std::int64_t budget = static_cast<std::int64_t>(base.k.size()) +
                              2 * static_cast<std::int64_t>(base.l.size()) + 3 * base.beta - 3;
  return budget / 2;
}

namespace {

std::vector<Label> merged_without(const std::vector<Label>& a, const std::vector<Label>& b,
                                  const Label& drop) {
  std::vector<Label> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  auto it = std::lower_bound(out.begin(), out.end(), drop);
  internal_check(it != out.end() && *it == drop, "expected node label missing during merge");
  out.erase(it);
  return out;
}

}  // namespace

LabeledTree contract_edge(const LabeledTree& tree, std::int32_t e) {
  require(std::binary_search(tree.edges.begin(), tree.edges.end(), e),
          "edge to contract is not in the tree");
  const int hv = tree.head.at(e);
  const int tv = tree.tail.at(e);

  ModuliSpec merged;
  merged.pre.k =
      merged_without(tree.vertices[tv].pre.k, tree.vertices[hv].pre.k, Label::node_in(e));
  merged.sigma =
      merged_without(tree.vertices[tv].sigma, tree.vertices[hv].sigma, Label::node_out(e));
  {
    std::vector<Label> l;
    std::merge(tree.vertices[tv].pre.l.begin(), tree.vertices[tv].pre.l.end(),
               tree.vertices[hv].pre.l.begin(), tree.vertices[hv].pre.l.end(),
               std::back_inserter(l));
    merged.pre.l = std::move(l);
  }
  merged.pre.beta = tree.vertices[tv].pre.beta + tree.vertices[hv].pre.beta;

  internal_check(is_orientable(merged.pre) && is_stable(merged.pre),
                 "merged vertex of a valid tree must be sturdy");

  // Provisional indexing: surviving vertices in old order, merged vertex at
  // the slot of min(hv, tv).
  const int lo = std::min(hv, tv), hi = std::max(hv, tv);
  std::vector<ModuliSpec> verts;
  std::vector<int> remap(tree.vertices.size());
  for (int v = 0; v < static_cast<int>(tree.vertices.size()); ++v) {
    if (v == hi) {
      remap[v] = remap[lo];
      continue;
    }
    remap[v] = static_cast<int>(verts.size());
    verts.push_back(v == lo ? merged : tree.vertices[v]);
  }

  std::vector<std::int32_t> edges;
  std::map<std::int32_t, int> head, tail;
  for (std::int32_t j : tree.edges) {
    if (j == e) continue;
    edges.push_back(j);
    head[j] = remap[tree.head.at(j)];
    tail[j] = remap[tree.tail.at(j)];
  }

  return assemble(std::move(verts), std::move(edges), std::move(head), std::move(tail));
}

namespace {

bool edges_are_initial_segment(const LabeledTree& tree) {
  for (std::size_t i = 0; i < tree.edges.size(); ++i)
    if (tree.edges[i] != static_cast<std::int32_t>(i + 1)) return false;
  return true;
}

}  // namespace

std::vector<LabeledTree> smoothing_sequence(const LabeledTree& tree) {
  require(edges_are_initial_segment(tree), "smoothing requires edges {1, ..., r}");
  std::vector<LabeledTree> seq{tree};
  const std::int32_t r = static_cast<std::int32_t>(tree.edges.size());
  for (std::int32_t j = 1; j <= r; ++j) seq.push_back(contract_edge(seq.back(), j));
  return seq;
}

LabeledTree relabel_edges(const std::map<std::int32_t, std::int32_t>& map,
                          const LabeledTree& tree) {
  std::set<std::int32_t> domain, range;
  for (const auto& [from, to] : map) {
    require(to >= 1, "relabeled edge indices must be positive");
    domain.insert(from);
    range.insert(to);
  }
  const std::set<std::int32_t> rho(tree.edges.begin(), tree.edges.end());
  require(domain == rho, "relabeling must be defined on exactly the edge set");
  require(range.size() == map.size(), "relabeling must be injective");

  std::vector<ModuliSpec> verts = tree.vertices;
  std::vector<std::int32_t> new_edges;
  for (std::int32_t e : tree.edges) new_edges.push_back(map.at(e));
  std::sort(new_edges.begin(), new_edges.end());
  for (ModuliSpec& s : verts) {
    for (Label& x : s.pre.k)
      if (x.kind == label_kind::node_in && rho.count(x.index)) x.index = map.at(x.index);
    for (Label& x : s.sigma)
      if (rho.count(x.index)) x.index = map.at(x.index);
    std::sort(s.pre.k.begin(), s.pre.k.end());
    std::sort(s.sigma.begin(), s.sigma.end());
  }
  return build_tree(std::move(verts), &new_edges);
}

LabeledTree sym_act(const std::map<std::int32_t, std::int32_t>& perm, const LabeledTree& tree) {
  std::set<std::int32_t> range;
  for (const auto& [from, to] : perm) range.insert(to);
  const std::set<std::int32_t> rho(tree.edges.begin(), tree.edges.end());
  require(range == rho, "permutation must be a bijection of the edge set");
  return relabel_edges(perm, tree);
}

bool is_odd_even(const LabeledTree& tree) {
  for (const ModuliSpec& s : tree.vertices) {
    if (s.pre.beta % 2 == 0 && !s.sigma.empty()) return false;
    if (s.pre.beta % 2 == 1 && !s.pre.k.empty()) return false;
  }
  return true;
}

int odd_vertex_count(const LabeledTree& tree) {
  int o = 0;
  for (const ModuliSpec& s : tree.vertices)
    if (s.pre.beta % 2 == 1) ++o;
  return o;
}

namespace {

// Initial edge segments must span connected subgraphs: in a tree this holds
// iff the first a edges touch exactly a+1 vertices. Sigma indices must be
// contiguous per vertex.
bool sorted_structure(const LabeledTree& tree) {
  std::set<int> touched;
  for (std::size_t a = 0; a < tree.edges.size(); ++a) {
    const std::int32_t e = tree.edges[a];
    touched.insert(tree.head.at(e));
    touched.insert(tree.tail.at(e));
    if (touched.size() != a + 2) return false;
  }
  for (const ModuliSpec& s : tree.vertices) {
    if (s.sigma.empty()) continue;
    const std::int64_t lo = s.sigma.front().index;
    const std::int64_t hi = s.sigma.back().index;
    if (hi - lo + 1 != static_cast<std::int64_t>(s.sigma.size())) return false;
  }
  return true;
}

}  // namespace

bool is_sorted_odd_even(const LabeledTree& tree) {
  require(edges_are_initial_segment(tree), "sortedness requires edges {1, ..., r}");
  return is_odd_even(tree) && sorted_structure(tree);
}

bool is_sorted_step(const LabeledTree& tree) {
  for (std::size_t i = 0; i + 1 < tree.edges.size(); ++i)
    require(tree.edges[i + 1] == tree.edges[i] + 1,
            "smoothing steps carry an edge set {a, ..., r}");
  if (!sorted_structure(tree)) return false;
  // The vertex about to absorb the next contraction carries no superfluous
  // labels. Later edges may well point into sigma-carrying merged clusters.
  if (!tree.edges.empty() &&
      !tree.vertices[tree.head.at(tree.edges.front())].sigma.empty())
    return false;
  return true;
}

std::map<std::int32_t, std::int32_t> sorting_permutation(const LabeledTree& tree) {
  require(edges_are_initial_segment(tree), "sorting requires edges {1, ..., r}");
  require(is_odd_even(tree), "sorting permutation is defined for odd-even trees");

  const int r = static_cast<int>(tree.edges.size());
  std::vector<std::int32_t> slot(static_cast<std::size_t>(r), 0);  // position -> edge
  std::vector<bool> used(static_cast<std::size_t>(r) + 1, false);
  std::set<int> touched;
  // last position (1-based) at which each vertex received an outgoing edge
  std::vector<int> last_out(tree.vertices.size(), 0);
  std::vector<int> out_count(tree.vertices.size(), 0);

  // Depth-first assignment of new labels 1..r to edges: each prefix must stay
  // connected and each vertex's outgoing labels must stay consecutive.
  auto search = [&](auto&& self, int pos) -> bool {
    if (pos > r) return true;
    for (std::int32_t e = 1; e <= r; ++e) {
      if (used[e]) continue;
      const int hv = tree.head.at(e), tv = tree.tail.at(e);
      if (pos > 1 && !touched.count(hv) && !touched.count(tv)) continue;
      if (out_count[tv] > 0 && last_out[tv] != pos - 1) continue;

      used[e] = true;
      slot[pos - 1] = e;
      const bool new_h = touched.insert(hv).second;
      const bool new_t = touched.insert(tv).second;
      const int saved_last = last_out[tv];
      last_out[tv] = pos;
      ++out_count[tv];

      if (self(self, pos + 1)) return true;

      --out_count[tv];
      last_out[tv] = saved_last;
      if (new_h) touched.erase(hv);
      if (new_t) touched.erase(tv);
      slot[pos - 1] = 0;
      used[e] = false;
    }
    return false;
  };

  const bool found = search(search, 1);
  internal_check(found, "odd-even tree admits no sorting permutation");

  std::map<std::int32_t, std::int32_t> tau;
  for (int pos = 1; pos <= r; ++pos) tau[slot[pos - 1]] = pos;
  return tau;
}

FilteredTreeView filter_view(const LabeledTree& tree, const std::set<std::int32_t>& S) {
  FilteredTreeView view;
  view.edges = tree.edges;
  view.head = tree.head;
  view.tail = tree.tail;
  view.vertices = tree.vertices;
  for (ModuliSpec& s : view.vertices) {
    std::erase_if(s.sigma, [&S](const Label& x) { return S.count(x.index) == 0; });
  }
  return view;
}

}  // namespace ogw
