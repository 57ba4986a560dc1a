#include "ogw/orientation.hpp"

#include <algorithm>

namespace ogw {

namespace {

struct StepData {
  std::int64_t parity;        // exponent of -1, without the shuffle factor
  Sign shuffle{Sign::plus()};
};

StepData step_signs(const LabeledTree& step, std::int32_t a, AmbientDim m) {
  require(!step.edges.empty(), "smoothing step must have at least one edge");
  require(step.edges.front() == a, "a must be the minimal edge of the step");
  for (std::size_t i = 0; i < step.edges.size(); ++i)
    require(step.edges[i] == a + static_cast<std::int32_t>(i),
            "smoothing step must have edge set {a, ..., r}");
  const std::int32_t r = step.edges.back();

  const ModuliSpec& v_tail = step.vertices[step.tail.at(a)];
  const ModuliSpec& v_head = step.vertices[step.head.at(a)];
  const std::int64_t k1 = static_cast<std::int64_t>(v_tail.pre.k.size());
  const std::int64_t b1 = v_tail.pre.beta;
  const std::int64_t b2 = v_head.pre.beta;

  const LabeledTree contracted = contract_edge(step, a);

  // The superfluous-label count runs over every vertex of the contracted
  // tree. Counting only the vertices before the merged one breaks the sorted
  // odd-even closed forms whenever leftover sigma sits on or after the merged
  // cluster; summing over all vertices is the reading on which the per-step
  // signs and the closed forms agree.
  std::int64_t sigma_total = 0;
  for (const ModuliSpec& s : contracted.vertices)
    sigma_total += static_cast<std::int64_t>(s.sigma.size());

  std::vector<Label> sigma_tail = v_tail.sigma;
  const auto it =
      std::lower_bound(sigma_tail.begin(), sigma_tail.end(), Label::node_out(a));
  internal_check(it != sigma_tail.end() && *it == Label::node_out(a),
                 "tail vertex must carry the node label of the contracted edge");
  sigma_tail.erase(it);

  StepData d;
  d.parity = (r - a) + k1 + ((1 + m.m) % 2) * (b1 % 2) * (b2 % 2) + sigma_total;
  d.shuffle = shuffle_sign(sigma_tail, v_head.sigma);
  return d;
}

}  // namespace

Sign xi(const LabeledTree& step, std::int32_t a, AmbientDim m) {
  const StepData d = step_signs(step, a, m);
  return Sign::from_parity(d.parity) * d.shuffle;
}

Sign xi_check(const LabeledTree& step, std::int32_t a, AmbientDim m) {
  require(!step.edges.empty() && step.edges.front() == a,
          "a must be the minimal edge of the step");
  for (std::size_t i = 0; i < step.edges.size(); ++i)
    require(step.edges[i] == a + static_cast<std::int32_t>(i),
            "smoothing step must have edge set {a, ..., r}");
  const std::int32_t r = step.edges.back();
  const ModuliSpec& v_tail = step.vertices[step.tail.at(a)];
  const ModuliSpec& v_head = step.vertices[step.head.at(a)];
  const std::int64_t k1 = static_cast<std::int64_t>(v_tail.pre.k.size());
  return Sign::from_parity((r - a) + k1 +
                           ((1 + m.m) % 2) * (v_tail.pre.beta % 2) * (v_head.pre.beta % 2));
}

namespace {

// Accumulated per-step signs. The degree factors are read off the partially
// contracted trees (the glued components at each step), while the
// orienting-label count is that of the input tree's own tail vertex: the
// clusters absorb orienting labels whose counts do not enter the accumulated
// sign. Reading the label count off the cluster instead breaks the sorted
// odd-even closed forms on trees whose tail clusters swallow earlier
// components.
struct AccumulatedSigns {
  Sign theta{Sign::plus()};
  Sign zeta{Sign::plus()};
};

AccumulatedSigns accumulate(const LabeledTree& tree, AmbientDim m) {
  const std::vector<LabeledTree> seq = smoothing_sequence(tree);
  const std::int64_t r = static_cast<std::int64_t>(tree.edges.size());
  AccumulatedSigns acc;
  for (std::int64_t a = 1; a <= r; ++a) {
    const LabeledTree& step = seq[static_cast<std::size_t>(a - 1)];
    const LabeledTree& next = seq[static_cast<std::size_t>(a)];
    const ModuliSpec& v_tail = step.vertices[step.tail.at(static_cast<std::int32_t>(a))];
    const ModuliSpec& v_head = step.vertices[step.head.at(static_cast<std::int32_t>(a))];
    const ModuliSpec& original_tail =
        tree.vertices[tree.tail.at(static_cast<std::int32_t>(a))];

    const std::int64_t k0 = static_cast<std::int64_t>(original_tail.pre.k.size());
    const std::int64_t check_parity =
        (r - a) + k0 +
        ((1 + m.m) % 2) * (v_tail.pre.beta % 2) * (v_head.pre.beta % 2);
    acc.zeta *= Sign::from_parity(check_parity);

    std::int64_t sigma_total = 0;
    for (const ModuliSpec& s : next.vertices)
      sigma_total += static_cast<std::int64_t>(s.sigma.size());
    std::vector<Label> sigma_tail = v_tail.sigma;
    const auto it = std::lower_bound(sigma_tail.begin(), sigma_tail.end(),
                                     Label::node_out(static_cast<std::int32_t>(a)));
    internal_check(it != sigma_tail.end() && *it == Label::node_out(static_cast<std::int32_t>(a)),
                   "tail vertex must carry the node label of the contracted edge");
    sigma_tail.erase(it);
    acc.theta *= Sign::from_parity(check_parity + sigma_total) *
                 shuffle_sign(sigma_tail, v_head.sigma);
  }
  return acc;
}

}  // namespace

Sign theta(const LabeledTree& tree, AmbientDim m) { return accumulate(tree, m).theta; }

Sign zeta(const LabeledTree& tree, AmbientDim m) { return accumulate(tree, m).zeta; }

namespace {

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

Sign sorted_odd_even_theta(int o, AmbientDim m) {
  require(o >= 0, "vertex count must be non-negative");
  return Sign::from_parity((1 + m.m) * choose2(o));
}

Sign sorted_odd_even_zeta(int r, int o, AmbientDim m) {
  require(r >= 0 && o >= 0, "counts must be non-negative");
  return Sign::from_parity(choose2(r)) * sorted_odd_even_theta(o, m);
}

Sign sorted_odd_even_ff(int r) {
  require(r >= 0, "edge count must be non-negative");
  return Sign::from_parity(choose2(r));
}

}  // namespace ogw
