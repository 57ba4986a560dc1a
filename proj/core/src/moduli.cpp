#include "ogw/moduli.hpp"

#include <algorithm>
#include <limits>

namespace ogw {

namespace {

bool sorted_unique(const std::vector<Label>& xs) {
  return std::is_sorted(xs.begin(), xs.end()) &&
         std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

std::int64_t combined_stability_lhs(const ModuliSpec& s) {
  return static_cast<std::int64_t>(s.pre.k.size()) +
         static_cast<std::int64_t>(s.sigma.size()) +
         2 * static_cast<std::int64_t>(s.pre.l.size()) + 3 * s.pre.beta;
}

}  // namespace

bool is_stable(const PreModuliSpec& pre) {
  return static_cast<std::int64_t>(pre.k.size()) +
             2 * static_cast<std::int64_t>(pre.l.size()) + 3 * pre.beta >=
         3;
}

bool is_orientable(const PreModuliSpec& pre) {
  return (static_cast<std::int64_t>(pre.k.size()) + pre.beta) % 2 == 1;
}

bool is_basic(const PreModuliSpec& pre) { return is_stable(pre) && is_orientable(pre); }

void validate(const PreModuliSpec& pre, bool allow_node_out_in_k) {
  require(pre.beta >= 0, "beta must be non-negative");
  require(pre.beta <= std::numeric_limits<std::int32_t>::max(), "beta out of range");
  require(sorted_unique(pre.k), "k labels must be sorted and duplicate-free");
  require(sorted_unique(pre.l), "l labels must be sorted and duplicate-free");
  for (const Label& x : pre.k) {
    require(x.index >= 1, "k label index must be positive");
    if (!allow_node_out_in_k)
      require(x.kind != label_kind::node_out, "node_out label not allowed in k");
  }
  for (const Label& x : pre.l) {
    require(x.kind == label_kind::plain && x.index >= 1, "l labels must be plain");
  }
}

void validate(const ModuliSpec& spec, bool canonical_sigma) {
  validate(spec.pre);
  std::vector<Label> sigma_sorted = spec.sigma;
  std::sort(sigma_sorted.begin(), sigma_sorted.end());
  require(std::adjacent_find(sigma_sorted.begin(), sigma_sorted.end()) == sigma_sorted.end(),
          "sigma labels must be duplicate-free");
  if (canonical_sigma)
    require(spec.sigma == sigma_sorted, "sigma labels must be sorted");
  for (const Label& x : spec.sigma) {
    require(x.kind == label_kind::node_out && x.index >= 1,
            "sigma labels must be node_out");
  }
  require(is_orientable(spec.pre), "pre-spec must be orientable: |k| + beta odd");
  require(combined_stability_lhs(spec) >= 3,
          "combined stability violated: |k| + |sigma| + 2|l| + 3 beta >= 3");
}

bool is_valid_spec(const ModuliSpec& spec) {
  try {
    validate(spec, false);
    return true;
  } catch (const validation_error&) {
    return false;
  }
}

SpecClass classify(const ModuliSpec& spec) {
  validate(spec, false);
  if (is_stable(spec.pre)) return SpecClass::sturdy;
  // A wobbly spec is forced into the shape ((k, {}, 0), sigma), |k| = 1,
  // |sigma| >= 2.
  internal_check(spec.pre.k.size() == 1 && spec.pre.l.empty() && spec.pre.beta == 0 &&
                     spec.sigma.size() >= 2,
                 "wobbly spec must have shape ((k,{},0),sigma), |k|=1, |sigma|>=2");
  return SpecClass::wobbly;
}

PreModuliSpec combined(const ModuliSpec& spec) {
  PreModuliSpec out;
  out.k.reserve(spec.pre.k.size() + spec.sigma.size());
  std::merge(spec.pre.k.begin(), spec.pre.k.end(), spec.sigma.begin(), spec.sigma.end(),
             std::back_inserter(out.k));
  out.l = spec.pre.l;
  out.beta = spec.pre.beta;
  return out;
}

std::int64_t dim_moduli(const ModuliSpec& spec, AmbientDim dim) {
  validate(spec, false);
  const std::int64_t m = dim.m;
  return 2 * m + (2 * m + 1) * spec.pre.beta - 3 +
         static_cast<std::int64_t>(spec.pre.k.size()) +
         static_cast<std::int64_t>(spec.sigma.size()) +
         2 * static_cast<std::int64_t>(spec.pre.l.size());
}

std::int32_t max_node_index(const ModuliSpec& spec) {
  std::int32_t top = 0;
  for (const Label& x : spec.pre.k)
    if (x.kind == label_kind::node_in) top = std::max(top, x.index);
  for (const Label& x : spec.sigma) top = std::max(top, x.index);
  return top;
}

namespace detail {

std::vector<SplitPair> split_pairs(const ModuliSpec& spec, std::int32_t r) {
  validate(spec, false);
  // Only sturdy specifications index moduli spaces whose boundary decomposes;
  // the no-both-wobbly assertion below is false for wobbly inputs.
  require(is_stable(spec.pre), "split_boundary requires a sturdy specification");
  require(r >= 1, "node index r must be positive");
  for (const Label& x : spec.pre.k)
    require(!(x.kind == label_kind::node_in && x.index == r),
            "node index r collides with a node_in label of the spec");
  for (const Label& x : spec.sigma)
    require(x.index != r, "node index r collides with a node_out label of the spec");
  const std::size_t nk = spec.pre.k.size();
  const std::size_t nl = spec.pre.l.size();
  const std::size_t ns = spec.sigma.size();
  require(nk < 31 && nl < 31 && ns < 31, "label sets too large for subset enumeration");

  auto insert_sorted = [](std::vector<Label>& xs, const Label& x) {
    xs.insert(std::upper_bound(xs.begin(), xs.end(), x), x);
  };

  std::vector<SplitPair> out;
  for (std::uint32_t mk = 0; mk < (1u << nk); ++mk) {
    for (std::uint32_t ml = 0; ml < (1u << nl); ++ml) {
      for (std::uint32_t ms = 0; ms < (1u << ns); ++ms) {
        for (std::int64_t b1 = 0; b1 <= spec.pre.beta; ++b1) {
          SplitPair p;
          p.left.pre.beta = b1;
          p.right.pre.beta = spec.pre.beta - b1;
          for (std::size_t i = 0; i < nk; ++i)
            ((mk >> i) & 1u ? p.left.pre.k : p.right.pre.k).push_back(spec.pre.k[i]);
          for (std::size_t i = 0; i < nl; ++i)
            ((ml >> i) & 1u ? p.left.pre.l : p.right.pre.l).push_back(spec.pre.l[i]);
          for (std::size_t i = 0; i < ns; ++i)
            ((ms >> i) & 1u ? p.left.sigma : p.right.sigma).push_back(spec.sigma[i]);
          insert_sorted(p.left.sigma, Label::node_out(r));
          insert_sorted(p.right.pre.k, Label::node_in(r));

          // Label structure is valid by construction; only orientability and
          // combined stability can fail here.
          if (!is_orientable(p.left.pre) || combined_stability_lhs(p.left) < 3) continue;
          if (!is_orientable(p.right.pre) || combined_stability_lhs(p.right) < 3) continue;
          const bool lw = !is_stable(p.left.pre);
          const bool rw = !is_stable(p.right.pre);
          internal_check(!(lw && rw), "boundary split produced a wobbly pair on both sides");
          p.kind = (lw || rw) ? SplitKind::one_wobbly : SplitKind::sturdy_sturdy;
          out.push_back(std::move(p));
        }
      }
    }
  }
  return out;
}

}  // namespace detail

std::vector<SplitPair> split_boundary(const ModuliSpec& spec, std::int32_t r) {
  require(r > max_node_index(spec),
          "node index r must exceed every node index present in the spec");
  return detail::split_pairs(spec, r);
}

std::string to_string(const ModuliSpec& spec) {
  std::string s = "((";
  auto join = [&s](const std::vector<Label>& xs) {
    s += "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += to_string(xs[i]);
    }
    s += "}";
  };
  join(spec.pre.k);
  s += ", ";
  join(spec.pre.l);
  s += ", " + std::to_string(spec.pre.beta) + "), ";
  join(spec.sigma);
  s += ")";
  return s;
}

}  // namespace ogw
