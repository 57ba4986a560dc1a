#include "ogw/invariants.hpp"

#include <algorithm>

namespace ogw {

ConstraintTuple ConstraintTuple::from_l_vec(std::vector<std::int64_t> l_vec, AmbientDim m) {
  require(l_vec.size() == static_cast<std::size_t>(2 * m.m + 1),
          "l_vec must have length 2m + 1");
  for (std::int64_t v : l_vec) require(v >= 0, "constraint counts must be non-negative");
  return ConstraintTuple{std::move(l_vec)};
}

ConstraintTuple ConstraintTuple::from_d_tuple(const std::vector<int>& ds, AmbientDim m) {
  std::vector<std::int64_t> l_vec(static_cast<std::size_t>(2 * m.m + 1), 0);
  for (int d : ds) {
    require(d >= 0 && d <= 2 * m.m, "constraint weight must lie in 0..2m");
    ++l_vec[static_cast<std::size_t>(d)];
  }
  return ConstraintTuple{std::move(l_vec)};
}

std::int64_t ConstraintTuple::total() const {
  std::int64_t t = 0;
  for (std::int64_t v : l_vec) t += v;
  return t;
}

std::vector<int> ConstraintTuple::d_tuple() const {
  std::vector<int> ds;
  for (std::size_t d = 0; d < l_vec.size(); ++d)
    for (std::int64_t i = 0; i < l_vec[d]; ++i) ds.push_back(static_cast<int>(d));
  return ds;
}

std::int64_t omega_degree(std::int64_t k, const ConstraintTuple& constraints, AmbientDim m) {
  require(k >= 0, "k must be non-negative");
  require(constraints.ambient() == m, "constraint tuple does not match ambient dimension");
  std::int64_t deg = 2 * static_cast<std::int64_t>(m.m) * k;
  for (std::size_t d = 0; d < constraints.l_vec.size(); ++d)
    deg += 2 * static_cast<std::int64_t>(d) * constraints.l_vec[d];
  return deg;
}

std::int64_t invariant_degree_direct(std::int64_t k, const ConstraintTuple& constraints,
                                     std::int64_t beta, AmbientDim m) {
  require(beta >= 0, "beta must be non-negative");
  const std::int64_t l = constraints.total();
  const std::int64_t dim = 2 * m.m + (2 * m.m + 1) * beta - 3 + k + 2 * l;
  return omega_degree(k, constraints, m) - dim;
}

std::int64_t invariant_degree_closed(std::int64_t k, const ConstraintTuple& constraints,
                                     std::int64_t beta, AmbientDim m) {
  require(k >= 0 && beta >= 0, "k and beta must be non-negative");
  require(constraints.ambient() == m, "constraint tuple does not match ambient dimension");
  std::int64_t deg = 0;
  for (std::size_t j = 0; j < constraints.l_vec.size(); ++j)
    deg += (2 * static_cast<std::int64_t>(j) - 1) * constraints.l_vec[j];
  deg += (2 * m.m - 1) * k;
  deg -= (2 * m.m + 1) * (beta + 1);
  deg += 4;
  return deg;
}

std::string to_string(VanishingReason r) {
  switch (r) {
    case VanishingReason::none:
      return "None";
    case VanishingReason::unstable:
      return "Unstable";
    case VanishingReason::wrong_parity:
      return "WrongParity";
    case VanishingReason::negative_degree:
      return "NegativeDegree";
  }
  return "?";
}

VanishingResult is_trivially_zero(std::int64_t k, const ConstraintTuple& constraints,
                                  std::int64_t beta) {
  require(k >= 0 && beta >= 0, "k and beta must be non-negative");
  const std::int64_t l = constraints.total();
  if (k + 2 * l + 3 * beta < 3) return {true, VanishingReason::unstable};
  if ((k + beta) % 2 == 0) return {true, VanishingReason::wrong_parity};
  const AmbientDim m = constraints.ambient();
  if (invariant_degree_direct(k, constraints, beta, m) < 0)
    return {true, VanishingReason::negative_degree};
  return {false, VanishingReason::none};
}

InvariantDescriptor describe_invariant(std::int64_t k, const ConstraintTuple& constraints,
                                       std::int64_t beta, AmbientDim m) {
  require(constraints.ambient() == m, "constraint tuple does not match ambient dimension");
  InvariantDescriptor d{k, constraints, beta, m, 0, 0, {}};
  d.degree_direct = invariant_degree_direct(k, constraints, beta, m);
  d.degree_closed = invariant_degree_closed(k, constraints, beta, m);
  d.zero = is_trivially_zero(k, constraints, beta);
  return d;
}

namespace {

PreModuliSpec standard_base(std::int64_t k, std::int64_t l, std::int64_t beta) {
  PreModuliSpec base;
  for (std::int64_t i = 1; i <= k; ++i) base.k.push_back(Label::plain(static_cast<int>(i)));
  for (std::int64_t i = 1; i <= l; ++i) base.l.push_back(Label::plain(static_cast<int>(i)));
  base.beta = beta;
  return base;
}

}  // namespace

std::vector<LedgerLevel> resolution_ledger(std::int64_t k, const ConstraintTuple& constraints,
                                           std::int64_t beta, AmbientDim m) {
  const PreModuliSpec base = standard_base(k, constraints.total(), beta);
  require(is_basic(base), "ledger requires a basic specification: stable and orientable");
  const std::int64_t depth = max_resolution_depth(base);

  std::vector<LedgerLevel> ledger;
  boost::multiprecision::cpp_int factorial = 1;
  for (std::int64_t r = 0; r <= depth; ++r) {
    if (r > 0) factorial *= r;
    LedgerLevel level;
    level.r = static_cast<int>(r);
    level.weight_denominator = factorial;
    std::vector<std::int32_t> rho;
    for (std::int32_t j = 1; j <= r; ++j) rho.push_back(j);
    for (LabeledTree& t : enumerate_trees(base, rho)) {
      LedgerEntry entry{std::move(t), Sign::plus(), Sign::plus()};
      entry.theta = theta(entry.tree, m);
      entry.zeta = zeta(entry.tree, m);
      level.entries.push_back(std::move(entry));
    }
    ledger.push_back(std::move(level));
  }
  return ledger;
}

}  // namespace ogw
