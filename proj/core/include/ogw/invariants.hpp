#ifndef OGW_INVARIANTS_HPP
#define OGW_INVARIANTS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "ogw/orientation.hpp"
#include "ogw/tree.hpp"

namespace ogw {

// Interior constraint bookkeeping: l_vec[d] counts the constraints of
// cohomological weight d (the class H^d), 0 <= d <= 2m. The derived d-tuple
// is kept ascending, the canonical representative of its symmetric-group
// orbit.
struct ConstraintTuple {
  std::vector<std::int64_t> l_vec;  // size 2m + 1

  static ConstraintTuple from_l_vec(std::vector<std::int64_t> l_vec, AmbientDim m);
  static ConstraintTuple from_d_tuple(const std::vector<int>& ds, AmbientDim m);

  AmbientDim ambient() const { return AmbientDim(static_cast<int>((l_vec.size() - 1) / 2)); }
  std::int64_t total() const;              // l = sum of l_vec
  std::vector<int> d_tuple() const;        // ascending

  friend bool operator==(const ConstraintTuple&, const ConstraintTuple&) = default;
};

// deg omega = 2m k + sum_j 2 d_j: each boundary constraint contributes the
// point class of the Lagrangian, each interior one its hyperplane power.
std::int64_t omega_degree(std::int64_t k, const ConstraintTuple& constraints, AmbientDim m);

// deg omega minus the moduli dimension 2m + (2m+1) beta - 3 + k + 2l.
std::int64_t invariant_degree_direct(std::int64_t k, const ConstraintTuple& constraints,
                                     std::int64_t beta, AmbientDim m);

// The closed form sum_j (2j-1) l_j + (2m-1) k - (2m+1)(beta+1) + 4. Agrees
// with the direct route when l = 0 and differs from it by exactly l in
// general; both are reported, neither is adjudicated.
std::int64_t invariant_degree_closed(std::int64_t k, const ConstraintTuple& constraints,
                                     std::int64_t beta, AmbientDim m);

enum class VanishingReason { none, unstable, wrong_parity, negative_degree };

struct VanishingResult {
  bool zero{false};
  VanishingReason reason{VanishingReason::none};
};

std::string to_string(VanishingReason r);

// The forced-vanishing predicate: unstable inputs, wrong parity of k + beta,
// or negative degree (via the direct route) make the invariant zero.
VanishingResult is_trivially_zero(std::int64_t k, const ConstraintTuple& constraints,
                                  std::int64_t beta);

struct LedgerEntry {
  LabeledTree tree;
  Sign theta;
  Sign zeta;
};

struct LedgerLevel {
  int r{0};
  boost::multiprecision::cpp_int weight_denominator;  // weight = 1 / r!
  std::vector<LedgerEntry> entries;
};

struct InvariantDescriptor {
  std::int64_t k{0};
  ConstraintTuple constraints;
  std::int64_t beta{0};
  AmbientDim m{1};
  std::int64_t degree_direct{0};
  std::int64_t degree_closed{0};
  VanishingResult zero;
};

InvariantDescriptor describe_invariant(std::int64_t k, const ConstraintTuple& constraints,
                                       std::int64_t beta, AmbientDim m);

// The per-level resolution ledger: for every 0 <= r <= max depth, all trees
// of the enumeration over {1..r} with their theta and zeta signs and the
// weight 1/r!. Levels past the last populated one are reported empty. The
// numeric integrand is out of reach of this ledger by design; entries carry
// the sign data an evaluator would consume.
std::vector<LedgerLevel> resolution_ledger(std::int64_t k, const ConstraintTuple& constraints,
                                           std::int64_t beta, AmbientDim m);

}  // namespace ogw

#endif
