// Acceptance suite: one line per criterion, exact checks throughout. Exits
// nonzero if any criterion fails. Criteria 1 and 8 also enforce their wall
// clock budgets (30 s and 5 s).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ogw/boundary.hpp"
#include "ogw/cohomology.hpp"
#include "ogw/invariants.hpp"
#include "ogw/json_io.hpp"
#include "ogw/orientation.hpp"
#include "oracle.hpp"

using namespace ogw;

namespace {

struct Outcome {
  bool pass{false};
  std::string detail;
};

struct EnumeratedLevel {
  PreModuliSpec base;
  std::vector<std::int32_t> rho;
  std::vector<LabeledTree> trees;
};

PreModuliSpec standard_base(int k, int l, std::int64_t beta) {
  PreModuliSpec base;
  for (int i = 1; i <= k; ++i) base.k.push_back(Label::plain(i));
  for (int i = 1; i <= l; ++i) base.l.push_back(Label::plain(i));
  base.beta = beta;
  return base;
}

std::vector<std::int32_t> initial_rho(int r) {
  std::vector<std::int32_t> rho;
  for (int j = 1; j <= r; ++j) rho.push_back(j);
  return rho;
}

// All basic bases with k <= 3, l <= 2, beta <= 3 (criterion 1's range).
std::vector<PreModuliSpec> desk_bases() {
  std::vector<PreModuliSpec> bases;
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 2; ++l)
      for (int b = 0; b <= 3; ++b) {
        PreModuliSpec base = standard_base(k, l, b);
        if (is_basic(base)) bases.push_back(std::move(base));
      }
  return bases;
}

std::vector<EnumeratedLevel> g_levels;  // filled by criterion 1, reused later

Outcome criterion1_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t total_trees = 0, comparisons = 0;
  for (const PreModuliSpec& base : desk_bases()) {
    for (int r = 0; r <= 3; ++r) {
      EnumeratedLevel level{base, initial_rho(r), enumerate_trees(base, initial_rho(r))};
      const auto oracle = ogw::testing::oracle_tree_set(base, level.rho);
      const auto ours = ogw::testing::to_independent_set(level.trees);
      ++comparisons;
      if (ours != oracle)
        return {false, "mismatch at base " + to_string(ModuliSpec{base, {}}) + ", r = " +
                           std::to_string(r) + ": " + std::to_string(ours.size()) + " vs " +
                           std::to_string(oracle.size()) + " types"};
      if (ours.size() != level.trees.size())
        return {false, "recursive enumeration produced a duplicate type"};
      total_trees += level.trees.size();
      g_levels.push_back(std::move(level));
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 30.0) return {false, "exceeded the 30 s budget"};
  return {true, std::to_string(comparisons) + " enumerations, " +
                    std::to_string(total_trees) + " trees match the brute-force oracle"};
}

Outcome criterion2_sorted_odd_even_signs() {
  std::size_t checked = 0;
  for (const EnumeratedLevel& level : g_levels) {
    const int r = static_cast<int>(level.rho.size());
    for (const LabeledTree& t : level.trees) {
      if (!is_sorted_odd_even(t)) continue;
      const int o = odd_vertex_count(t);
      for (int m = 1; m <= 3; ++m) {
        const AmbientDim dim(m);
        if (theta(t, dim) != sorted_odd_even_theta(o, dim))
          return {false, "theta mismatch at r = " + std::to_string(r)};
        if (zeta(t, dim) != sorted_odd_even_zeta(r, o, dim))
          return {false, "zeta mismatch at r = " + std::to_string(r)};
        ++checked;
      }
    }
  }
  return {checked > 0,
          std::to_string(checked) + " (tree, m) sign pairs match the closed forms"};
}

Outcome criterion3_smoothing_closure() {
  std::size_t steps = 0, contractions = 0;
  std::map<std::string, std::vector<LabeledTree>> reduced_cache;
  for (const EnumeratedLevel& level : g_levels) {
    const std::string base_key = to_string(ModuliSpec{level.base, {}});
    for (const LabeledTree& t : level.trees) {
      if (is_sorted_odd_even(t)) {
        for (const LabeledTree& step : smoothing_sequence(t)) {
          if (!is_sorted_step(step))
            return {false, "smoothing step left the sorted class"};
          ++steps;
        }
      }
      for (std::int32_t e : t.edges) {
        std::vector<std::int32_t> reduced = t.edges;
        std::erase(reduced, e);
        std::string key = base_key;
        for (std::int32_t j : reduced) key += "," + std::to_string(j);
        auto it = reduced_cache.find(key);
        if (it == reduced_cache.end())
          it = reduced_cache.emplace(key, enumerate_trees(level.base, reduced)).first;
        const LabeledTree c = contract_edge(t, e);
        if (std::count(it->second.begin(), it->second.end(), c) != 1)
          return {false, "contraction fell outside the reduced enumeration"};
        ++contractions;
      }
    }
  }
  return {true, std::to_string(steps) + " smoothing steps keep the sorted structure; " +
                    std::to_string(contractions) + " contractions land in the reduced sets"};
}

Outcome criterion4_depth_bound() {
  for (const PreModuliSpec& base : desk_bases()) {
    const std::int64_t depth = max_resolution_depth(base);
    const auto beyond =
        enumerate_trees(base, initial_rho(static_cast<int>(depth) + 1));
    if (!beyond.empty()) return {false, "nonempty enumeration beyond the depth bound"};
  }
  if (enumerate_trees(standard_base(2, 0, 1), {1}).size() != 1)
    return {false, "expected exactly one tree at r = 1 for ((1,2), {}, 1)"};
  return {true, "empty beyond floor((k+2l+3b-3)/2) for all desk bases; nonempty at r = 1"};
}

Outcome criterion5_wobbly_involution() {
  std::size_t wobbly = 0;
  for (const EnumeratedLevel& level : g_levels) {
    const std::int32_t next = static_cast<std::int32_t>(level.rho.size()) + 1;
    for (const LabeledTree& t : level.trees) {
      for (const BoundaryComponent& c : boundary_components(t, next)) {
        if (c.tag != BoundaryTag::wobbly) continue;
        ++wobbly;
        const BoundaryComponent swapped = wobbly_involution(c);
        if (swapped == c) return {false, "involution has a fixed point"};
        if (wobbly_involution(swapped) != c) return {false, "involution squared is not id"};
        auto erase_order = [](BoundaryComponent x) {
          std::sort(x.left.sigma.begin(), x.left.sigma.end());
          std::sort(x.right.sigma.begin(), x.right.sigma.end());
          return x;
        };
        if (erase_order(swapped) != erase_order(c))
          return {false, "involution changed more than the sigma order"};
      }
    }
  }
  return {wobbly > 0, std::to_string(wobbly) + " wobbly components pass all three checks"};
}

Outcome criterion6_degree_agreement() {
  for (int m = 1; m <= 3; ++m) {
    const ConstraintTuple none =
        ConstraintTuple::from_l_vec(std::vector<std::int64_t>(2 * m + 1, 0), AmbientDim(m));
    for (std::int64_t k = 0; k <= 6; ++k)
      for (std::int64_t beta = 0; beta <= 4; ++beta)
        if (invariant_degree_direct(k, none, beta, AmbientDim(m)) !=
            invariant_degree_closed(k, none, beta, AmbientDim(m)))
          return {false, "degree routes disagree at l = 0"};
  }
  const ConstraintTuple none1 = ConstraintTuple::from_l_vec({0, 0, 0}, AmbientDim(1));
  if (invariant_degree_direct(2, none1, 1, AmbientDim(1)) != 0 ||
      invariant_degree_closed(2, none1, 1, AmbientDim(1)) != 0)
    return {false, "degree at (m=1, k=2, beta=1) is not 0"};
  return {true, "105 (k, beta, m) points agree; both routes are 0 at (1, 2, 0, 1)"};
}

Outcome criterion7_vanishing() {
  const ConstraintTuple none = ConstraintTuple::from_l_vec({0, 0, 0}, AmbientDim(1));
  const auto a = is_trivially_zero(1, none, 0);
  if (!a.zero || a.reason != VanishingReason::unstable)
    return {false, "(k=1, beta=0) should be Unstable"};
  const auto b = is_trivially_zero(1, none, 1);
  if (!b.zero || b.reason != VanishingReason::wrong_parity)
    return {false, "(k=1, beta=1) should be WrongParity"};
  const auto c = is_trivially_zero(0, ConstraintTuple::from_l_vec({0, 1, 0}, AmbientDim(1)), 1);
  if (!c.zero || c.reason != VanishingReason::negative_degree)
    return {false, "(m=1, k=0, l=(0,1,0), beta=1) should be NegativeDegree"};
  return {true, "Unstable, WrongParity and NegativeDegree all fire as specified"};
}

Outcome criterion8_cohomology() {
  const auto start = std::chrono::steady_clock::now();
  const AmbientDim m1(1);
  if (!normal_form(relation_poly(m1)).is_zero())
    return {false, "normal_form(relation) != 0 for m = 1"};
  if (!normal_form(relation_poly(AmbientDim(2))).is_zero())
    return {false, "normal_form(relation) != 0 for m = 2"};

  const EquivariantPolynomial h = EquivariantPolynomial::hyperplane(m1);
  const EquivariantPolynomial l1 = EquivariantPolynomial::lambda(m1, 1);
  if (restrict_weights(normal_form(h * h * h)) != l1 * l1 * h)
    return {false, "restrict_weights(normal_form(H^3)) != l1^2 H"};

  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> h_exp(0, 5);
  std::uniform_int_distribution<int> small_exp(0, 2);
  std::uniform_int_distribution<int> n_terms(1, 6);
  auto random_poly = [&]() {
    EquivariantPolynomial p(m1);
    const int terms = n_terms(rng);
    for (int t = 0; t < terms; ++t) {
      Monomial mono;
      mono.exps.assign(static_cast<std::size_t>(3 * m1.m + 2), 0);
      mono.exps[0] = static_cast<std::uint32_t>(h_exp(rng));
      for (std::size_t i = 1; i < mono.exps.size(); ++i)
        mono.exps[i] = static_cast<std::uint32_t>(small_exp(rng));
      p.add_term(std::move(mono), coeff(rng));
    }
    return p;
  };
  for (int i = 0; i < 200; ++i) {
    const EquivariantPolynomial p = random_poly();
    const EquivariantPolynomial q = random_poly();
    if (normal_form(p * q) != normal_form(normal_form(p) * normal_form(q)))
      return {false, "quotient homomorphism failed on randomized input"};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 5.0) return {false, "exceeded the 5 s budget"};
  return {true, "relation reduces to 0; H^3 restricts to l1^2 H; 200 randomized products"};
}

Outcome criterion9_sym_action() {
  std::size_t law_checks = 0, sorted_found = 0;
  for (const EnumeratedLevel& level : g_levels) {
    const int r = static_cast<int>(level.rho.size());
    if (r == 0 || r > 3) continue;

    std::vector<std::map<std::int32_t, std::int32_t>> perms;
    std::vector<std::int32_t> image = level.rho;
    do {
      std::map<std::int32_t, std::int32_t> p;
      for (int i = 0; i < r; ++i) p[level.rho[i]] = image[i];
      perms.push_back(std::move(p));
    } while (std::next_permutation(image.begin(), image.end()));

    std::set<std::string> enumerated;
    for (const LabeledTree& t : level.trees)
      enumerated.insert(ogw::testing::independent_serialization(t));

    for (const auto& tau : perms) {
      std::set<std::string> mapped;
      for (const LabeledTree& t : level.trees)
        mapped.insert(ogw::testing::independent_serialization(sym_act(tau, t)));
      if (mapped != enumerated) return {false, "sym_act does not permute the enumeration"};
    }

    for (const auto& tau1 : perms) {
      for (const auto& tau2 : perms) {
        std::map<std::int32_t, std::int32_t> composite;
        for (const auto& [from, mid] : tau1) composite[from] = tau2.at(mid);
        for (const LabeledTree& t : level.trees) {
          if (sym_act(tau2, sym_act(tau1, t)) != sym_act(composite, t))
            return {false, "composition law failed"};
          ++law_checks;
        }
      }
    }

    for (const LabeledTree& t : level.trees) {
      if (!is_odd_even(t)) continue;
      const auto tau = sorting_permutation(t);
      if (!is_sorted_odd_even(sym_act(tau, t)))
        return {false, "sorting permutation does not sort"};
      ++sorted_found;
    }
  }
  return {law_checks > 0 && sorted_found > 0,
          std::to_string(law_checks) + " composition checks; every odd-even tree admits a "
                                       "sorting permutation (" +
              std::to_string(sorted_found) + " trees)"};
}

}  // namespace

int main() {
  const std::pair<std::string, std::function<Outcome()>> criteria[] = {
      {"tree enumeration matches the brute-force oracle", criterion1_oracle},
      {"sorted odd-even sign theorem (theta, zeta closed forms)",
       criterion2_sorted_odd_even_signs},
      {"smoothing closure and contraction membership", criterion3_smoothing_closure},
      {"resolution depth bound", criterion4_depth_bound},
      {"wobbly involution: involutive, fixed-point free, order-only",
       criterion5_wobbly_involution},
      {"degree route agreement at l = 0", criterion6_degree_agreement},
      {"vanishing predicates", criterion7_vanishing},
      {"cohomology ring normal form and weight restriction", criterion8_cohomology},
      {"Sym(rho) action laws and enumeration stability", criterion9_sym_action},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s — %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", index,
                name.c_str(), outcome.detail.c_str(), secs);
    if (!outcome.pass) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
