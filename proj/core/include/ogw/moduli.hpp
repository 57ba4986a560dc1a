#ifndef OGW_MODULI_HPP
#define OGW_MODULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ogw/label.hpp"

namespace ogw {

// Dimension parameter: the Lagrangian is 2m-dimensional real projective space.
struct AmbientDim {
  int m{1};

  explicit AmbientDim(int m_) : m(m_) {
    require(m >= 1 && m <= 1000000, "ambient m must lie in 1..10^6");
  }
  friend auto operator<=>(const AmbientDim&, const AmbientDim&) = default;
};

// A pre-moduli specification (k, l, beta): boundary labels, interior labels
// and the disc degree. Label sequences are kept sorted and duplicate-free so
// serializations and sign conventions are canonical.
struct PreModuliSpec {
  std::vector<Label> k;
  std::vector<Label> l;
  std::int64_t beta{0};

  friend auto operator<=>(const PreModuliSpec&, const PreModuliSpec&) = default;
};

// A moduli specification (pre, sigma). sigma holds the superfluous boundary
// labels (node_out only). All canonical constructors keep sigma sorted; the
// boundary module is the one place where a non-canonical sigma order is
// meaningful (the wobbly involution transposes it).
struct ModuliSpec {
  PreModuliSpec pre;
  std::vector<Label> sigma;

  friend auto operator<=>(const ModuliSpec&, const ModuliSpec&) = default;
};

enum class SpecClass { sturdy, wobbly };

enum class SplitKind { sturdy_sturdy, one_wobbly };

// One summand of the boundary decomposition of a specification: the tail-side
// spec (carrying *'_r) and the head-side spec (carrying *''_r).
struct SplitPair {
  ModuliSpec left;
  ModuliSpec right;
  SplitKind kind{SplitKind::sturdy_sturdy};
};

bool is_stable(const PreModuliSpec& pre);
bool is_orientable(const PreModuliSpec& pre);
bool is_basic(const PreModuliSpec& pre);  // stable and orientable

// Structural validity of the label data itself (sortedness, kinds, ranges).
// `combined` pre-specs may carry node_out labels in k; everything else must not.
void validate(const PreModuliSpec& pre, bool allow_node_out_in_k = false);

// Full ModuliSpec invariant: valid labels, orientable pre, combined stability.
// When `canonical_sigma` is set (the default) sigma must be sorted.
void validate(const ModuliSpec& spec, bool canonical_sigma = true);
bool is_valid_spec(const ModuliSpec& spec);

// Sturdy when the underlying pre-spec is stable. A wobbly spec necessarily has
// the shape ((k, {}, 0), sigma) with |k| = 1 and |sigma| >= 2; this is checked.
SpecClass classify(const ModuliSpec& spec);

// The combined specification (k + sigma, l, beta). Always stable; the result
// may hold node_out labels in its k-sequence.
PreModuliSpec combined(const ModuliSpec& spec);

// dim = 2m + (2m+1) beta - 3 + |k| + |sigma| + 2|l|.
std::int64_t dim_moduli(const ModuliSpec& spec, AmbientDim dim);

// Largest node index (node_in or node_out) appearing in the spec, 0 if none.
std::int32_t max_node_index(const ModuliSpec& spec);

// All boundary splittings of `spec` at the fresh node index r: every division
// sigma = s' + s'', k = k' + k'', l = l' + l'', beta = b' + b'' for which both
// ((k', l', b'), s' + {*'_r}) and ((k'' + {*''_r}, l'', b''), s'') satisfy the
// ModuliSpec invariants. Requires r strictly larger than every node index
// already present. A returned pair never has two wobbly sides when the input
// is sturdy; this is asserted.
std::vector<SplitPair> split_boundary(const ModuliSpec& spec, std::int32_t r);

namespace detail {
// Same enumeration, but r only needs to be fresh, not maximal. The tree
// enumeration recursion splits at the largest remaining edge index, which can
// be smaller than node indices inherited from enclosing splits.
std::vector<SplitPair> split_pairs(const ModuliSpec& spec, std::int32_t r);
}  // namespace detail

std::string to_string(const ModuliSpec& spec);

}  // namespace ogw

#endif
