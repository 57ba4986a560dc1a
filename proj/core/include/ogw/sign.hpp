#ifndef OGW_SIGN_HPP
#define OGW_SIGN_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "ogw/label.hpp"

namespace ogw {

// Exact sign in {+1, -1}.
class Sign {
public:
  constexpr Sign() = default;
  static constexpr Sign plus() { return Sign{false}; }
  static constexpr Sign minus() { return Sign{true}; }
  static constexpr Sign from_parity(std::int64_t n) { return Sign{(n % 2 + 2) % 2 == 1}; }

  constexpr int value() const { return negative_ ? -1 : 1; }
  constexpr Sign operator*(Sign o) const { return Sign{negative_ != o.negative_}; }
  Sign& operator*=(Sign o) {
    negative_ = negative_ != o.negative_;
    return *this;
  }
  friend constexpr bool operator==(Sign, Sign) = default;

private:
  constexpr explicit Sign(bool negative) : negative_(negative) {}
  bool negative_ = false;
};

inline std::string to_string(Sign s) { return s.value() > 0 ? "+1" : "-1"; }

// Sign of a finite bijection, by inversion count over its sorted domain.
Sign perm_sign(const std::map<std::int32_t, std::int32_t>& perm);

// Sign of the shuffle merging two disjoint, individually sorted label
// sequences (a, b) into one sorted sequence.
Sign shuffle_sign(std::span<const Label> a, std::span<const Label> b);

struct AmbientDim;

// Gluing sign: (-1)^{beta' beta''} for odd m, +1 for even m; equivalently
// (-1)^{(1+m) beta' beta''}.
Sign w_factor(const AmbientDim& m, std::int64_t beta1, std::int64_t beta2);

}  // namespace ogw

#endif
