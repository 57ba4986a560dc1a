#ifndef OGW_LABEL_HPP
#define OGW_LABEL_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "ogw/errors.hpp"

namespace ogw {

// Marked-point labels. `plain` is an ordinary boundary/interior label n >= 1.
// `node_in` (the orienting half of a node, written *''_i) lives in k-sets;
// `node_out` (the superfluous half, written *'_i) lives in sigma-sets.
enum class label_kind : std::uint8_t { plain = 0, node_in = 1, node_out = 2 };

struct Label {
  label_kind kind{label_kind::plain};
  std::int32_t index{1};

  static Label plain(std::int32_t n) { return make(label_kind::plain, n); }
  static Label node_in(std::int32_t i) { return make(label_kind::node_in, i); }
  static Label node_out(std::int32_t i) { return make(label_kind::node_out, i); }

  // Global label order: plain labels by index, then node_in labels by index;
  // node_out labels compare among themselves by index and sort after the rest.
  friend auto operator<=>(const Label&, const Label&) = default;

private:
  static Label make(label_kind k, std::int32_t i) {
    require(i >= 1, "label index must be positive");
    return Label{k, i};
  }
};

inline std::string to_string(const Label& x) {
  switch (x.kind) {
    case label_kind::plain:
      return std::to_string(x.index);
    case label_kind::node_in:
      return "in:" + std::to_string(x.index);
    case label_kind::node_out:
      return "out:" + std::to_string(x.index);
  }
  return "?";
}

}  // namespace ogw

#endif
