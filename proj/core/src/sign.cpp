#include "ogw/sign.hpp"

#include <algorithm>
#include <vector>

#include "ogw/moduli.hpp"

namespace ogw {

Sign perm_sign(const std::map<std::int32_t, std::int32_t>& perm) {
  std::vector<std::int32_t> domain, image;
  for (const auto& [from, to] : perm) {
    domain.push_back(from);
    image.push_back(to);
  }
  std::vector<std::int32_t> sorted_image = image;
  std::sort(sorted_image.begin(), sorted_image.end());
  require(sorted_image == domain, "permutation must be a bijection of its domain");

  std::int64_t inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++inversions;
  return Sign::from_parity(inversions);
}

Sign shuffle_sign(std::span<const Label> a, std::span<const Label> b) {
  require(std::is_sorted(a.begin(), a.end()) && std::is_sorted(b.begin(), b.end()),
          "shuffle inputs must each be sorted");
  require(std::adjacent_find(a.begin(), a.end()) == a.end() &&
              std::adjacent_find(b.begin(), b.end()) == b.end(),
          "shuffle inputs must be duplicate-free");
  // Only cross inversions contribute: count elements of b that each element of
  // a must move past.
  std::int64_t inversions = 0;
  std::size_t j = 0;
  for (const Label& x : a) {
    while (j < b.size() && b[j] < x) ++j;
    require(j >= b.size() || b[j] != x, "shuffle inputs must be disjoint");
    inversions += static_cast<std::int64_t>(j);
  }
  return Sign::from_parity(inversions);
}

Sign w_factor(const AmbientDim& m, std::int64_t beta1, std::int64_t beta2) {
  require(beta1 >= 0 && beta2 >= 0, "degrees must be non-negative");
  if (m.m % 2 == 0) return Sign::plus();
  return Sign::from_parity((beta1 % 2) * (beta2 % 2));
}

}  // namespace ogw
