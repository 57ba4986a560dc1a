#ifndef OGW_COHOMOLOGY_HPP
#define OGW_COHOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogw/moduli.hpp"

namespace ogw {

using Coeff = boost::multiprecision::cpp_int;

// Exponent vector over the generators (H; a0..a2m; l1..lm), all of degree 2.
// Ordered lexicographically in that generator order, which fixes the
// canonical term order for serialization.
struct Monomial {
  std::vector<std::uint32_t> exps;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto e : exps) t += e;
    return t;
  }
};

// Element of Z[H, a0..a2m, l1..lm], the integral lattice inside the
// equivariant cohomology of complex projective 2m-space before imposing the
// relation prod_i (H - a_i) = 0. Sparse: zero coefficients are never stored.
class EquivariantPolynomial {
public:
  explicit EquivariantPolynomial(AmbientDim m) : m_(m) {}

  static EquivariantPolynomial zero(AmbientDim m) { return EquivariantPolynomial(m); }
  static EquivariantPolynomial constant(AmbientDim m, Coeff c);
  static EquivariantPolynomial hyperplane(AmbientDim m);      // H
  static EquivariantPolynomial alpha(AmbientDim m, int i);    // a_i, 0 <= i <= 2m
  static EquivariantPolynomial lambda(AmbientDim m, int i);   // l_i, 1 <= i <= m

  AmbientDim ambient() const { return m_; }
  int var_count() const { return 3 * m_.m + 2; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Coeff>& terms() const { return terms_; }

  // Largest H-exponent, -1 for the zero polynomial.
  std::int64_t h_degree() const;

  // Cohomological grading: 2 * (common total exponent) when homogeneous,
  // nullopt when mixed. The zero polynomial reports degree 0.
  std::optional<std::int64_t> degree() const;

  void add_term(Monomial mono, Coeff c);

  EquivariantPolynomial operator+(const EquivariantPolynomial& o) const;
  EquivariantPolynomial operator-(const EquivariantPolynomial& o) const;
  EquivariantPolynomial operator-() const;
  EquivariantPolynomial operator*(const EquivariantPolynomial& o) const;

  friend bool operator==(const EquivariantPolynomial&, const EquivariantPolynomial&) = default;

private:
  AmbientDim m_;
  std::map<Monomial, Coeff> terms_;
};

// prod_{i=0}^{2m} (H - a_i), the defining relation; monic of H-degree 2m+1.
EquivariantPolynomial relation_poly(AmbientDim m);

// Remainder of division by the relation in H: the canonical representative
// with H-degree <= 2m. Exact over the integers since the relation is monic.
EquivariantPolynomial normal_form(const EquivariantPolynomial& p);

// The restriction along the real torus: a0 -> 0, a_i -> l_i and
// a_{2m+1-i} -> -l_i for 1 <= i <= m. The result has no alpha variables.
EquivariantPolynomial restrict_weights(const EquivariantPolynomial& p);

// Text format: terms joined by " + " / " - ", each "c", "c*H^2*a0*l1^3", or
// "H*a1" (unit coefficients and unit exponents may be omitted). Variables are
// named H, a0..a2m, l1..lm. Canonical output lists terms in descending
// monomial order with explicit coefficients.
std::string to_text(const EquivariantPolynomial& p);
EquivariantPolynomial parse_poly(const std::string& text, AmbientDim m);

}  // namespace ogw

#endif
