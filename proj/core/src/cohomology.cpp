#include "ogw/cohomology.hpp"

#include <algorithm>
#include <cctype>

namespace ogw {

namespace {

// Variable layout: slot 0 is H, slots 1..2m+1 are a0..a2m, the final m slots
// are l1..lm.
constexpr int kH = 0;
int alpha_slot(AmbientDim m, int i) {
  require(i >= 0 && i <= 2 * m.m, "alpha index out of range");
  return 1 + i;
}
int lambda_slot(AmbientDim m, int i) {
  require(i >= 1 && i <= m.m, "lambda index out of range");
  return 2 * m.m + 1 + i;
}

Monomial unit_monomial(int nvars, int slot, std::uint32_t e = 1) {
  Monomial mono;
  mono.exps.assign(static_cast<std::size_t>(nvars), 0);
  mono.exps[static_cast<std::size_t>(slot)] = e;
  return mono;
}

}  // namespace

EquivariantPolynomial EquivariantPolynomial::constant(AmbientDim m, Coeff c) {
  EquivariantPolynomial p(m);
  Monomial one;
  one.exps.assign(static_cast<std::size_t>(p.var_count()), 0);
  p.add_term(std::move(one), std::move(c));
  return p;
}

EquivariantPolynomial EquivariantPolynomial::hyperplane(AmbientDim m) {
  EquivariantPolynomial p(m);
  p.add_term(unit_monomial(p.var_count(), kH), 1);
  return p;
}

EquivariantPolynomial EquivariantPolynomial::alpha(AmbientDim m, int i) {
  EquivariantPolynomial p(m);
  p.add_term(unit_monomial(p.var_count(), alpha_slot(m, i)), 1);
  return p;
}

EquivariantPolynomial EquivariantPolynomial::lambda(AmbientDim m, int i) {
  EquivariantPolynomial p(m);
  p.add_term(unit_monomial(p.var_count(), lambda_slot(m, i)), 1);
  return p;
}

std::int64_t EquivariantPolynomial::h_degree() const {
  std::int64_t d = -1;
  for (const auto& [mono, c] : terms_) d = std::max<std::int64_t>(d, mono.exps[kH]);
  return d;
}

std::optional<std::int64_t> EquivariantPolynomial::degree() const {
  if (terms_.empty()) return 0;
  const std::int64_t t = terms_.begin()->first.total();
  for (const auto& [mono, c] : terms_)
    if (mono.total() != t) return std::nullopt;
  return 2 * t;
}

void EquivariantPolynomial::add_term(Monomial mono, Coeff c) {
  require(mono.exps.size() == static_cast<std::size_t>(var_count()),
          "monomial arity does not match the ambient dimension");
  if (c == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(std::move(mono), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

EquivariantPolynomial EquivariantPolynomial::operator+(const EquivariantPolynomial& o) const {
  require(m_ == o.m_, "ambient dimensions must agree");
  EquivariantPolynomial out = *this;
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
  return out;
}

EquivariantPolynomial EquivariantPolynomial::operator-() const {
  EquivariantPolynomial out(m_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

EquivariantPolynomial EquivariantPolynomial::operator-(const EquivariantPolynomial& o) const {
  return *this + (-o);
}

EquivariantPolynomial EquivariantPolynomial::operator*(const EquivariantPolynomial& o) const {
  require(m_ == o.m_, "ambient dimensions must agree");
  EquivariantPolynomial out(m_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial mono = ma;
      for (std::size_t i = 0; i < mono.exps.size(); ++i) mono.exps[i] += mb.exps[i];
      out.add_term(std::move(mono), ca * cb);
    }
  }
  return out;
}

EquivariantPolynomial relation_poly(AmbientDim m) {
  EquivariantPolynomial p = EquivariantPolynomial::constant(m, 1);
  const EquivariantPolynomial h = EquivariantPolynomial::hyperplane(m);
  for (int i = 0; i <= 2 * m.m; ++i) p = p * (h - EquivariantPolynomial::alpha(m, i));
  return p;
}

EquivariantPolynomial normal_form(const EquivariantPolynomial& p) {
  const AmbientDim m = p.ambient();
  const EquivariantPolynomial rel = relation_poly(m);
  const std::int64_t bound = 2 * m.m;

  EquivariantPolynomial rem = p;
  while (rem.h_degree() > bound) {
    const std::int64_t d = rem.h_degree();
    // Quotient term: the H-leading coefficient of rem, shifted down by the
    // relation's H-degree 2m+1. The relation is monic, so subtracting
    // q * rel cancels every H^d term exactly.
    EquivariantPolynomial q(m);
    for (const auto& [mono, c] : rem.terms()) {
      if (static_cast<std::int64_t>(mono.exps[kH]) != d) continue;
      Monomial shifted = mono;
      shifted.exps[kH] = static_cast<std::uint32_t>(d - (2 * m.m + 1));
      q.add_term(std::move(shifted), c);
    }
    rem = rem - q * rel;
    internal_check(rem.h_degree() < d, "division by the monic relation must reduce H-degree");
  }
  return rem;
}

EquivariantPolynomial restrict_weights(const EquivariantPolynomial& p) {
  const AmbientDim m = p.ambient();
  EquivariantPolynomial out(m);
  for (const auto& [mono, c] : p.terms()) {
    if (mono.exps[alpha_slot(m, 0)] > 0) continue;  // a0 -> 0
    Monomial image = mono;
    std::int64_t flips = 0;
    for (int i = 1; i <= m.m; ++i) {
      const std::uint32_t low = mono.exps[alpha_slot(m, i)];
      const std::uint32_t high = mono.exps[alpha_slot(m, 2 * m.m + 1 - i)];
      image.exps[alpha_slot(m, i)] = 0;
      image.exps[alpha_slot(m, 2 * m.m + 1 - i)] = 0;
      image.exps[lambda_slot(m, i)] += low + high;
      flips += high;
    }
    out.add_term(std::move(image), flips % 2 == 0 ? c : -c);
  }
  return out;
}

namespace {

std::string var_name(AmbientDim m, int slot) {
  if (slot == kH) return "H";
  if (slot <= 2 * m.m + 1) return "a" + std::to_string(slot - 1);
  return "l" + std::to_string(slot - (2 * m.m + 1));
}

}  // namespace

std::string to_text(const EquivariantPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  // Descending monomial order: leading term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Coeff a = negative ? Coeff(-c) : c;
    std::string term = a.str();
    for (std::size_t slot = 0; slot < mono.exps.size(); ++slot) {
      if (mono.exps[slot] == 0) continue;
      term += "*" + var_name(p.ambient(), static_cast<int>(slot));
      if (mono.exps[slot] > 1) term += "^" + std::to_string(mono.exps[slot]);
    }
    out += term;
  }
  return out;
}

namespace {

// Recursive-descent parser for the text format above.
class PolyParser {
public:
  PolyParser(const std::string& text, AmbientDim m) : text_(text), m_(m) {}

  EquivariantPolynomial parse() {
    EquivariantPolynomial p(m_);
    skip_ws();
    bool negative = take_sign();
    p = p + parse_term(negative);
    skip_ws();
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      require(c == '+' || c == '-', err("expected '+' or '-' between terms"));
      ++pos_;
      skip_ws();
      p = p + parse_term(c == '-');
      skip_ws();
    }
    return p;
  }

private:
  EquivariantPolynomial parse_term(bool negative) {
    Coeff c = 1;
    Monomial mono;
    mono.exps.assign(static_cast<std::size_t>(3 * m_.m + 2), 0);
    bool saw_factor = false;

    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      c = parse_integer();
      saw_factor = true;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        parse_factors(mono);
      }
    } else {
      parse_factors(mono);
      saw_factor = true;
    }
    require(saw_factor, err("empty term"));

    EquivariantPolynomial term(m_);
    term.add_term(std::move(mono), negative ? -c : c);
    return term;
  }

  void parse_factors(Monomial& mono) {
    parse_factor(mono);
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      skip_ws();
      parse_factor(mono);
      skip_ws();
    }
  }

  void parse_factor(Monomial& mono) {
    require(pos_ < text_.size(), err("expected a variable"));
    const char v = text_[pos_];
    int slot = -1;
    if (v == 'H') {
      ++pos_;
      slot = kH;
    } else if (v == 'a' || v == 'l') {
      ++pos_;
      const std::int64_t idx = static_cast<std::int64_t>(parse_integer());
      if (v == 'a') {
        require(idx <= 2 * m_.m, err("alpha index exceeds 2m"));
        slot = alpha_slot(m_, static_cast<int>(idx));
      } else {
        require(idx >= 1 && idx <= m_.m, err("lambda index out of range"));
        slot = lambda_slot(m_, static_cast<int>(idx));
      }
    } else {
      require(false, err(std::string("unknown variable '") + v + "'"));
    }
    std::uint32_t e = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const Coeff raw = parse_integer();
      require(raw >= 0 && raw <= 1000000, err("exponent out of range"));
      e = static_cast<std::uint32_t>(raw);
    }
    mono.exps[static_cast<std::size_t>(slot)] += e;
  }

  Coeff parse_integer() {
    require(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])),
            err("expected an integer"));
    Coeff value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  bool take_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const bool neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string err(const std::string& what) const {
    return "polynomial parse error at offset " + std::to_string(pos_) + ": " + what;
  }

  const std::string& text_;
  AmbientDim m_;
  std::size_t pos_ = 0;
};

}  // namespace

EquivariantPolynomial parse_poly(const std::string& text, AmbientDim m) {
  std::string trimmed = text;
  // "0" denotes the zero polynomial.
  const auto first = trimmed.find_first_not_of(" \t\n");
  const auto last = trimmed.find_last_not_of(" \t\n");
  if (first != std::string::npos && trimmed.substr(first, last - first + 1) == "0")
    return EquivariantPolynomial::zero(m);
  require(first != std::string::npos, "polynomial text must not be empty");
  return PolyParser(text, m).parse();
}

}  // namespace ogw
