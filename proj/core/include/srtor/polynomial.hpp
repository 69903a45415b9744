#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srtor/matrix.hpp"
#include "srtor/simplicial.hpp"

namespace srtor {

// Exponent vector over a fixed number of variables. Degrees follow the
// topological convention: each variable has degree 2.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.exps_.at(index) = 1;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::size_t exponent_sum() const {
    std::size_t s = 0;
    for (auto e : exps_) s += e;
    return s;
  }
  std::size_t degree() const { return 2 * exponent_sum(); }

  // Set of variables with positive exponent (bit i-1 for variable i).
  FaceMask support() const {
    FaceMask mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) mask |= FaceMask{1} << i;
    return mask;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("Monomial product: variable count mismatch");
    Monomial out = a;
    for (std::size_t i = 0; i < b.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // "x1^2*x3"; empty string for the unit monomial.
  std::string to_string(char var = 'x') const;

 private:
  std::vector<std::uint32_t> exps_;
};

// Graded lexicographic order with x1 > x2 > ... > xm; "less" means larger
// monomial so maps iterate from the leading term down.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const std::size_t da = a.exponent_sum(), db = b.exponent_sum();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
  }
};

// Monomials in nvars variables with the given exponent sum, leading first.
std::vector<Monomial> monomials_of_exponent_sum(std::size_t nvars, std::size_t sum);

template <class Coeff>
class BasicPolynomial {
 public:
  using Terms = std::map<Monomial, Coeff, GrlexDescending>;

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static BasicPolynomial constant(std::size_t nvars, const Coeff& c) {
    BasicPolynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static BasicPolynomial variable(std::size_t nvars, std::size_t index) {
    BasicPolynomial p(nvars);
    p.add_term(Monomial::variable(nvars, index), Coeff(1));
    return p;
  }
  // sum_i coeffs[i] * var_i
  template <class C>
  static BasicPolynomial linear(const std::vector<C>& coeffs) {
    BasicPolynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(coeffs.size(), i), Coeff(coeffs[i]));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Coeff coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("Polynomial: monomial has wrong variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Topological degree (2 * exponent sum) when homogeneous.
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::size_t d = terms_.begin()->first.exponent_sum();
    for (const auto& [m, c] : terms_)
      if (m.exponent_sum() != d) return false;
    return true;
  }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, Coeff(-c));
    return *this;
  }
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator-(const BasicPolynomial& a) { return BasicPolynomial(a.nvars_) - a; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_compatible(b);
    BasicPolynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Coeff(ca * cb));
    return out;
  }
  friend BasicPolynomial operator*(const Coeff& s, const BasicPolynomial& p) {
    BasicPolynomial out(p.nvars_);
    for (const auto& [m, c] : p.terms_) out.add_term(m, Coeff(s * c));
    return out;
  }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Canonical text: "2x1^2 - x2*x3", leading term first, "0" when zero.
  std::string to_string(char var = 'x') const;

 private:
  void check_compatible(const BasicPolynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using Polynomial = BasicPolynomial<Integer>;
using RatPolynomial = BasicPolynomial<Rational>;

std::string coefficient_term_string(const Integer& c, const std::string& monomial);
std::string coefficient_term_string(const Rational& c, const std::string& monomial);

template <class Coeff>
std::string BasicPolynomial<Coeff>::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Coeff magnitude = negative ? Coeff(-c) : c;
    const std::string body = coefficient_term_string(magnitude, m.to_string(var));
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// Ring map sending variable i to images[i]; all images share one variable count.
template <class Coeff>
BasicPolynomial<Coeff> substitute(const BasicPolynomial<Coeff>& p, const std::vector<BasicPolynomial<Coeff>>& images,
                                  std::size_t target_nvars) {
  if (images.size() != p.nvars()) throw std::invalid_argument("substitute: one image per variable required");
  BasicPolynomial<Coeff> out(target_nvars);
  const auto one = BasicPolynomial<Coeff>::constant(target_nvars, Coeff(1));
  for (const auto& [m, c] : p.terms()) {
    BasicPolynomial<Coeff> term = BasicPolynomial<Coeff>::constant(target_nvars, c);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) term = term * images[i];
    out += term;
  }
  return out;
}

RatPolynomial to_rational(const Polynomial& p);

// Parses the canonical text form with the given variable letter. Accepts
// ASCII '-' and U+2212 as minus, optional '*' between a coefficient and
// the first factor, and "x3^2". Throws InputError on malformed text or a
// variable index outside [1, nvars].
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, char var = 'x');

}  // namespace srtor
