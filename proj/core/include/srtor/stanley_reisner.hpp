#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srtor/intlinalg.hpp"
#include "srtor/polynomial.hpp"
#include "srtor/simplicial.hpp"

namespace srtor {

// sum_j c_j x_j, a degree-2 element of Z[x_1..x_m].
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(IntVector coeffs) : coeffs_(std::move(coeffs)) {}
  static LinearForm from_row(const IntMatrix& B, std::size_t row) { return LinearForm(B.row(row)); }

  std::size_t nvars() const { return coeffs_.size(); }
  const IntVector& coefficients() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  Polynomial to_polynomial() const { return Polynomial::linear(coeffs_); }
  std::string to_string() const { return to_polynomial().to_string(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  IntVector coeffs_;
};

// Parses "x2 + x3 - x4", "2x1-x2": linear terms only. Throws InputError on
// constants, higher-degree terms, or out-of-range variables.
LinearForm parse_linear_form(std::string_view text, std::size_t m);

std::vector<LinearForm> rows_as_forms(const IntMatrix& B);

// Monomial basis of Z[K] in one even degree, leading monomial first.
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(std::size_t degree, std::size_t nvars, std::vector<Monomial> monomials);

  std::size_t degree() const { return degree_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  // Coordinates of a reduced homogeneous polynomial of this degree. Throws
  // std::invalid_argument when p has a term outside the basis.
  IntVector coordinates(const Polynomial& p) const;
  Polynomial polynomial(const IntVector& coords) const;

 private:
  std::size_t degree_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t, GrlexDescending> index_;
};

// Throws InputError for odd degree.
GradedBasis monomial_basis(const SimplicialComplex& K, std::size_t degree);

// Closed-form count: sum over faces sigma of C(degree/2 - 1, |sigma| - 1).
std::size_t hilbert_coefficient(const SimplicialComplex& K, std::size_t degree);

// Drops every term whose support is not a face of K.
Polynomial reduce(const SimplicialComplex& K, const Polynomial& p);

// Matrix of multiplication by u from degree j to j + 2 in the canonical bases.
// Throws InputError when u is identically zero.
IntMatrix mult_matrix(const SimplicialComplex& K, const LinearForm& u, std::size_t degree);
IntMatrix mult_matrix(const SimplicialComplex& K, const LinearForm& u, const GradedBasis& source,
                      const GradedBasis& target);

// (Z[K] / (forms))_degree.
ZModule quotient_piece(const SimplicialComplex& K, const std::vector<LinearForm>& forms, std::size_t degree);

// Degree-wise view of Z[K]/(forms): the relation lattice in each degree and
// zero tests for homogeneous elements.
class GradedQuotient {
 public:
  GradedQuotient(const SimplicialComplex& K, std::vector<LinearForm> forms);

  const GradedBasis& basis(std::size_t degree) const;
  // Sublattice of Z^{basis(degree)} spanned by forms * Z[K]_{degree-2}.
  const Lattice& relations(std::size_t degree) const;
  ZModule piece(std::size_t degree) const;
  // p homogeneous; reduced modulo the Stanley-Reisner ideal first.
  bool is_zero(const Polynomial& p) const;

 private:
  void ensure(std::size_t degree) const;

  SimplicialComplex K_;
  std::vector<LinearForm> forms_;
  mutable std::deque<GradedBasis> bases_;
  mutable std::deque<Lattice> relations_;
};

struct Annihilator {
  std::size_t degree = 0;  // degree of g
  Polynomial g;            // polynomial in u_1..u_n
};

// For every even e <= max_degree, a Z-basis of the homogeneous g of degree e in
// Z[u_1..u_n] with g * f = 0 in Z[K]. f must be homogeneous and nonzero
// after reduction (InputError otherwise).
std::vector<Annihilator> annihilator_search(const SimplicialComplex& K, const SubgroupData& S, const Polynomial& f,
                                            std::size_t max_degree);

// Linear combination sum_i c_i u_i rewritten in the x variables.
Polynomial u_polynomial_in_x(const IntMatrix& B, const Polynomial& g);

}  // namespace srtor
