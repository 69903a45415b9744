#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "srtor/matrix.hpp"

namespace srtor {

// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dk with
// d1 | d2 | ... | dk and every di >= 2.
class ZModule {
 public:
  ZModule() = default;
  // Throws InputError when the torsion list violates the invariant-factor form.
  ZModule(std::size_t rank, std::vector<Integer> torsion);

  // Builds the module Z^free_rank + sum Z/d over the given diagonal entries,
  // dropping units. Entries must already form a divisibility chain.
  static ZModule from_smith_diagonal(std::size_t free_rank, const std::vector<Integer>& diagonal);

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }
  bool is_torsion_free() const { return torsion_.empty(); }

  // "0", "Z", "Z^2 + Z/2 + Z/6"
  std::string to_string() const;

  friend bool operator==(const ZModule&, const ZModule&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

struct SmithForm {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix S;  // rows x cols, diagonal with d1 | d2 | ... and d >= 0
  IntMatrix V;  // cols x cols, unimodular
};

// U * A * V == S. Pivot is always the nonzero entry of least absolute value,
// ties broken by (row, col) order, so the output is a function of A alone.
SmithForm smith_normal_form(const IntMatrix& A);

// Nonzero diagonal of the Smith form (same algorithm, no transforms tracked).
std::vector<Integer> invariant_factors(const IntMatrix& A);

std::size_t integer_rank(const IntMatrix& A);

struct HermiteForm {
  IntMatrix H;  // row echelon: positive pivots, entries above each pivot in [0, pivot)
  IntMatrix T;  // unimodular, T * A == H
  std::size_t rank = 0;  // number of nonzero rows of H (they come first)
};

HermiteForm hermite_normal_form(const IntMatrix& A);

// Z-basis of {v : A v = 0}, Hermite-reduced, one vector per entry.
std::vector<IntVector> kernel_basis(const IntMatrix& A);
// Same basis as the rows of a (cols(A) - rank) x cols(A) matrix.
IntMatrix kernel_matrix(const IntMatrix& A);

// Z^rows / image(A).
ZModule cokernel_structure(const IntMatrix& A);

// ker(d_out) / im(d_in). Throws InternalError if d_out * d_in != 0 and
// std::invalid_argument on a shape mismatch.
ZModule homology_subquotient(const IntMatrix& d_out, const IntMatrix& d_in);

// Sublattice of Z^dim, kept as the nonzero rows of its Hermite normal form.
// Two lattices are equal iff their stored bases are identical.
class Lattice {
 public:
  explicit Lattice(std::size_t dim = 0) : basis_(0, dim) {}

  static Lattice from_rows(const IntMatrix& generators);
  static Lattice from_columns(const IntMatrix& generators) { return from_rows(generators.transpose()); }

  std::size_t dim() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  // Coefficients c with sum c_i basis_i == v, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;
  // Coordinates over Q, if v lies in the rational span.
  std::optional<std::vector<Rational>> rational_coordinates(const IntVector& v) const;
  // Least t > 0 with t*v in the lattice; 0 when no such t exists.
  Integer order_of(const IntVector& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);

// big / small as a ZModule; small must be contained in big.
ZModule quotient_structure(const Lattice& big, const Lattice& small);

// Some x with A x == b over Z, or nothing when no integral solution exists.
std::optional<IntVector> solve_integral(const IntMatrix& A, const IntVector& b);

// Exact determinant (fraction-free Bareiss elimination). A must be square.
Integer determinant(const IntMatrix& A);

// Rank over Q by Gaussian elimination in rational arithmetic. Shares no
// code with the Smith/Hermite routines, so it can serve as a cross-check.
std::size_t rational_rank(const IntMatrix& A);
std::size_t rational_rank(const RatMatrix& A);

// Inverse over Q; throws InputError if A is singular or not square.
RatMatrix rational_inverse(const IntMatrix& A);

}  // namespace srtor
