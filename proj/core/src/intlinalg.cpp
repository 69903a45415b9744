#include "srtor/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "srtor/errors.hpp"

namespace srtor {

ZModule::ZModule(std::size_t rank, std::vector<Integer> torsion) : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw InputError("ZModule: invariant factor " + torsion_[i].get_str() + " is not >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw InputError("ZModule: invariant factors must form a divisibility chain");
  }
}

ZModule ZModule::from_smith_diagonal(std::size_t free_rank, const std::vector<Integer>& diagonal) {
  std::vector<Integer> torsion;
  for (const auto& d : diagonal) {
    Integer a = abs(d);
    if (a >= 2) torsion.push_back(a);
  }
  return ZModule(free_rank, std::move(torsion));
}

std::string ZModule::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (rank_ > 0) s = rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_);
  for (const auto& d : torsion_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

namespace {

template <bool Track>
void smith_reduce(IntMatrix& S, IntMatrix* U, IntMatrix* V) {
  const std::size_t rows = S.rows(), cols = S.cols();
  const std::size_t limit = std::min(rows, cols);
  Integer q;
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      // least |entry| in the trailing block, first in (row, col) order
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (S(i, j) == 0) continue;
          if (pr == rows || mpz_cmpabs(S(i, j).get_mpz_t(), S(pr, pc).get_mpz_t()) < 0) {
            pr = i;
            pc = j;
          }
        }
      if (pr == rows) {
        return;  // trailing block is zero
      }
      S.swap_rows(t, pr);
      S.swap_cols(t, pc);
      if constexpr (Track) {
        U->swap_rows(t, pr);
        V->swap_cols(t, pc);
      }

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (S(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), S(i, t).get_mpz_t(), S(t, t).get_mpz_t());
        q = -q;
        S.add_row_multiple(i, t, q);
        if constexpr (Track) U->add_row_multiple(i, t, q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (S(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), S(t, j).get_mpz_t(), S(t, t).get_mpz_t());
        q = -q;
        S.add_col_multiple(j, t, q);
        if constexpr (Track) V->add_col_multiple(j, t, q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      S.add_row_multiple(t, bad, Integer(1));
      if constexpr (Track) U->add_row_multiple(t, bad, Integer(1));
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      if constexpr (Track) U->negate_row(t);
    }
  }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
  SmithForm out{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols())};
  smith_reduce<true>(out.S, &out.U, &out.V);
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& A) {
  IntMatrix S = A;
  smith_reduce<false>(S, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) out.push_back(S(i, i));
  return out;
}

std::size_t integer_rank(const IntMatrix& A) { return hermite_normal_form(A).rank; }

HermiteForm hermite_normal_form(const IntMatrix& A) {
  HermiteForm out{A, IntMatrix::identity(A.rows()), 0};
  IntMatrix& H = out.H;
  IntMatrix& T = out.T;
  const std::size_t rows = H.rows(), cols = H.cols();
  std::size_t r = 0;
  Integer q;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-eliminate column c below row r
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (H(i, c) != 0 && (best == rows || mpz_cmpabs(H(i, c).get_mpz_t(), H(best, c).get_mpz_t()) < 0)) best = i;
      if (best == rows) break;
      H.swap_rows(r, best);
      T.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (H(i, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
        q = -q;
        H.add_row_multiple(i, r, q);
        T.add_row_multiple(i, r, q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      H.negate_row(r);
      T.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      if (H(k, c) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), H(k, c).get_mpz_t(), H(r, c).get_mpz_t());
      q = -q;
      H.add_row_multiple(k, r, q);
      T.add_row_multiple(k, r, q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

namespace {

IntMatrix leading_rows(const IntMatrix& M, std::size_t count) {
  IntMatrix out(count, M.cols());
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) out(r, c) = M(r, c);
  return out;
}

}  // namespace

IntMatrix kernel_matrix(const IntMatrix& A) {
  // T * A^T = H; rows of T facing zero rows of H span the kernel.
  HermiteForm hf = hermite_normal_form(A.transpose());
  const std::size_t n = A.cols();
  IntMatrix raw(n - hf.rank, n);
  for (std::size_t r = hf.rank; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) raw(r - hf.rank, c) = hf.T(r, c);
  HermiteForm reduced = hermite_normal_form(raw);
  return leading_rows(reduced.H, reduced.rank);
}

std::vector<IntVector> kernel_basis(const IntMatrix& A) {
  IntMatrix K = kernel_matrix(A);
  std::vector<IntVector> out;
  out.reserve(K.rows());
  for (std::size_t r = 0; r < K.rows(); ++r) out.push_back(K.row(r));
  return out;
}

ZModule cokernel_structure(const IntMatrix& A) {
  std::vector<Integer> diag = invariant_factors(A);
  return ZModule::from_smith_diagonal(A.rows() - diag.size(), diag);
}

Lattice Lattice::from_rows(const IntMatrix& generators) {
  HermiteForm hf = hermite_normal_form(generators);
  Lattice L(generators.cols());
  L.basis_ = leading_rows(hf.H, hf.rank);
  for (std::size_t r = 0; r < hf.rank; ++r) {
    std::size_t c = 0;
    while (L.basis_(r, c) == 0) ++c;
    L.pivots_.push_back(c);
  }
  return L;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("Lattice::coordinates: dimension mismatch");
  IntVector rest = v;
  IntVector coeff(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t p = pivots_[k];
    if (rest[p] == 0) continue;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_(k, p).get_mpz_t())) return std::nullopt;
    coeff[k] = rest[p] / basis_(k, p);
    for (std::size_t c = p; c < dim(); ++c) rest[c] -= coeff[k] * basis_(k, c);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coeff;
}

bool Lattice::contains(const Lattice& other) const {
  for (std::size_t r = 0; r < other.rank(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

std::optional<std::vector<Rational>> Lattice::rational_coordinates(const IntVector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("Lattice::rational_coordinates: dimension mismatch");
  std::vector<Rational> rest(v.begin(), v.end());
  std::vector<Rational> coeff(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t p = pivots_[k];
    if (rest[p] == 0) continue;
    coeff[k] = rest[p] / Rational(basis_(k, p));
    for (std::size_t c = p; c < dim(); ++c) rest[c] -= coeff[k] * basis_(k, c);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coeff;
}

Integer Lattice::order_of(const IntVector& v) const {
  auto coeff = rational_coordinates(v);
  if (!coeff) return 0;
  Integer t = 1;
  for (const auto& c : *coeff) mpz_lcm(t.get_mpz_t(), t.get_mpz_t(), c.get_den_mpz_t());
  return t;
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice_sum: dimension mismatch");
  return Lattice::from_rows(vstack(a.basis(), b.basis()));
}

ZModule quotient_structure(const Lattice& big, const Lattice& small) {
  if (big.dim() != small.dim()) throw std::invalid_argument("quotient_structure: dimension mismatch");
  IntMatrix coords(big.rank(), small.rank());
  for (std::size_t j = 0; j < small.rank(); ++j) {
    auto c = big.coordinates(small.basis().row(j));
    if (!c) throw InternalError("quotient_structure: sublattice not contained in ambient lattice");
    for (std::size_t i = 0; i < big.rank(); ++i) coords(i, j) = (*c)[i];
  }
  return cokernel_structure(coords);
}

ZModule homology_subquotient(const IntMatrix& d_out, const IntMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw std::invalid_argument("homology_subquotient: cols(d_out) != rows(d_in)");
  if (!(d_out * d_in).is_zero()) throw InternalError("homology_subquotient: d_out * d_in != 0");
  Lattice cycles = Lattice::from_rows(kernel_matrix(d_out));
  Lattice boundaries = Lattice::from_columns(d_in);
  return quotient_structure(cycles, boundaries);
}

std::optional<IntVector> solve_integral(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_integral: dimension mismatch");
  // T * A^T = H: coordinates of b in the rows of H, pulled back through T.
  // Re-reducing an HNF basis is the identity, so L's basis is exactly H.
  HermiteForm hf = hermite_normal_form(A.transpose());
  Lattice L = Lattice::from_rows(leading_rows(hf.H, hf.rank));
  auto coeff = L.coordinates(b);
  if (!coeff) return std::nullopt;
  IntVector x(A.cols());
  for (std::size_t k = 0; k < hf.rank; ++k)
    for (std::size_t c = 0; c < A.cols(); ++c) x[c] += (*coeff)[k] * hf.T(k, c);
  return x;
}

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && M(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      M.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), M(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::size_t rational_rank(const RatMatrix& A) {
  RatMatrix M = A;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < M.cols() && rank < M.rows(); ++c) {
    std::size_t p = rank;
    while (p < M.rows() && M(p, c) == 0) ++p;
    if (p == M.rows()) continue;
    M.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < M.rows(); ++i) {
      if (M(i, c) == 0) continue;
      Rational f = -M(i, c) / M(rank, c);
      M.add_row_multiple(i, rank, f);
    }
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const IntMatrix& A) { return rational_rank(to_rational(A)); }

RatMatrix rational_inverse(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw InputError("rational_inverse: matrix not square");
  const std::size_t n = A.rows();
  RatMatrix M = to_rational(A);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M(p, c) == 0) ++p;
    if (p == n) throw InputError("rational_inverse: matrix is singular");
    M.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rational pivot = M(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      M(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || M(i, c) == 0) continue;
      Rational f = -M(i, c);
      M.add_row_multiple(i, c, f);
      inv.add_row_multiple(i, c, f);
    }
  }
  return inv;
}

}  // namespace srtor
