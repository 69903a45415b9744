#pragma once

// Slow, independent reference computations used to cross-check the library.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "srtor/intlinalg.hpp"
#include "srtor/polynomial.hpp"
#include "srtor/simplicial.hpp"
#include "srtor/stanley_reisner.hpp"

namespace oracle {

using srtor::FaceMask;
using srtor::Integer;
using srtor::IntMatrix;
using srtor::Monomial;
using srtor::SimplicialComplex;

inline std::string data_path(const std::string& name) { return std::string(SRTOR_TEST_DATA_DIR) + "/" + name; }

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix A(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) A(r, c) = dist(rng);
  return A;
}

// Laplace expansion.
inline Integer laplace_det(const IntMatrix& A) {
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  if (n == 1) return A(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (A(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = A(r, cc);
    const Integer term = A(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}, where
// D_k is the gcd of all k x k minors.
inline std::vector<Integer> determinantal_invariants(const IntMatrix& A) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(A.rows(), A.cols()); ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(A.rows(), k))
      for (const auto& cs : subsets(A.cols(), k)) {
        IntMatrix M(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) M(a, b) = A(rs[a], cs[b]);
        const Integer d = laplace_det(M);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// All monomials of the given exponent sum whose support is a face of K.
inline std::vector<Monomial> face_monomials(const SimplicialComplex& K, std::size_t exponent_sum) {
  std::vector<Monomial> out;
  for (const auto& mono : srtor::monomials_of_exponent_sum(K.vertex_count(), exponent_sum))
    if (K.is_face(mono.support())) out.push_back(mono);
  return out;
}

// Koszul homology with a monomial-major basis, differential built from
// polynomial products, and the group read off from ranks and the Smith form
// of the incoming differential.
class KoszulOracle {
 public:
  KoszulOracle(const SimplicialComplex& K, std::vector<srtor::LinearForm> forms) : K_(K), forms_(std::move(forms)) {}

  srtor::ZModule homology(std::size_t p, std::size_t j) const {
    const IntMatrix d_in = differential(p + 1, j);
    const IntMatrix d_out = differential(p, j);
    const std::size_t dim = basis(p, j).size();
    const std::size_t rank_out = srtor::rational_rank(d_out);
    const std::size_t rank_in = srtor::rational_rank(d_in);
    std::vector<Integer> torsion;
    for (const auto& d : srtor::invariant_factors(d_in))
      if (d != 1) torsion.push_back(d);
    return srtor::ZModule(dim - rank_out - rank_in, torsion);
  }

 private:
  struct Cell {
    Monomial mono;
    std::vector<std::size_t> subset;
    bool operator<(const Cell& o) const {
      if (mono.exponents() != o.mono.exponents()) return mono.exponents() < o.mono.exponents();
      return subset < o.subset;
    }
  };

  std::vector<Cell> basis(std::size_t p, std::size_t j) const {
    std::vector<Cell> out;
    if (p > forms_.size() || j < 2 * p) return out;
    for (const auto& mono : face_monomials(K_, (j - 2 * p) / 2))
      for (const auto& S : subsets(forms_.size(), p)) out.push_back({mono, S});
    return out;
  }

  // C(p, j) -> C(p - 1, j)
  IntMatrix differential(std::size_t p, std::size_t j) const {
    const auto src = basis(p, j);
    const auto dst = p == 0 ? std::vector<Cell>{} : basis(p - 1, j);
    std::map<Cell, std::size_t> index;
    for (std::size_t k = 0; k < dst.size(); ++k) index.emplace(dst[k], k);
    IntMatrix D(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const Cell& cell = src[c];
      for (std::size_t pos = 0; pos < cell.subset.size(); ++pos) {
        std::vector<std::size_t> rest = cell.subset;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        const srtor::Polynomial prod =
            Integer(pos % 2 == 0 ? 1 : -1) * forms_[cell.subset[pos]].to_polynomial();
        srtor::Polynomial shifted(K_.vertex_count());
        for (const auto& [m, coeff] : prod.terms()) shifted.add_term(m * cell.mono, coeff);
        for (const auto& [m, coeff] : shifted.terms()) {
          if (!K_.is_face(m.support())) continue;
          D(index.at(Cell{m, rest}), c) += coeff;
        }
      }
    }
    return D;
  }

  const SimplicialComplex& K_;
  std::vector<srtor::LinearForm> forms_;
};

}  // namespace oracle
