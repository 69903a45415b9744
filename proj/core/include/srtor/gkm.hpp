#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "srtor/errors.hpp"
#include "srtor/intlinalg.hpp"
#include "srtor/polynomial.hpp"
#include "srtor/simplicial.hpp"
#include "srtor/stanley_reisner.hpp"

namespace srtor {

// Raised when (K, B) does not meet the restriction-map preconditions:
// K pure of dimension n - 1 and every vertex submatrix nonsingular.
class NotGkmError : public InputError {
 public:
  using InputError::InputError;
};

// One vertex: a maximal face {i_1 < ... < i_n} with its column submatrix and
// the rows of the inverse.
struct VertexData {
  FaceMask face = 0;
  std::vector<int> indices;  // i_1 < ... < i_n, 1-based
  IntMatrix submatrix;       // [beta_{i_1}, ..., beta_{i_n}]
  Integer det;
  RatMatrix inverse;         // row r is alpha_r
  bool integral = false;     // |det| == 1
};

// Restriction tuple: one polynomial in u_1..u_n per vertex, vertices in the
// order of K's maximal faces.
using GkmTuple = std::vector<RatPolynomial>;

struct GkmEdge {
  std::size_t from = 0;  // vertex indices into the maximal-face list
  std::size_t to = 0;
  int dropped = 0;       // vertex of K in from's face but not in to's (1-based)
  RatPolynomial weight;  // restriction of x_dropped at `from`
};

class GkmData {
 public:
  // Throws NotGkmError unless K is pure with faces of size n and every
  // vertex submatrix is nonsingular.
  GkmData(const SimplicialComplex& K, const SubgroupData& S);

  const std::vector<VertexData>& vertices() const { return vertices_; }
  const std::vector<GkmEdge>& edges() const { return edges_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  bool is_delzant() const;

  // Image of x_i (1-based) at vertex v.
  RatPolynomial restrict_variable(std::size_t v, std::size_t i) const;
  // Ring map x_i -> alpha^v_r . u at every vertex. Checks that every row of
  // B restricts to the constant tuple (u_k, ..., u_k).
  GkmTuple restrict(const Polynomial& p) const;
  // Same, for a polynomial already expressed in u_1..u_n.
  GkmTuple constant_tuple(const RatPolynomial& g) const;

  std::size_t vertex_of(FaceMask face) const;

 private:
  IntMatrix B_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexData> vertices_;
  std::vector<GkmEdge> edges_;
};

GkmTuple phi_restrictions(const SimplicialComplex& K, const SubgroupData& S, const Polynomial& p);

struct GkmCheckResult {
  bool ok = true;
  std::vector<GkmEdge> failing;
};

// For each edge (v, w), does the edge weight divide f_v - f_w in Q[u]?
GkmCheckResult gkm_check(const SimplicialComplex& K, const SubgroupData& S, const GkmTuple& tuple);
GkmCheckResult gkm_check(const GkmData& data, const GkmTuple& tuple);

// Does the linear form `divisor` divide p in Q[u]? Tested by restricting p to
// the hyperplane divisor = 0.
bool divides_linear(const RatPolynomial& divisor, const RatPolynomial& p);

struct TorsionElement {
  Polynomial f;          // x_{i_1} ... x_{i_n} for the chosen vertex
  IntVector g;           // coefficients of u_1..u_{n+1}, primitive over Z
  Polynomial g_in_x;     // same element as a linear form in x
  bool verified = false; // g * f reduces to 0 in Z[K]
  std::string g_text;    // "u3 - u2"
};

// `extra` is u_{n+1}; it must be independent of the rows of B. Throws
// InputError on a dependent form and InternalError if the product g * f
// fails to vanish.
TorsionElement find_torsion(const SimplicialComplex& K, const SubgroupData& S, const LinearForm& extra,
                            FaceMask vertex);

}  // namespace srtor
