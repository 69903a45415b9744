#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "srtor/intlinalg.hpp"
#include "srtor/matrix.hpp"

namespace srtor {

// Subset of [m] as a bitmask; bit i-1 stands for vertex i.
using FaceMask = std::uint64_t;
inline constexpr std::size_t kMaxVertices = 64;

FaceMask face_mask(const std::vector<int>& vertices, std::size_t m);
std::vector<int> face_vertices(FaceMask mask);
std::string face_to_string(FaceMask mask);  // "{1 2 4}"
inline std::size_t face_size(FaceMask mask) { return static_cast<std::size_t>(__builtin_popcountll(mask)); }

// Simplicial complex on [m], stored through its maximal faces. Vertices in no
// face are ghost vertices; their singletons are minimal non-faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Faces may be non-maximal and repeated; they are absorbed. Maximal faces
  // keep the order in which they first appear. Throws InputError on indices
  // outside [m] or m > 64.
  static SimplicialComplex build(std::size_t m, const std::vector<std::vector<int>>& faces);
  static SimplicialComplex from_masks(std::size_t m, const std::vector<FaceMask>& faces);

  // Boundary of the (m-1)-simplex on [m].
  static SimplicialComplex simplex_boundary(std::size_t m);
  static SimplicialComplex full_simplex(std::size_t m);

  std::size_t vertex_count() const { return m_; }
  const std::vector<FaceMask>& maximal_faces() const { return maximal_; }

  bool is_face(FaceMask sigma) const;
  // 1-based vertices; throws InputError when out of range.
  bool is_face(const std::vector<int>& sigma) const;

  // Every face including the empty one, ordered by size then mask.
  std::vector<FaceMask> faces() const;
  // Inclusion-minimal non-faces, ordered by size then vertex list.
  std::vector<FaceMask> minimal_nonfaces() const;

  std::size_t max_face_size() const;
  bool is_pure() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<FaceMask> maximal_;
};

// Integer n x m matrix B of full rank n over Q; row i gives the linear form
// u_i = sum_j B_ij x_j.
class SubgroupData {
 public:
  SubgroupData() = default;
  // Throws InputError when rank_Q(B) < rows(B). A 0 x m matrix is allowed.
  explicit SubgroupData(IntMatrix B);
  SubgroupData(IntMatrix B, std::size_t m);

  const IntMatrix& matrix() const { return B_; }
  std::size_t n() const { return B_.rows(); }
  std::size_t m() const { return B_.cols(); }

 private:
  IntMatrix B_;
};

enum class CriterionStatus { Pass, Fail, NotApplicable };
const char* to_string(CriterionStatus s);

struct FaceDeterminant {
  FaceMask face = 0;
  Integer det;
};

struct LocalFreenessReport {
  CriterionStatus status = CriterionStatus::NotApplicable;
  std::string reason;
  std::vector<FaceDeterminant> faces;  // maximal-face order
  std::vector<std::string> warnings;
};

// Pure K with maximal faces of size n: PASS iff every column submatrix B_sigma
// over a maximal face has nonzero determinant. Otherwise NOT_APPLICABLE.
LocalFreenessReport check_local_freeness(const SimplicialComplex& K, const SubgroupData& S);

// True iff B : Z^m -> Z^n is onto, i.e. every invariant factor of B is 1.
bool check_connected_kernel(const SubgroupData& S);

// Columns of B indexed by the vertices of sigma, in increasing order.
IntMatrix column_submatrix(const IntMatrix& B, FaceMask sigma);

}  // namespace srtor
