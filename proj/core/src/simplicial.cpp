#include "srtor/simplicial.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "srtor/errors.hpp"

namespace srtor {

namespace {

void check_vertex_count(std::size_t m) {
  if (m > kMaxVertices) throw InputError("at most 64 vertices are supported, got m = " + std::to_string(m));
}

FaceMask all_vertices(std::size_t m) { return m == 64 ? ~FaceMask{0} : (FaceMask{1} << m) - 1; }

bool mask_less(FaceMask a, FaceMask b) {
  if (face_size(a) != face_size(b)) return face_size(a) < face_size(b);
  return face_vertices(a) < face_vertices(b);
}

}  // namespace

FaceMask face_mask(const std::vector<int>& vertices, std::size_t m) {
  FaceMask mask = 0;
  for (int v : vertices) {
    if (v < 1 || static_cast<std::size_t>(v) > m)
      throw InputError("vertex " + std::to_string(v) + " out of range [1, " + std::to_string(m) + "]");
    mask |= FaceMask{1} << (v - 1);
  }
  return mask;
}

std::vector<int> face_vertices(FaceMask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i + 1);
  return out;
}

std::string face_to_string(FaceMask mask) {
  std::string s = "{";
  bool first = true;
  for (int v : face_vertices(mask)) {
    if (!first) s += ' ';
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

SimplicialComplex SimplicialComplex::from_masks(std::size_t m, const std::vector<FaceMask>& faces) {
  check_vertex_count(m);
  const FaceMask universe = all_vertices(m);
  SimplicialComplex K;
  K.m_ = m;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const FaceMask f = faces[i];
    if ((f & ~universe) != 0) throw InputError("face " + face_to_string(f) + " is not a subset of [m]");
    bool absorbed = false;
    for (std::size_t j = 0; j < faces.size() && !absorbed; ++j) {
      if (i == j) continue;
      const FaceMask g = faces[j];
      // strictly contained, or a duplicate that appeared earlier
      if ((f & g) == f && (f != g || j < i)) absorbed = true;
    }
    if (!absorbed) K.maximal_.push_back(f);
  }
  return K;
}

SimplicialComplex SimplicialComplex::build(std::size_t m, const std::vector<std::vector<int>>& faces) {
  check_vertex_count(m);
  std::vector<FaceMask> masks;
  masks.reserve(faces.size());
  for (const auto& f : faces) masks.push_back(face_mask(f, m));
  return from_masks(m, masks);
}

SimplicialComplex SimplicialComplex::simplex_boundary(std::size_t m) {
  check_vertex_count(m);
  std::vector<FaceMask> faces;
  for (std::size_t i = 0; i < m; ++i) faces.push_back(all_vertices(m) & ~(FaceMask{1} << i));
  return from_masks(m, faces);
}

SimplicialComplex SimplicialComplex::full_simplex(std::size_t m) {
  check_vertex_count(m);
  return from_masks(m, {all_vertices(m)});
}

bool SimplicialComplex::is_face(FaceMask sigma) const {
  if (sigma == 0) return true;
  for (FaceMask f : maximal_)
    if ((sigma & f) == sigma) return true;
  return false;
}

bool SimplicialComplex::is_face(const std::vector<int>& sigma) const { return is_face(face_mask(sigma, m_)); }

std::vector<FaceMask> SimplicialComplex::faces() const {
  std::unordered_set<FaceMask> seen{0};
  for (FaceMask f : maximal_) {
    // enumerate submasks of f
    for (FaceMask s = f; s != 0; s = (s - 1) & f) seen.insert(s);
  }
  std::vector<FaceMask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](FaceMask a, FaceMask b) {
    return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b;
  });
  return out;
}

std::vector<FaceMask> SimplicialComplex::minimal_nonfaces() const {
  // A minimal non-face is tau + {v} with tau a face and every facet of it a face.
  std::set<FaceMask> found;
  for (FaceMask tau : faces()) {
    for (std::size_t v = 0; v < m_; ++v) {
      const FaceMask bit = FaceMask{1} << v;
      if (tau & bit) continue;
      const FaceMask sigma = tau | bit;
      if (is_face(sigma)) continue;
      bool minimal = true;
      for (FaceMask rest = sigma; rest != 0 && minimal; rest &= rest - 1) {
        const FaceMask low = rest & (~rest + 1);
        if (!is_face(sigma & ~low)) minimal = false;
      }
      if (minimal) found.insert(sigma);
    }
  }
  std::vector<FaceMask> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::size_t SimplicialComplex::max_face_size() const {
  std::size_t best = 0;
  for (FaceMask f : maximal_) best = std::max(best, face_size(f));
  return best;
}

bool SimplicialComplex::is_pure() const {
  for (FaceMask f : maximal_)
    if (face_size(f) != face_size(maximal_.front())) return false;
  return true;
}

SubgroupData::SubgroupData(IntMatrix B) : B_(std::move(B)) {
  if (B_.rows() > B_.cols()) throw InputError("B has more rows than columns (n > m)");
  if (rational_rank(B_) != B_.rows())
    throw InputError("B must have full row rank over Q (rank " + std::to_string(rational_rank(B_)) +
                     " < n = " + std::to_string(B_.rows()) + ")");
}

SubgroupData::SubgroupData(IntMatrix B, std::size_t m) : SubgroupData(B.rows() == 0 ? IntMatrix(0, m) : std::move(B)) {
  if (B_.cols() != m)
    throw InputError("B has " + std::to_string(B_.cols()) + " columns but m = " + std::to_string(m));
}

const char* to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::Pass:
      return "PASS";
    case CriterionStatus::Fail:
      return "FAIL";
    case CriterionStatus::NotApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

IntMatrix column_submatrix(const IntMatrix& B, FaceMask sigma) {
  const std::vector<int> cols = face_vertices(sigma);
  IntMatrix out(B.rows(), cols.size());
  for (std::size_t r = 0; r < B.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = B.at(r, static_cast<std::size_t>(cols[c] - 1));
  return out;
}

LocalFreenessReport check_local_freeness(const SimplicialComplex& K, const SubgroupData& S) {
  LocalFreenessReport report;
  if (S.m() != K.vertex_count()) throw InputError("B column count differs from the vertex count of K");
  const std::size_t n = S.n();
  const std::size_t largest = K.max_face_size();
  if (largest > n)
    report.warnings.push_back("largest face has " + std::to_string(largest) + " vertices but dim R = " +
                              std::to_string(n) + "; the action cannot be locally free");
  if (K.maximal_faces().empty() || !K.is_pure()) {
    report.reason = "K is not pure";
    return report;
  }
  if (largest != n) {
    report.reason = "maximal faces have " + std::to_string(largest) + " vertices but n = " + std::to_string(n);
    return report;
  }
  report.status = CriterionStatus::Pass;
  for (FaceMask f : K.maximal_faces()) {
    Integer det = determinant(column_submatrix(S.matrix(), f));
    if (det == 0) report.status = CriterionStatus::Fail;
    report.faces.push_back({f, det});
  }
  if (report.status == CriterionStatus::Fail) {
    report.reason = "singular column submatrix at";
    for (const auto& fd : report.faces)
      if (fd.det == 0) report.reason += " " + face_to_string(fd.face);
  }
  return report;
}

bool check_connected_kernel(const SubgroupData& S) {
  std::vector<Integer> d = invariant_factors(S.matrix());
  if (d.size() != S.n()) return false;
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

}  // namespace srtor
