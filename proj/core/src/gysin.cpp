#include "srtor/gysin.hpp"

#include <algorithm>
#include <optional>

#include "srtor/errors.hpp"

namespace srtor {

GysinData::GysinData(const SimplicialComplex& K, const SubgroupData& extended, std::size_t split_row,
                     std::size_t max_degree) {
  const IntMatrix& Bt = extended.matrix();
  if (Bt.rows() == 0) throw InputError("the extended matrix needs at least one row");
  if (split_row >= Bt.rows())
    throw InputError("split row " + std::to_string(split_row + 1) + " out of range [1, " + std::to_string(Bt.rows()) +
                     "]");
  if (Bt.cols() != K.vertex_count()) throw InputError("B column count differs from the vertex count of K");
  std::vector<LinearForm> forms;
  for (std::size_t r = 0; r < Bt.rows(); ++r)
    if (r != split_row) forms.push_back(LinearForm::from_row(Bt, r));
  small_ = std::make_unique<KoszulComplex>(K, forms, max_degree);
  forms.push_back(LinearForm::from_row(Bt, split_row));
  big_ = std::make_unique<KoszulComplex>(K, std::move(forms), max_degree);
}

IntMatrix GysinData::inclusion(std::size_t p, std::size_t j) const {
  IntMatrix M(big_->chain_rank(p, j), small_->chain_rank(p, j));
  if (M.cols() == 0) return M;
  const std::size_t basis_size = small_->ring_basis(j - 2 * p).size();
  for (FaceMask S : small_->subsets(p))
    for (std::size_t a = 0; a < basis_size; ++a)
      M(big_->chain_index(p, j, S, a), small_->chain_index(p, j, S, a)) = 1;
  return M;
}

IntMatrix GysinData::contraction(std::size_t p, std::size_t j) const {
  const std::size_t cols = big_->chain_rank(p, j);
  if (p == 0 || j < 2) return IntMatrix(0, cols);
  IntMatrix M(small_->chain_rank(p - 1, j - 2), cols);
  if (cols == 0) return M;
  const FaceMask last = FaceMask{1} << n();
  const std::size_t basis_size = big_->ring_basis(j - 2 * p).size();
  for (FaceMask S : big_->subsets(p)) {
    if (!(S & last)) continue;
    const FaceMask T = S & ~last;
    // xi_T ^ xi_{n+1} = (-1)^{|T|} xi_{n+1} ^ xi_T
    const int sign = face_size(T) % 2 == 0 ? 1 : -1;
    for (std::size_t a = 0; a < basis_size; ++a)
      M(small_->chain_index(p - 1, j - 2, T, a), big_->chain_index(p, j, S, a)) = sign;
  }
  return M;
}

IntMatrix GysinData::section(std::size_t p, std::size_t j) const {
  IntMatrix M(big_->chain_rank(p + 1, j + 2), small_->chain_rank(p, j));
  if (M.cols() == 0) return M;
  const FaceMask last = FaceMask{1} << n();
  const std::size_t basis_size = small_->ring_basis(j - 2 * p).size();
  for (FaceMask T : small_->subsets(p)) {
    const int sign = face_size(T) % 2 == 0 ? 1 : -1;
    for (std::size_t a = 0; a < basis_size; ++a)
      M(big_->chain_index(p + 1, j + 2, T | last, a), small_->chain_index(p, j, T, a)) = sign;
  }
  return M;
}

IntMatrix GysinData::multiplication(std::size_t p, std::size_t j) const {
  return small_->multiplication(split_form(), p, j);
}

namespace {

struct Subquotient {
  Lattice cycles;
  Lattice boundaries;
};

Subquotient homology_lattices(const KoszulComplex& C, std::size_t p, long j) {
  if (j < 0 || p > C.n()) return {Lattice(0), Lattice(0)};
  const auto jj = static_cast<std::size_t>(j);
  return {C.cycles(p, jj), C.boundaries(p, jj)};
}

Lattice image_lattice(const IntMatrix& F, const Lattice& source_cycles, const Lattice& target_boundaries) {
  IntMatrix images = (F * source_cycles.basis().transpose()).transpose();
  if (images.cols() != target_boundaries.dim()) images = IntMatrix(0, target_boundaries.dim());
  return lattice_sum(Lattice::from_rows(images), target_boundaries);
}

// {z in X.cycles : G z in target boundaries}
Lattice kernel_lattice(const Subquotient& X, const IntMatrix& G, const Lattice& target_boundaries) {
  const IntMatrix Zt = X.cycles.basis().transpose();  // dim x k
  if (X.cycles.rank() == 0) return X.cycles;
  const IntMatrix GZ = G * Zt;                         // target x k
  const IntMatrix system = hstack(GZ, target_boundaries.basis().transpose());
  const IntMatrix ker = kernel_matrix(system);
  IntMatrix coeffs(ker.rows(), X.cycles.rank());
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t c = 0; c < X.cycles.rank(); ++c) coeffs(r, c) = ker(r, c);
  return Lattice::from_rows(coeffs * X.cycles.basis());
}

struct Term {
  GysinTerm kind;
  std::size_t i;
  Subquotient lattices;
};

}  // namespace

std::string GysinNode::label() const {
  switch (term) {
    case GysinTerm::SmallShifted:
      return "Tor_" + std::to_string(i) + "^R[j-2]";
    case GysinTerm::Small:
      return "Tor_" + std::to_string(i) + "^R[j]";
    case GysinTerm::Big:
      return "Tor_" + std::to_string(i) + "^R~[j]";
  }
  return "?";
}

bool GysinReport::all_pass() const {
  return std::all_of(chain.begin(), chain.end(), [](const ChainExactness& c) { return c.pass(); }) &&
         std::all_of(nodes.begin(), nodes.end(), [](const GysinNode& nd) { return nd.pass; });
}

GysinReport build_and_verify_exactness(const GysinData& data) {
  GysinReport report;
  report.n = data.n();
  report.bound = data.max_degree();
  const std::size_t n = data.n();
  const std::size_t D = data.max_degree();

  for (std::size_t j = 0; j <= D; j += 2)
    for (std::size_t p = 0; p <= n + 1; ++p) {
      ChainExactness ce{p, j};
      const IntMatrix incl = data.inclusion(p, j);
      const IntMatrix contr = data.contraction(p, j);
      ce.inclusion_injective = rational_rank(incl) == incl.cols();
      ce.contraction_surjective = cokernel_structure(contr).is_zero();
      ce.composite_zero = (contr * incl).is_zero();
      ce.middle_exact = Lattice::from_rows(kernel_matrix(contr)) == Lattice::from_columns(incl);
      report.chain.push_back(ce);
    }

  for (std::size_t j = 0; j <= D; j += 2) {
    const long jl = static_cast<long>(j);
    std::vector<Term> terms;
    for (std::size_t k = n + 2; k-- > 0;) {
      if (k <= n) {
        terms.push_back({GysinTerm::SmallShifted, k, homology_lattices(data.small(), k, jl - 2)});
        terms.push_back({GysinTerm::Small, k, homology_lattices(data.small(), k, jl)});
      }
      terms.push_back({GysinTerm::Big, k, homology_lattices(data.big(), k, jl)});
    }
    // map from terms[t] to terms[t + 1]
    auto outgoing = [&](std::size_t t) -> std::optional<IntMatrix> {
      if (t + 1 >= terms.size()) return std::nullopt;
      const Term& a = terms[t];
      switch (a.kind) {
        case GysinTerm::SmallShifted:
          if (j < 2) return IntMatrix(terms[t + 1].lattices.cycles.dim(), 0);
          return data.multiplication(a.i, j - 2);
        case GysinTerm::Small:
          return data.inclusion(a.i, j);
        case GysinTerm::Big:
          return data.contraction(a.i, j);
      }
      return std::nullopt;
    };
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const Term& x = terms[t];
      GysinNode node;
      node.position = t;
      node.term = x.kind;
      node.i = x.i;
      node.j = j;
      node.group = quotient_structure(x.lattices.cycles, x.lattices.boundaries);
      Lattice image = x.lattices.boundaries;
      if (t > 0) image = image_lattice(*outgoing(t - 1), terms[t - 1].lattices.cycles, x.lattices.boundaries);
      Lattice kernel = x.lattices.cycles;
      if (auto G = outgoing(t)) kernel = kernel_lattice(x.lattices, *G, terms[t + 1].lattices.boundaries);
      if (!x.lattices.cycles.contains(image)) throw InternalError("Gysin: image is not made of cycles");
      node.image_in = quotient_structure(x.lattices.cycles, x.lattices.boundaries).is_zero()
                          ? ZModule()
                          : quotient_structure(image, x.lattices.boundaries);
      node.kernel_out = quotient_structure(kernel, x.lattices.boundaries);
      node.pass = image == kernel;
      report.nodes.push_back(std::move(node));
    }
  }
  return report;
}

GysinReport build_and_verify_exactness(const SimplicialComplex& K, const SubgroupData& extended,
                                       std::size_t split_row, std::size_t max_degree) {
  return build_and_verify_exactness(GysinData(K, extended, split_row, max_degree));
}

std::vector<ConnectingCheck> connecting_map_check(const GysinData& data) {
  std::vector<ConnectingCheck> out;
  const std::size_t n = data.n();
  for (std::size_t j = 0; j + 2 <= data.max_degree(); j += 2)
    for (std::size_t i = 0; i <= n; ++i) {
      ConnectingCheck check;
      check.i = i;
      check.j = j;
      check.group = data.small().homology(i, j);
      const Lattice Z = data.small().cycles(i, j);
      const Lattice B_target = data.small().boundaries(i, j + 2);
      const IntMatrix mult = data.multiplication(i, j);
      const IntMatrix contr = data.contraction(i + 1, j + 2);
      const IntMatrix sect = data.section(i, j);
      const IntMatrix d_big = data.big().differential(i + 1, j + 2);
      const IntMatrix incl = data.inclusion(i, j + 2);

      auto chase = [&](const IntVector& lift) -> IntVector {
        const IntVector boundary = d_big * lift;
        auto pulled = solve_integral(incl, boundary);
        if (!pulled) throw InternalError("snake chase: boundary of the lift is not in the subcomplex");
        return *pulled;
      };

      check.agree = true;
      check.lifts_agree = true;
      for (std::size_t r = 0; r < Z.rank(); ++r) {
        const IntVector z = Z.basis().row(r);
        auto solved = solve_integral(contr, z);
        if (!solved) throw InternalError("snake chase: contraction is not surjective");
        const IntVector via_solve = chase(*solved);
        const IntVector via_section = chase(sect * z);
        const IntVector via_mult = mult * z;
        IntVector diff(via_mult.size()), lift_diff(via_mult.size());
        for (std::size_t k = 0; k < diff.size(); ++k) {
          diff[k] = via_mult[k] - via_solve[k];
          lift_diff[k] = via_solve[k] - via_section[k];
        }
        if (!B_target.contains(diff)) check.agree = false;
        if (!B_target.contains(lift_diff)) check.lifts_agree = false;
      }
      out.push_back(std::move(check));
    }
  return out;
}

}  // namespace srtor
