#include "srtor/regularity.hpp"

#include "srtor/errors.hpp"
#include "srtor/intlinalg.hpp"

namespace srtor {

RegularSequenceReport check_regular_sequence(const SimplicialComplex& K, const std::vector<LinearForm>& forms,
                                             std::size_t bound) {
  if (bound % 2 != 0) throw InputError("degree bound must be even");
  RegularSequenceReport report;
  report.bound = bound;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].is_zero()) throw InputError("zero linear form in sequence");
    GradedQuotient Q(K, std::vector<LinearForm>(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(i)));
    for (std::size_t d = 0; d + 2 <= bound; d += 2) {
      const GradedBasis& src = Q.basis(d);
      const GradedBasis& dst = Q.basis(d + 2);
      const IntMatrix M = mult_matrix(K, forms[i], src, dst);
      const Lattice& rel_dst = Q.relations(d + 2);
      // x with u*x in the relations of degree d+2: kernel of [M | R], first block.
      const IntMatrix system = hstack(M, rel_dst.basis().transpose());
      const IntMatrix ker = kernel_matrix(system);
      IntMatrix preimage(ker.rows(), src.size());
      for (std::size_t r = 0; r < ker.rows(); ++r)
        for (std::size_t c = 0; c < src.size(); ++c) preimage(r, c) = ker(r, c);
      const Lattice P = Lattice::from_rows(preimage);
      const Lattice& rel_src = Q.relations(d);
      for (std::size_t r = 0; r < P.rank(); ++r) {
        IntVector v = P.basis().row(r);
        if (rel_src.contains(v)) continue;
        report.holds = false;
        report.witness = ZeroDivisorWitness{i, d, src.polynomial(v)};
        return report;
      }
    }
  }
  return report;
}

}  // namespace srtor
