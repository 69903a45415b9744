#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "srtor/polynomial.hpp"
#include "srtor/simplicial.hpp"
#include "srtor/stanley_reisner.hpp"

namespace srtor {

struct ZeroDivisorWitness {
  std::size_t form_index = 0;  // 0-based position of the failing form
  std::size_t degree = 0;      // degree of the witness element
  Polynomial element;          // nonzero in Z[K]/(u_1..u_{i-1}), killed by u_i
};

struct RegularSequenceReport {
  bool holds = true;  // up to `bound`
  std::size_t bound = 0;
  std::optional<ZeroDivisorWitness> witness;
};

// Decides, degree by degree, whether forms[i] is a non-zerodivisor on
// Z[K]/(forms[0..i)) for every i. Multiplication maps are checked from degree
// d to d + 2 for all d + 2 <= bound. Uses only multiplication matrices and
// lattice membership, never the Koszul complex.
RegularSequenceReport check_regular_sequence(const SimplicialComplex& K, const std::vector<LinearForm>& forms,
                                             std::size_t bound);

}  // namespace srtor
