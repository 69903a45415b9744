#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srtor/intlinalg.hpp"
#include "srtor/simplicial.hpp"
#include "srtor/stanley_reisner.hpp"

namespace srtor {

// Position in the bigraded Koszul complex. p is the exterior degree, j the
// internal degree (preserved by the differential), q = j - p the total degree.
struct KoszulIndex {
  std::size_t p = 0;
  std::size_t j = 0;
  long q() const { return static_cast<long>(j) - static_cast<long>(p); }
  friend auto operator<=>(const KoszulIndex&, const KoszulIndex&) = default;
};

// Z[K] (x) Lambda(xi_1..xi_n) with d(xi_i) = u_i, truncated at internal degree
// max_degree. The chain group at (p, j) has basis
//   { a (x) xi_S : S a p-subset of [n] (lex order), a in basis(j - 2p) },
// indexed subset-major. All matrices are built on demand from immutable
// state, so one instance may be shared between threads.
class KoszulComplex {
 public:
  KoszulComplex(const SimplicialComplex& K, std::vector<LinearForm> forms, std::size_t max_degree);

  const SimplicialComplex& complex() const { return K_; }
  const std::vector<LinearForm>& forms() const { return forms_; }
  std::size_t n() const { return forms_.size(); }
  std::size_t max_degree() const { return max_degree_; }

  const GradedBasis& ring_basis(std::size_t degree) const;
  // p-subsets of [n] as bitmasks over the forms, lexicographic.
  const std::vector<FaceMask>& subsets(std::size_t p) const;

  std::size_t chain_rank(std::size_t p, std::size_t j) const;
  // Position of a (x) xi_S in C(p, j).
  std::size_t chain_index(std::size_t p, std::size_t j, FaceMask subset, std::size_t monomial) const;

  // d : C(p, j) -> C(p-1, j). For p = 0 the target is zero (0 x rank) and
  // for p = n + 1 the source is zero (rank x 0).
  IntMatrix differential(std::size_t p, std::size_t j) const;

  Lattice cycles(std::size_t p, std::size_t j) const;
  Lattice boundaries(std::size_t p, std::size_t j) const;
  // Checks d o d = 0 at (p, j) before taking homology.
  ZModule homology(std::size_t p, std::size_t j) const;

  // Chain vector as one polynomial per p-subset, in subsets(p) order.
  std::vector<Polynomial> components(std::size_t p, std::size_t j, const IntVector& chain) const;
  std::string chain_to_string(std::size_t p, std::size_t j, const IntVector& chain) const;

  // Matrix of multiplication by a linear form, C(p, j) -> C(p, j + 2).
  IntMatrix multiplication(const LinearForm& u, std::size_t p, std::size_t j) const;

 private:
  SimplicialComplex K_;
  std::vector<LinearForm> forms_;
  std::size_t max_degree_;
  std::vector<GradedBasis> bases_;                 // by degree / 2
  std::vector<std::vector<FaceMask>> subsets_;     // by p
  std::vector<std::vector<IntMatrix>> mult_;       // [form][degree / 2]: degree -> degree + 2
};

// Tor^{Z[u]}_p(Z[K], Z)_j for 0 <= p <= n, even j <= max_degree.
class BigradedTor {
 public:
  BigradedTor() = default;
  BigradedTor(std::size_t n, std::size_t max_degree) : n_(n), max_degree_(max_degree) {}

  std::size_t n() const { return n_; }
  std::size_t max_degree() const { return max_degree_; }

  void set(std::size_t p, std::size_t j, ZModule value) { table_[{p, j}] = std::move(value); }
  // Zero outside the computed range and wherever j < 2p.
  const ZModule& at(std::size_t p, std::size_t j) const;

  // All stored cells ordered by (p, j).
  const std::map<std::pair<std::size_t, std::size_t>, ZModule>& cells() const { return table_; }

  friend bool operator==(const BigradedTor&, const BigradedTor&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t max_degree_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, ZModule> table_;
};

// Throws InputError if p > n or j is odd.
ZModule tor_piece(const SimplicialComplex& K, const SubgroupData& S, std::size_t p, std::size_t j);

// Every cell (p, j) with 0 <= p <= n and even j <= max_degree.
BigradedTor tor_table(const SimplicialComplex& K, const SubgroupData& S, std::size_t max_degree);
BigradedTor tor_table(const KoszulComplex& C);

// Dimensions over Q of the same cells, from ranks of the differentials
// computed with rational elimination.
std::map<std::pair<std::size_t, std::size_t>, std::size_t> rational_tor_dimensions(const KoszulComplex& C);

struct KoszulCycle {
  KoszulIndex index;
  IntVector coordinates;              // in the chain basis at index
  std::vector<Polynomial> components;  // f_S per subset S
  Integer order;                      // order of its homology class, 0 = infinite
  ZModule group;                      // Tor at index
  std::string text;                   // "(f1)*xi1 + (f2)*xi2"
  std::string explanation;
};

// Lowest-j cycle in Tor_1 that is not a boundary; the first Hermite basis
// vector of the cycle lattice outside the boundaries.
std::optional<KoszulCycle> tor1_witness(const SimplicialComplex& K, const SubgroupData& S, std::size_t max_degree);
std::optional<KoszulCycle> tor1_witness(const KoszulComplex& C);

enum class VerdictStatus { HoldsUpTo, Fails, NotApplicable };
const char* to_string(VerdictStatus s);

struct VerdictWitness {
  KoszulIndex index;
  ZModule group;
  std::optional<KoszulCycle> cycle;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::HoldsUpTo;
  std::size_t bound = 0;
  std::optional<VerdictWitness> witness;
};

struct TorVerdicts {
  Verdict bigcm;              // Tor_1 vanishes
  Verdict odd_vanishing;      // every cell with odd total degree vanishes
  Verdict tor0_torsion_free;  // no Z-torsion in Tor_0
  Verdict free_over_R;        // bigcm and tor0_torsion_free
};

// Throws InternalError if bigcm and odd_vanishing disagree, or if Tor_1
// vanishes up to the bound while some higher Tor_p does not.
TorVerdicts verdicts(const BigradedTor& table, const std::optional<KoszulCycle>& tor1_cycle = std::nullopt);

enum class DepthQualifier { Exact, ConditionalOnBound, AtMost };
const char* to_string(DepthQualifier q);

struct DepthEstimate {
  std::size_t value = 0;
  DepthQualifier qualifier = DepthQualifier::Exact;
};

// n - max{p : Tor_p nonzero up to the bound}. Nonvanishing seen below the
// bound only bounds depth from above; full vanishing gives n conditionally.
DepthEstimate depth_estimate(const BigradedTor& table);

// Coefficient of t^j in Hilb_K(t) * (1 - t^2)^n, from the closed Hilbert formula.
Integer euler_characteristic_oracle(const SimplicialComplex& K, std::size_t n, std::size_t j);

}  // namespace srtor
