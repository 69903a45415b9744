#include "srtor/koszul.hpp"

#include <algorithm>
#include <stdexcept>

#include "srtor/errors.hpp"

namespace srtor {

namespace {

std::vector<FaceMask> lex_subsets(std::size_t n, std::size_t p) {
  std::vector<FaceMask> out;
  std::vector<std::size_t> pick(p);
  for (std::size_t i = 0; i < p; ++i) pick[i] = i;
  if (p > n) return out;
  for (;;) {
    FaceMask mask = 0;
    for (auto i : pick) mask |= FaceMask{1} << i;
    out.push_back(mask);
    std::size_t k = p;
    while (k > 0 && pick[k - 1] == n - p + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t i = k; i < p; ++i) pick[i] = pick[i - 1] + 1;
  }
  return out;
}

std::size_t subset_position(const std::vector<FaceMask>& subsets, FaceMask s) {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), s, [](FaceMask a, FaceMask b) {
    return face_vertices(a) < face_vertices(b);
  });
  if (it == subsets.end() || *it != s) throw InternalError("Koszul: subset not found");
  return static_cast<std::size_t>(it - subsets.begin());
}

}  // namespace

KoszulComplex::KoszulComplex(const SimplicialComplex& K, std::vector<LinearForm> forms, std::size_t max_degree)
    : K_(K), forms_(std::move(forms)), max_degree_(max_degree) {
  if (max_degree % 2 != 0) throw InputError("degree bound must be even");
  if (forms_.size() > kMaxVertices) throw InputError("too many linear forms");
  for (const auto& u : forms_) {
    if (u.nvars() != K.vertex_count()) throw InputError("linear form has the wrong number of variables");
    if (u.is_zero()) throw InputError("zero linear form in the Koszul complex");
  }
  for (std::size_t d = 0; d <= max_degree; d += 2) bases_.push_back(monomial_basis(K, d));
  for (std::size_t p = 0; p <= n(); ++p) subsets_.push_back(lex_subsets(n(), p));
  mult_.resize(n());
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t d = 0; d + 2 <= max_degree; d += 2)
      mult_[i].push_back(mult_matrix(K, forms_[i], bases_[d / 2], bases_[d / 2 + 1]));
}

const GradedBasis& KoszulComplex::ring_basis(std::size_t degree) const {
  if (degree % 2 != 0 || degree > max_degree_) throw std::out_of_range("KoszulComplex: degree out of range");
  return bases_[degree / 2];
}

const std::vector<FaceMask>& KoszulComplex::subsets(std::size_t p) const { return subsets_.at(p); }

std::size_t KoszulComplex::chain_rank(std::size_t p, std::size_t j) const {
  if (p > n() || j < 2 * p) return 0;
  return subsets_[p].size() * ring_basis(j - 2 * p).size();
}

std::size_t KoszulComplex::chain_index(std::size_t p, std::size_t j, FaceMask subset, std::size_t monomial) const {
  return subset_position(subsets_[p], subset) * ring_basis(j - 2 * p).size() + monomial;
}

IntMatrix KoszulComplex::differential(std::size_t p, std::size_t j) const {
  const std::size_t cols = chain_rank(p, j);
  if (p == 0) return IntMatrix(0, cols);
  const std::size_t rows = chain_rank(p - 1, j);
  IntMatrix D(rows, cols);
  if (cols == 0 || rows == 0) return D;
  const std::size_t src_deg = j - 2 * p;
  const std::size_t src_size = ring_basis(src_deg).size();
  const std::size_t dst_size = ring_basis(src_deg + 2).size();
  const auto& src_subsets = subsets_[p];
  const auto& dst_subsets = subsets_[p - 1];
  for (std::size_t s = 0; s < src_subsets.size(); ++s) {
    const FaceMask S = src_subsets[s];
    int sign = 1;  // (-1)^{number of elements of S below i}
    for (std::size_t i = 0; i < n(); ++i) {
      if (!(S & (FaceMask{1} << i))) continue;
      const std::size_t t = subset_position(dst_subsets, S & ~(FaceMask{1} << i));
      const IntMatrix& M = mult_[i][src_deg / 2];
      for (std::size_t r = 0; r < dst_size; ++r)
        for (std::size_t c = 0; c < src_size; ++c) {
          if (M(r, c) == 0) continue;
          D(t * dst_size + r, s * src_size + c) += sign * M(r, c);
        }
      sign = -sign;
    }
  }
  return D;
}

Lattice KoszulComplex::cycles(std::size_t p, std::size_t j) const {
  return Lattice::from_rows(kernel_matrix(differential(p, j)));
}

Lattice KoszulComplex::boundaries(std::size_t p, std::size_t j) const {
  if (p >= n()) return Lattice(chain_rank(p, j));
  return Lattice::from_columns(differential(p + 1, j));
}

ZModule KoszulComplex::homology(std::size_t p, std::size_t j) const {
  const IntMatrix d_out = differential(p, j);
  const IntMatrix d_in = p >= n() ? IntMatrix(chain_rank(p, j), 0) : differential(p + 1, j);
  return homology_subquotient(d_out, d_in);
}

std::vector<Polynomial> KoszulComplex::components(std::size_t p, std::size_t j, const IntVector& chain) const {
  if (chain.size() != chain_rank(p, j)) throw std::invalid_argument("KoszulComplex::components: size mismatch");
  std::vector<Polynomial> out;
  if (chain.empty()) return out;
  const GradedBasis& basis = ring_basis(j - 2 * p);
  for (std::size_t s = 0; s < subsets_[p].size(); ++s) {
    IntVector part(chain.begin() + static_cast<std::ptrdiff_t>(s * basis.size()),
                   chain.begin() + static_cast<std::ptrdiff_t>((s + 1) * basis.size()));
    out.push_back(basis.polynomial(part));
  }
  return out;
}

std::string KoszulComplex::chain_to_string(std::size_t p, std::size_t j, const IntVector& chain) const {
  const auto parts = components(p, j, chain);
  std::string out;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    if (parts[s].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + parts[s].to_string() + ")";
    for (int i : face_vertices(subsets_[p][s])) out += "*xi" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

IntMatrix KoszulComplex::multiplication(const LinearForm& u, std::size_t p, std::size_t j) const {
  const std::size_t rows = chain_rank(p, j + 2);
  const std::size_t cols = chain_rank(p, j);
  IntMatrix out(rows, cols);
  if (rows == 0 || cols == 0) return out;
  const GradedBasis& src = ring_basis(j - 2 * p);
  const GradedBasis& dst = ring_basis(j + 2 - 2 * p);
  const IntMatrix M = mult_matrix(K_, u, src, dst);
  std::vector<IntMatrix> blocks(subsets_[p].size(), M);
  return block_diagonal(blocks);
}

const ZModule& BigradedTor::at(std::size_t p, std::size_t j) const {
  static const ZModule zero;
  auto it = table_.find({p, j});
  return it == table_.end() ? zero : it->second;
}

ZModule tor_piece(const SimplicialComplex& K, const SubgroupData& S, std::size_t p, std::size_t j) {
  if (p > S.n()) throw InputError("homological degree p = " + std::to_string(p) + " exceeds n = " + std::to_string(S.n()));
  if (j % 2 != 0) throw InputError("internal degree must be even");
  if (j < 2 * p) return ZModule();
  KoszulComplex C(K, rows_as_forms(S.matrix()), j);
  return C.homology(p, j);
}

BigradedTor tor_table(const KoszulComplex& C) {
  BigradedTor table(C.n(), C.max_degree());
  for (std::size_t p = 0; p <= C.n(); ++p)
    for (std::size_t j = 0; j <= C.max_degree(); j += 2) table.set(p, j, C.homology(p, j));
  return table;
}

BigradedTor tor_table(const SimplicialComplex& K, const SubgroupData& S, std::size_t max_degree) {
  if (S.m() != K.vertex_count()) throw InputError("B column count differs from the vertex count of K");
  return tor_table(KoszulComplex(K, rows_as_forms(S.matrix()), max_degree));
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> rational_tor_dimensions(const KoszulComplex& C) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t j = 0; j <= C.max_degree(); j += 2) {
    std::vector<std::size_t> ranks(C.n() + 2, 0);  // ranks[p] = rank of d_p at this j
    for (std::size_t p = 1; p <= C.n(); ++p) ranks[p] = rational_rank(C.differential(p, j));
    for (std::size_t p = 0; p <= C.n(); ++p) out[{p, j}] = C.chain_rank(p, j) - ranks[p] - ranks[p + 1];
  }
  return out;
}

std::optional<KoszulCycle> tor1_witness(const KoszulComplex& C) {
  if (C.n() == 0) return std::nullopt;
  for (std::size_t j = 2; j <= C.max_degree(); j += 2) {
    const Lattice Z = C.cycles(1, j);
    const Lattice B = C.boundaries(1, j);
    if (Z == B) continue;
    for (std::size_t r = 0; r < Z.rank(); ++r) {
      IntVector z = Z.basis().row(r);
      if (B.contains(z)) continue;
      KoszulCycle w;
      w.index = {1, j};
      w.components = C.components(1, j, z);
      w.order = B.order_of(z);
      w.group = quotient_structure(Z, B);
      w.text = C.chain_to_string(1, j, z);
      w.explanation = "sum_i u_i f_i = 0 in Z[K] but the cycle is not a boundary; its class has " +
                      (w.order == 0 ? std::string("infinite order") : "order " + w.order.get_str());
      w.coordinates = std::move(z);
      return w;
    }
    throw InternalError("tor1_witness: cycle lattice differs from boundaries but no basis vector escapes");
  }
  return std::nullopt;
}

std::optional<KoszulCycle> tor1_witness(const SimplicialComplex& K, const SubgroupData& S, std::size_t max_degree) {
  return tor1_witness(KoszulComplex(K, rows_as_forms(S.matrix()), max_degree));
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::HoldsUpTo:
      return "HOLDS_UP_TO";
    case VerdictStatus::Fails:
      return "FAILS";
    case VerdictStatus::NotApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

const char* to_string(DepthQualifier q) {
  switch (q) {
    case DepthQualifier::Exact:
      return "EXACT";
    case DepthQualifier::ConditionalOnBound:
      return "CONDITIONAL_ON_BOUND";
    case DepthQualifier::AtMost:
      return "AT_MOST";
  }
  return "?";
}

namespace {

template <class Pred>
Verdict first_failure(const BigradedTor& table, Pred bad) {
  Verdict v;
  v.bound = table.max_degree();
  // scan by j first so the witness is the lowest internal degree
  for (std::size_t j = 0; j <= table.max_degree(); j += 2)
    for (std::size_t p = 0; p <= table.n(); ++p) {
      const ZModule& g = table.at(p, j);
      if (bad(p, g)) {
        v.status = VerdictStatus::Fails;
        v.witness = VerdictWitness{{p, j}, g, std::nullopt};
        return v;
      }
    }
  return v;
}

}  // namespace

TorVerdicts verdicts(const BigradedTor& table, const std::optional<KoszulCycle>& tor1_cycle) {
  TorVerdicts out;
  out.bigcm = first_failure(table, [](std::size_t p, const ZModule& g) { return p == 1 && !g.is_zero(); });
  if (out.bigcm.witness && tor1_cycle && tor1_cycle->index == out.bigcm.witness->index)
    out.bigcm.witness->cycle = tor1_cycle;
  // j is even, so the total degree j - p is odd exactly when p is odd
  out.odd_vanishing = first_failure(table, [](std::size_t p, const ZModule& g) { return p % 2 == 1 && !g.is_zero(); });
  out.tor0_torsion_free =
      first_failure(table, [](std::size_t p, const ZModule& g) { return p == 0 && !g.is_torsion_free(); });

  out.free_over_R.bound = table.max_degree();
  if (out.bigcm.status == VerdictStatus::Fails) {
    out.free_over_R.status = VerdictStatus::Fails;
    out.free_over_R.witness = out.bigcm.witness;
  } else if (out.tor0_torsion_free.status == VerdictStatus::Fails) {
    out.free_over_R.status = VerdictStatus::Fails;
    out.free_over_R.witness = out.tor0_torsion_free.witness;
  }

  if ((out.bigcm.status == VerdictStatus::Fails) != (out.odd_vanishing.status == VerdictStatus::Fails))
    throw InternalError("Tor_1 vanishing and odd-degree vanishing disagree up to degree " +
                        std::to_string(table.max_degree()));
  if (out.bigcm.status == VerdictStatus::HoldsUpTo) {
    for (const auto& [key, g] : table.cells())
      if (key.first >= 1 && !g.is_zero())
        throw InternalError("Tor_1 vanishes up to the bound but Tor_" + std::to_string(key.first) + " at j = " +
                            std::to_string(key.second) + " does not");
  }
  return out;
}

DepthEstimate depth_estimate(const BigradedTor& table) {
  if (table.n() == 0) return {0, DepthQualifier::Exact};
  std::size_t top = 0;
  for (const auto& [key, g] : table.cells())
    if (!g.is_zero()) top = std::max(top, key.first);
  if (top == 0) return {table.n(), DepthQualifier::ConditionalOnBound};
  return {table.n() - top, DepthQualifier::AtMost};
}

Integer euler_characteristic_oracle(const SimplicialComplex& K, std::size_t n, std::size_t j) {
  Integer total = 0;
  for (std::size_t p = 0; p <= n && 2 * p <= j; ++p) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, p);
    Integer term = binom * Integer(static_cast<unsigned long>(hilbert_coefficient(K, j - 2 * p)));
    total += (p % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

}  // namespace srtor
