#include "srtor/stanley_reisner.hpp"

#include <algorithm>
#include <stdexcept>

#include "srtor/errors.hpp"

namespace srtor {

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

LinearForm parse_linear_form(std::string_view text, std::size_t m) {
  Polynomial p = parse_polynomial(text, m);
  IntVector coeffs(m);
  for (const auto& [mono, c] : p.terms()) {
    if (mono.exponent_sum() != 1)
      throw InputError("linear form '" + std::string(text) + "' has a non-linear term " +
                       (mono.exponent_sum() == 0 ? std::string("(constant)") : mono.to_string()));
    for (std::size_t i = 0; i < m; ++i)
      if (mono[i] == 1) coeffs[i] = c;
  }
  return LinearForm(std::move(coeffs));
}

std::vector<LinearForm> rows_as_forms(const IntMatrix& B) {
  std::vector<LinearForm> out;
  for (std::size_t r = 0; r < B.rows(); ++r) out.push_back(LinearForm::from_row(B, r));
  return out;
}

GradedBasis::GradedBasis(std::size_t degree, std::size_t nvars, std::vector<Monomial> monomials)
    : degree_(degree), nvars_(nvars), monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> GradedBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntVector GradedBasis::coordinates(const Polynomial& p) const {
  IntVector out(size());
  for (const auto& [m, c] : p.terms()) {
    auto idx = index_of(m);
    if (!idx) throw std::invalid_argument("GradedBasis: monomial " + m.to_string() + " not in basis of degree " +
                                          std::to_string(degree_));
    out[*idx] = c;
  }
  return out;
}

Polynomial GradedBasis::polynomial(const IntVector& coords) const {
  if (coords.size() != size()) throw std::invalid_argument("GradedBasis::polynomial: dimension mismatch");
  Polynomial p(nvars_);
  for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(monomials_[i], coords[i]);
  return p;
}

namespace {

void check_even(std::size_t degree) {
  if (degree % 2 != 0) throw InputError("degree " + std::to_string(degree) + " is odd; Z[K] lives in even degrees");
}

// Compositions of `total` into exactly the vertices of `support`, each >= 1.
void fill_supported(const std::vector<int>& support, std::size_t pos, std::size_t remaining, Monomial& current,
                    std::vector<Monomial>& out) {
  const std::size_t var = static_cast<std::size_t>(support[pos] - 1);
  if (pos + 1 == support.size()) {
    current[var] = static_cast<std::uint32_t>(remaining);
    out.push_back(current);
    return;
  }
  const std::size_t later = support.size() - pos - 1;
  for (std::size_t e = 1; e + later <= remaining; ++e) {
    current[var] = static_cast<std::uint32_t>(e);
    fill_supported(support, pos + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

GradedBasis monomial_basis(const SimplicialComplex& K, std::size_t degree) {
  check_even(degree);
  const std::size_t m = K.vertex_count();
  const std::size_t k = degree / 2;
  std::vector<Monomial> monos;
  if (k == 0) {
    monos.emplace_back(m);
  } else {
    for (FaceMask sigma : K.faces()) {
      const std::size_t s = face_size(sigma);
      if (s == 0 || s > k) continue;
      Monomial current(m);
      fill_supported(face_vertices(sigma), 0, k, current, monos);
    }
  }
  std::sort(monos.begin(), monos.end(), GrlexDescending{});
  return GradedBasis(degree, m, std::move(monos));
}

std::size_t hilbert_coefficient(const SimplicialComplex& K, std::size_t degree) {
  check_even(degree);
  const std::size_t k = degree / 2;
  if (k == 0) return 1;
  std::vector<std::size_t> f_vector(K.vertex_count() + 1, 0);
  for (FaceMask sigma : K.faces()) ++f_vector[face_size(sigma)];
  Integer total = 0;
  for (std::size_t s = 1; s <= std::min(k, K.vertex_count()); ++s)
    total += f_vector[s] * binomial(k - 1, s - 1);
  return total.get_ui();
}

Polynomial reduce(const SimplicialComplex& K, const Polynomial& p) {
  Polynomial out(p.nvars());
  for (const auto& [m, c] : p.terms())
    if (K.is_face(m.support())) out.add_term(m, c);
  return out;
}

IntMatrix mult_matrix(const SimplicialComplex& K, const LinearForm& u, const GradedBasis& source,
                      const GradedBasis& target) {
  if (u.is_zero()) throw InputError("multiplication by the zero linear form");
  if (u.nvars() != K.vertex_count()) throw InputError("linear form has the wrong number of variables");
  if (target.degree() != source.degree() + 2) throw std::invalid_argument("mult_matrix: target degree must be source + 2");
  IntMatrix M(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    for (std::size_t i = 0; i < u.nvars(); ++i) {
      if (u[i] == 0) continue;
      Monomial prod = source[col] * Monomial::variable(u.nvars(), i);
      if (!K.is_face(prod.support())) continue;
      auto row = target.index_of(prod);
      if (!row) throw InternalError("mult_matrix: product monomial missing from target basis");
      M(*row, col) += u[i];
    }
  }
  return M;
}

IntMatrix mult_matrix(const SimplicialComplex& K, const LinearForm& u, std::size_t degree) {
  if (u.is_zero()) throw InputError("multiplication by the zero linear form");
  return mult_matrix(K, u, monomial_basis(K, degree), monomial_basis(K, degree + 2));
}

ZModule quotient_piece(const SimplicialComplex& K, const std::vector<LinearForm>& forms, std::size_t degree) {
  return GradedQuotient(K, forms).piece(degree);
}

GradedQuotient::GradedQuotient(const SimplicialComplex& K, std::vector<LinearForm> forms)
    : K_(K), forms_(std::move(forms)) {
  for (const auto& u : forms_)
    if (u.nvars() != K.vertex_count()) throw InputError("linear form has the wrong number of variables");
}

void GradedQuotient::ensure(std::size_t degree) const {
  check_even(degree);
  const std::size_t slot = degree / 2;
  while (bases_.size() <= slot) {
    const std::size_t d = 2 * bases_.size();
    bases_.push_back(monomial_basis(K_, d));
    const GradedBasis& target = bases_.back();
    IntMatrix gens(target.size(), 0);
    if (d >= 2) {
      const GradedBasis& source = bases_[bases_.size() - 2];
      for (const auto& u : forms_) {
        if (u.is_zero()) continue;
        gens = hstack(gens, mult_matrix(K_, u, source, target));
      }
    }
    relations_.push_back(Lattice::from_columns(gens));
  }
}

const GradedBasis& GradedQuotient::basis(std::size_t degree) const {
  ensure(degree);
  return bases_[degree / 2];
}

const Lattice& GradedQuotient::relations(std::size_t degree) const {
  ensure(degree);
  return relations_[degree / 2];
}

ZModule GradedQuotient::piece(std::size_t degree) const {
  ensure(degree);
  const Lattice& rel = relations_[degree / 2];
  return quotient_structure(Lattice::from_rows(IntMatrix::identity(rel.dim())), rel);
}

bool GradedQuotient::is_zero(const Polynomial& p) const {
  Polynomial r = reduce(K_, p);
  if (r.is_zero()) return true;
  if (!r.is_homogeneous()) throw InputError("GradedQuotient::is_zero needs a homogeneous element");
  return relations(r.degree()).contains(basis(r.degree()).coordinates(r));
}

Polynomial u_polynomial_in_x(const IntMatrix& B, const Polynomial& g) {
  if (g.nvars() != B.rows()) throw std::invalid_argument("u_polynomial_in_x: variable count must equal rows of B");
  std::vector<Polynomial> images;
  for (std::size_t r = 0; r < B.rows(); ++r) images.push_back(Polynomial::linear(B.row(r)));
  return substitute(g, images, B.cols());
}

std::vector<Annihilator> annihilator_search(const SimplicialComplex& K, const SubgroupData& S, const Polynomial& f,
                                            std::size_t max_degree) {
  if (f.nvars() != K.vertex_count()) throw InputError("element has the wrong number of variables");
  const Polynomial fr = reduce(K, f);
  if (fr.is_zero()) throw InputError("element reduces to 0 in Z[K]; torsion is only defined for nonzero elements");
  if (!fr.is_homogeneous()) throw InputError("element must be homogeneous");
  const std::size_t n = S.n();
  std::vector<Annihilator> out;
  for (std::size_t e = 0; e <= max_degree; e += 2) {
    const std::vector<Monomial> u_monos = monomials_of_exponent_sum(n, e / 2);
    if (u_monos.empty()) continue;
    const GradedBasis target = monomial_basis(K, fr.degree() + e);
    IntMatrix M(target.size(), u_monos.size());
    for (std::size_t col = 0; col < u_monos.size(); ++col) {
      Polynomial g(n);
      g.add_term(u_monos[col], Integer(1));
      const Polynomial image = reduce(K, u_polynomial_in_x(S.matrix(), g) * fr);
      const IntVector coords = target.coordinates(image);
      for (std::size_t row = 0; row < target.size(); ++row) M(row, col) = coords[row];
    }
    for (const IntVector& v : kernel_basis(M)) {
      Polynomial g(n);
      for (std::size_t k = 0; k < v.size(); ++k) g.add_term(u_monos[k], v[k]);
      out.push_back({e, std::move(g)});
    }
  }
  return out;
}

}  // namespace srtor
