#include "srtor/gkm.hpp"

#include <algorithm>

#include "srtor/errors.hpp"

namespace srtor {

GkmData::GkmData(const SimplicialComplex& K, const SubgroupData& S) : B_(S.matrix()), n_(S.n()), m_(S.m()) {
  if (m_ != K.vertex_count()) throw InputError("B column count differs from the vertex count of K");
  if (K.maximal_faces().empty() || !K.is_pure())
    throw NotGkmError("NOT_GKM: K must be pure");
  if (K.max_face_size() != n_)
    throw NotGkmError("NOT_GKM: maximal faces have " + std::to_string(K.max_face_size()) + " vertices but n = " +
                      std::to_string(n_));
  for (FaceMask face : K.maximal_faces()) {
    VertexData v;
    v.face = face;
    v.indices = face_vertices(face);
    v.submatrix = column_submatrix(B_, face);
    v.det = determinant(v.submatrix);
    if (v.det == 0) throw NotGkmError("NOT_GKM: singular vertex submatrix at " + face_to_string(face));
    v.inverse = rational_inverse(v.submatrix);
    v.integral = abs(v.det) == 1;
    vertices_.push_back(std::move(v));
  }
  for (std::size_t a = 0; a < vertices_.size(); ++a)
    for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
      const FaceMask fa = vertices_[a].face, fb = vertices_[b].face;
      if (face_size(fa & fb) + 1 != n_) continue;
      GkmEdge e;
      e.from = a;
      e.to = b;
      e.dropped = face_vertices(fa & ~fb).front();
      e.weight = restrict_variable(a, static_cast<std::size_t>(e.dropped));
      edges_.push_back(std::move(e));
    }
  // rows of B must restrict to constant tuples
  for (std::size_t k = 0; k < n_; ++k) {
    const GkmTuple t = restrict(Polynomial::linear(B_.row(k)));
    const RatPolynomial uk = RatPolynomial::variable(n_, k);
    for (const auto& f : t)
      if (!(f == uk)) throw InternalError("restriction of u_" + std::to_string(k + 1) + " is not constant");
  }
}

bool GkmData::is_delzant() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const VertexData& v) { return v.integral; });
}

RatPolynomial GkmData::restrict_variable(std::size_t v, std::size_t i) const {
  const VertexData& vd = vertices_.at(v);
  auto it = std::find(vd.indices.begin(), vd.indices.end(), static_cast<int>(i));
  if (it == vd.indices.end()) return RatPolynomial(n_);
  const std::size_t r = static_cast<std::size_t>(it - vd.indices.begin());
  std::vector<Rational> alpha(n_);
  for (std::size_t s = 0; s < n_; ++s) alpha[s] = vd.inverse(r, s);
  return RatPolynomial::linear(alpha);
}

GkmTuple GkmData::restrict(const Polynomial& p) const {
  if (p.nvars() != m_) throw InputError("polynomial has the wrong number of variables");
  const RatPolynomial rp = to_rational(p);
  GkmTuple out;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    std::vector<RatPolynomial> images;
    for (std::size_t i = 1; i <= m_; ++i) images.push_back(restrict_variable(v, i));
    out.push_back(substitute(rp, images, n_));
  }
  return out;
}

GkmTuple GkmData::constant_tuple(const RatPolynomial& g) const { return GkmTuple(vertices_.size(), g); }

std::size_t GkmData::vertex_of(FaceMask face) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].face == face) return v;
  throw InputError(face_to_string(face) + " is not a maximal face of K");
}

GkmTuple phi_restrictions(const SimplicialComplex& K, const SubgroupData& S, const Polynomial& p) {
  return GkmData(K, S).restrict(p);
}

bool divides_linear(const RatPolynomial& divisor, const RatPolynomial& p) {
  if (p.is_zero()) return true;
  if (divisor.is_zero()) return false;
  const std::size_t n = divisor.nvars();
  // pick the last variable that occurs in the divisor and eliminate it
  std::size_t pivot = n;
  for (std::size_t s = 0; s < n; ++s)
    if (divisor.coefficient(Monomial::variable(n, s)) != 0) pivot = s;
  if (pivot == n) return true;  // nonzero constant
  const Rational c = divisor.coefficient(Monomial::variable(n, pivot));
  std::vector<RatPolynomial> images;
  for (std::size_t s = 0; s < n; ++s) {
    if (s != pivot) {
      images.push_back(RatPolynomial::variable(n, s));
      continue;
    }
    RatPolynomial img(n);
    for (std::size_t t = 0; t < n; ++t) {
      if (t == pivot) continue;
      const Rational ct = divisor.coefficient(Monomial::variable(n, t));
      img.add_term(Monomial::variable(n, t), Rational(-ct / c));
    }
    img.add_term(Monomial(n), Rational(-divisor.coefficient(Monomial(n)) / c));
    images.push_back(img);
  }
  return substitute(p, images, n).is_zero();
}

GkmCheckResult gkm_check(const GkmData& data, const GkmTuple& tuple) {
  if (tuple.size() != data.vertices().size())
    throw InputError("tuple has " + std::to_string(tuple.size()) + " entries but there are " +
                     std::to_string(data.vertices().size()) + " vertices");
  GkmCheckResult result;
  for (const auto& e : data.edges()) {
    if (divides_linear(e.weight, tuple[e.from] - tuple[e.to])) continue;
    result.ok = false;
    result.failing.push_back(e);
  }
  return result;
}

GkmCheckResult gkm_check(const SimplicialComplex& K, const SubgroupData& S, const GkmTuple& tuple) {
  return gkm_check(GkmData(K, S), tuple);
}

namespace {

// u_{n+1} first, then u_1..u_n: "u3 - u2"
std::string u_combination_string(const IntVector& g) {
  std::vector<std::size_t> order{g.size() - 1};
  for (std::size_t s = 0; s + 1 < g.size(); ++s) order.push_back(s);
  std::string out;
  for (std::size_t s : order) {
    if (g[s] == 0) continue;
    const Integer mag = abs(g[s]);
    const std::string term = (mag == 1 ? "" : mag.get_str()) + "u" + std::to_string(s + 1);
    if (out.empty())
      out = (g[s] < 0 ? "-" : "") + term;
    else
      out += (g[s] < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

TorsionElement find_torsion(const SimplicialComplex& K, const SubgroupData& S, const LinearForm& extra,
                            FaceMask vertex) {
  if (extra.nvars() != S.m()) throw InputError("extra form has the wrong number of variables");
  const IntMatrix stacked = vstack(S.matrix(), IntMatrix::from_rows({extra.coefficients()}, S.m()));
  if (rational_rank(stacked) != S.n() + 1)
    throw InputError("extra form " + extra.to_string() + " is dependent on the rows of B");
  const GkmData data(K, S);
  const std::size_t v = data.vertex_of(vertex);
  const VertexData& vd = data.vertices()[v];
  const std::size_t n = S.n();

  // restriction of u_{n+1} at v, written as sum_s a_s u_s
  std::vector<Rational> a(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Integer& e = extra[static_cast<std::size_t>(vd.indices[r] - 1)];
    if (e == 0) continue;
    for (std::size_t s = 0; s < n; ++s) a[s] += Rational(e) * vd.inverse(r, s);
  }
  Integer denom = 1;
  for (const auto& x : a) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
  IntVector g(n + 1);
  for (std::size_t s = 0; s < n; ++s) {
    Rational scaled = -a[s] * Rational(denom);
    g[s] = scaled.get_num();
  }
  g[n] = denom;
  Integer content = 0;
  for (const auto& x : g) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  for (auto& x : g) x /= content;

  TorsionElement out;
  out.f = Polynomial(S.m());
  {
    Monomial mono(S.m());
    for (int i : vd.indices) mono[static_cast<std::size_t>(i - 1)] = 1;
    out.f.add_term(mono, Integer(1));
  }
  out.g = g;
  out.g_in_x = u_polynomial_in_x(stacked, Polynomial::linear(g));
  out.g_text = u_combination_string(g);

  // GKM side: g restricts to zero at v
  RatPolynomial at_v(n);
  const GkmTuple extra_restricted = data.restrict(extra.to_polynomial());
  for (std::size_t s = 0; s < n; ++s) at_v += Rational(g[s]) * RatPolynomial::variable(n, s);
  at_v += Rational(g[n]) * extra_restricted[v];
  if (!at_v.is_zero()) throw InternalError("find_torsion: g does not restrict to zero at the chosen vertex");

  // ring side, computed independently
  out.verified = reduce(K, out.g_in_x * out.f).is_zero();
  if (!out.verified) throw InternalError("find_torsion: g * f does not vanish in Z[K]");
  return out;
}

}  // namespace srtor
