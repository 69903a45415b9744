#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "srtor/errors.hpp"
#include "srtor/gkm.hpp"

using namespace srtor;

namespace {

SimplicialComplex square() { return SimplicialComplex::build(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

std::vector<std::string> tuple_strings(const GkmTuple& t) {
  std::vector<std::string> out;
  for (const auto& f : t) out.push_back(f.to_string('u'));
  return out;
}

Polynomial random_polynomial(std::mt19937& rng, std::size_t m, std::size_t exponent_sum) {
  Polynomial p(m);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (const auto& mono : monomials_of_exponent_sum(m, exponent_sum))
    if (rng() % 3 == 0) p.add_term(mono, Integer(coeff(rng)));
  return p;
}

}  // namespace

TEST(Gkm, SmoothSquareRestrictions) {
  const GkmData data(square(), SubgroupData(IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}}));
  EXPECT_TRUE(data.is_delzant());
  EXPECT_EQ(tuple_strings(data.restrict(parse_polynomial("x1", 4))),
            (std::vector<std::string>{"u1", "0", "0", "u1"}));
  EXPECT_EQ(tuple_strings(data.restrict(parse_polynomial("x2", 4))),
            (std::vector<std::string>{"u2", "u2", "0", "0"}));
  EXPECT_EQ(tuple_strings(data.restrict(parse_polynomial("x3", 4))),
            (std::vector<std::string>{"0", "-u1", "-u1", "0"}));
  EXPECT_EQ(tuple_strings(data.restrict(parse_polynomial("x4", 4))),
            (std::vector<std::string>{"0", "0", "-u2", "-u2"}));
  EXPECT_EQ(data.edges().size(), 4u);
}

TEST(Gkm, RestrictionIsARingMapKillingTheIdeal) {
  std::mt19937 rng(29);
  const auto K = square();
  const GkmData data(K, SubgroupData(IntMatrix{{1, 0, -2, 0}, {0, 2, 0, -1}}));
  EXPECT_FALSE(data.is_delzant());
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial p = random_polynomial(rng, 4, 1 + rng() % 2);
    const Polynomial q = random_polynomial(rng, 4, 1 + rng() % 2);
    const GkmTuple tp = data.restrict(p), tq = data.restrict(q), tpq = data.restrict(p * q);
    for (std::size_t v = 0; v < tp.size(); ++v) {
      EXPECT_EQ(tpq[v], tp[v] * tq[v]);
      EXPECT_EQ(data.restrict(p + q)[v], tp[v] + tq[v]);
    }
    // values lie in the GKM ring
    EXPECT_TRUE(gkm_check(data, tp).ok);
    // Phi factors through Z[K]
    EXPECT_EQ(data.restrict(p), data.restrict(reduce(K, p)));
  }
  for (const auto& t : data.restrict(parse_polynomial("x1*x3", 4))) EXPECT_TRUE(t.is_zero());
}

TEST(Gkm, InjectiveOnLowDegreesOfSmoothSquare) {
  // Z[K] is free over Z[u] in the smooth case, so a nonzero reduced element
  // has a nonzero restriction somewhere.
  const auto K = square();
  const GkmData data(K, SubgroupData(IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}}));
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = reduce(K, random_polynomial(rng, 4, 1 + rng() % 3));
    if (p.is_zero()) continue;
    bool any = false;
    for (const auto& t : data.restrict(p)) any = any || !t.is_zero();
    EXPECT_TRUE(any) << p.to_string();
  }
}

TEST(Gkm, GkmConditionDetectsBadTuple) {
  const GkmData data(square(), SubgroupData(IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}}));
  GkmTuple bad = data.restrict(parse_polynomial("x1", 4));
  bad[1] = RatPolynomial::variable(2, 1);
  const GkmCheckResult r = gkm_check(data, bad);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.failing.empty());
  EXPECT_THROW(gkm_check(data, GkmTuple(3, RatPolynomial(2))), InputError);
}

TEST(Gkm, DividesLinear) {
  const RatPolynomial u1 = RatPolynomial::variable(2, 0), u2 = RatPolynomial::variable(2, 1);
  EXPECT_TRUE(divides_linear(u1 - u2, u1 * u1 - u2 * u2));
  EXPECT_FALSE(divides_linear(u1 - u2, u1 * u1 + u2 * u2));
  EXPECT_TRUE(divides_linear(Rational(2) * u1, u1 * u2));
  EXPECT_TRUE(divides_linear(u1, RatPolynomial(2)));
}

TEST(Gkm, PreconditionsRaiseNotGkm) {
  EXPECT_THROW(GkmData(SimplicialComplex::build(3, {{1, 2}, {3}}), SubgroupData(IntMatrix{{1, 0, 1}, {0, 1, 1}})),
               NotGkmError);
  EXPECT_THROW(GkmData(square(), SubgroupData(IntMatrix{{1, 1, 0, 0}, {1, 1, 1, 0}})), NotGkmError);
  EXPECT_THROW(GkmData(square(), SubgroupData(IntMatrix{{1, 0, 1, 0}})), NotGkmError);
}

TEST(FindTorsion, SquareExample) {
  const auto K = square();
  const SubgroupData S(IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}});
  const TorsionElement t = find_torsion(K, S, parse_linear_form("x2 + x3 - x4", 4), face_mask({1, 2}, 4));
  EXPECT_EQ(t.f.to_string(), "x1*x2");
  EXPECT_EQ(t.g, (IntVector{0, -1, 1}));
  EXPECT_EQ(t.g_text, "u3 - u2");
  EXPECT_EQ(t.g_in_x.to_string(), "x3");
  EXPECT_TRUE(t.verified);
}

TEST(FindTorsion, EveryVertexGivesAVerifiedElement) {
  const auto K = square();
  for (const IntMatrix& B : {IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}}, IntMatrix{{1, 0, -2, 0}, {0, 2, 0, -1}}}) {
    const SubgroupData S(B);
    for (FaceMask v : K.maximal_faces()) {
      const TorsionElement t = find_torsion(K, S, parse_linear_form("x1 + x2 + x3 + 5x4", 4), v);
      EXPECT_TRUE(t.verified);
      EXPECT_GT(t.g.back(), 0);
      Integer content = 0;
      for (const auto& c : t.g) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
      EXPECT_EQ(content, 1);
      EXPECT_TRUE(reduce(K, t.g_in_x * t.f).is_zero());
    }
  }
}

TEST(FindTorsion, RejectsBadInput) {
  const auto K = square();
  const SubgroupData S(IntMatrix{{1, 0, -1, 0}, {0, 1, 0, -1}});
  EXPECT_THROW(find_torsion(K, S, parse_linear_form("x1 - x3", 4), face_mask({1, 2}, 4)), InputError);
  EXPECT_THROW(find_torsion(K, S, parse_linear_form("x2", 4), face_mask({1, 3}, 4)), InputError);
}
