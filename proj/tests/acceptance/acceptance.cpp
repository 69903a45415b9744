// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "problem.hpp"
#include "srtor/errors.hpp"
#include "srtor/gkm.hpp"
#include "srtor/gysin.hpp"
#include "srtor/koszul.hpp"
#include "srtor/regularity.hpp"
#include "srtor/stanley_reisner.hpp"

using namespace srtor;

namespace {

constexpr double kRuntimeLimitSeconds = 5.0;
// all comparisons below are exact integer comparisons: zero tolerance

cli::ProblemSpec load(const std::string& name) {
  return cli::load_problem(std::string(SRTOR_TEST_DATA_DIR) + "/" + name);
}

// Collects failures for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (std::size_t k = 0; k < failures_.size() && k < 3; ++k) s += (k ? "; " : "") + failures_[k];
    if (failures_.size() > 3) s += "; and " + std::to_string(failures_.size() - 3) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

std::string cell(std::size_t p, std::size_t j) {
  return "(p=" + std::to_string(p) + ", j=" + std::to_string(j) + ")";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void expect_higher_tor_zero(Check& c, const BigradedTor& t) {
  for (std::size_t p = 1; p <= t.n(); ++p)
    for (std::size_t j = 0; j <= t.max_degree(); j += 2)
      c.expect(t.at(p, j).is_zero(), "Tor nonzero at " + cell(p, j));
}

void weighted_line(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto problem = load("wps12.tcx");
  const BigradedTor t = tor_table(problem.complex, *problem.subgroup, 20);
  const double elapsed = seconds_since(start);
  for (std::size_t j = 0; j <= 20; j += 2) {
    const ZModule want = j <= 2 ? ZModule(1, {}) : ZModule(0, {2});
    c.expect(t.at(0, j) == want, "Tor_0 at j=" + std::to_string(j) + " is " + t.at(0, j).to_string());
  }
  expect_higher_tor_zero(c, t);
  c.expect(elapsed < kRuntimeLimitSeconds, "took " + std::to_string(elapsed) + " s");
}

void weighted_plane(Check& c) {
  const auto problem = load("wps123.tcx");
  const auto forms = rows_as_forms(problem.subgroup->matrix());
  const BigradedTor t = tor_table(problem.complex, *problem.subgroup, 16);
  for (std::size_t j = 0; j <= 16; j += 2) {
    const ZModule want = j <= 4 ? ZModule(1, {}) : ZModule(0, {6});
    c.expect(t.at(0, j) == want, "Tor_0 at j=" + std::to_string(j) + " is " + t.at(0, j).to_string());
    c.expect(quotient_piece(problem.complex, forms, j) == want, "quotient piece at j=" + std::to_string(j));
    c.expect(euler_characteristic_oracle(problem.complex, 2, j) == static_cast<long>(want.rank()),
             "Euler characteristic at j=" + std::to_string(j));
  }
  expect_higher_tor_zero(c, t);
}

void smooth_square(Check& c) {
  const auto problem = load("cp1xcp1.tcx");
  const BigradedTor t = tor_table(problem.complex, *problem.subgroup, 12);
  const std::vector<std::size_t> ranks{1, 2, 1, 0, 0, 0, 0};
  for (std::size_t j = 0; j <= 12; j += 2) {
    c.expect(t.at(0, j).rank() == ranks[j / 2], "Tor_0 rank at j=" + std::to_string(j));
    c.expect(t.at(0, j).is_torsion_free(), "torsion at j=" + std::to_string(j));
  }
  expect_higher_tor_zero(c, t);
  const TorVerdicts v = verdicts(t);
  for (const Verdict* x : {&v.bigcm, &v.odd_vanishing, &v.free_over_R})
    c.expect(x->status == VerdictStatus::HoldsUpTo && x->bound == 12, "verdict not HOLDS_UP_TO(12)");
}

void product_of_weighted_lines(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  const auto problem = load("prod1212.tcx");
  const auto forms = rows_as_forms(problem.subgroup->matrix());
  const KoszulComplex C(problem.complex, forms, 12);
  const auto cycle = tor1_witness(C);
  const TorVerdicts v = verdicts(tor_table(C), cycle);
  c.expect(v.bigcm.status == VerdictStatus::Fails, "check-bigcm does not fail");
  c.expect(v.bigcm.witness && v.bigcm.witness->index.p == 1 && v.bigcm.witness->index.j <= 10,
           "no Tor_1 witness at j <= 10");
  c.expect(cycle && C.cycles(1, cycle->index.j).contains(cycle->coordinates) &&
               !C.boundaries(1, cycle->index.j).contains(cycle->coordinates),
           "witness cycle is not a nonzero class");
  // the element named in the example
  const GradedQuotient Q(problem.complex, {forms[0]});
  const Polynomial w = parse_polynomial("x2*x3^2", 4);
  c.expect(!Q.is_zero(w), "x2*x3^2 vanishes modulo x1 - 2x3");
  c.expect(Q.is_zero(parse_polynomial("2x2 - x4", 4) * w), "(2x2 - x4)*x2*x3^2 does not vanish");
  const RegularSequenceReport r = check_regular_sequence(problem.complex, forms, 12);
  c.expect(!r.holds, "regular sequence check disagrees with Tor_1");
  c.expect(r.witness && r.witness->form_index == 1, "zero divisor is not the second form");
  const double elapsed = seconds_since(start);
  c.expect(elapsed < kRuntimeLimitSeconds, "took " + std::to_string(elapsed) + " s");
}

void symplectic_cut(Check& c) {
  struct Expect {
    const char* file;
    bool holds;
  };
  for (const Expect& e : {Expect{"cut_k1.tcx", true}, Expect{"cut_k2.tcx", false}}) {
    const auto problem = load(e.file);
    const auto forms = rows_as_forms(problem.subgroup->matrix());
    // pinned forms: the rows of B~
    c.expect(forms[0].to_string() == "x1 - 2x3 + x5" && forms[1].to_string() == "2x2 - x4 - x5",
             std::string(e.file) + ": forms are not the pinned rows");
    const TorVerdicts v = verdicts(tor_table(problem.complex, *problem.subgroup, 12));
    const RegularSequenceReport r = check_regular_sequence(problem.complex, forms, 12);
    const bool tor_holds = v.bigcm.status == VerdictStatus::HoldsUpTo;
    c.expect(tor_holds == e.holds, std::string(e.file) + ": Tor_1 verdict " + to_string(v.bigcm.status));
    c.expect(r.holds == tor_holds, std::string(e.file) + ": regular sequence check disagrees");
    if (!e.holds) {
      // on K2 the second form kills x2*x3^2 modulo the first
      const GradedQuotient Q(problem.complex, {forms[0]});
      const Polynomial w = parse_polynomial("x2*x3^2", 5);
      c.expect(!Q.is_zero(w) && Q.is_zero(forms[1].to_polynomial() * w), "x2*x3^2 is not the zero divisor");
    }
  }
}

void gkm_example(Check& c) {
  const auto problem = load("cp1xcp1.tcx");
  const GkmData data(problem.complex, *problem.subgroup);
  const std::vector<std::vector<std::string>> want{
      {"u1", "0", "0", "u1"}, {"u2", "u2", "0", "0"}, {"0", "-u1", "-u1", "0"}, {"0", "0", "-u2", "-u2"}};
  for (std::size_t i = 0; i < 4; ++i) {
    const GkmTuple t = data.restrict(Polynomial::variable(4, i));
    std::vector<std::string> got;
    for (const auto& f : t) got.push_back(f.to_string('u'));
    c.expect(got == want[i], "Phi(x" + std::to_string(i + 1) + ") mismatch");
  }
  const TorsionElement t = find_torsion(problem.complex, *problem.subgroup, *problem.find_form("u3"), face_mask({1, 2}, 4));
  c.expect(t.g == IntVector{0, -1, 1}, "g is not u3 - u2");
  c.expect(t.g_text == "u3 - u2", "g renders as " + t.g_text);
  c.expect(t.f.to_string() == "x1*x2", "f is " + t.f.to_string());
  c.expect(t.verified, "g*f not verified");
}

void gysin_suite(Check& c) {
  for (const char* file : {"wps12.tcx", "cp1xcp1.tcx", "prod1212.tcx"}) {
    const auto problem = load(file);
    const GysinData data(problem.complex, *problem.subgroup, problem.subgroup->n() - 1, 10);
    const GysinReport r = build_and_verify_exactness(data);
    for (const auto& ch : r.chain)
      c.expect(ch.pass(), std::string(file) + ": chain-level sequence fails at " + cell(ch.p, ch.j));
    for (const auto& nd : r.nodes)
      c.expect(nd.pass, std::string(file) + ": node " + nd.label() + " j=" + std::to_string(nd.j));
    c.expect(!r.nodes.empty(), std::string(file) + ": no nodes");
    for (const auto& k : connecting_map_check(data))
      c.expect(k.agree && k.lifts_agree, std::string(file) + ": connecting map differs at i=" + std::to_string(k.i) +
                                             " j=" + std::to_string(k.j));
  }
}

const std::vector<std::string> kCorpus{"wps12.tcx", "wps123.tcx", "cp1xcp1.tcx", "prod1212.tcx",
                                       "cut_k1.tcx", "cut_k2.tcx", "interval.tcx", "not_locally_free.tcx"};

void oracle_invariants(Check& c) {
  for (const auto& file : kCorpus) {
    const auto problem = load(file);
    const auto forms = rows_as_forms(problem.subgroup->matrix());
    const std::size_t D = 12;
    const KoszulComplex C(problem.complex, forms, D);
    const BigradedTor t = tor_table(C);
    const auto dims = rational_tor_dimensions(C);
    for (std::size_t j = 0; j <= D; j += 2) {
      Integer chi = 0;
      for (std::size_t p = 0; p <= C.n(); ++p) {
        chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(t.at(p, j).rank());
        auto it = dims.find({p, j});
        c.expect((it == dims.end() ? 0 : it->second) == t.at(p, j).rank(), file + ": rational rank at " + cell(p, j));
      }
      c.expect(chi == euler_characteristic_oracle(problem.complex, C.n(), j),
               file + ": Euler characteristic at j=" + std::to_string(j));
      c.expect(t.at(0, j) == quotient_piece(problem.complex, forms, j), file + ": Tor_0 at j=" + std::to_string(j));
    }
  }
}

void internal_consistency(Check& c) {
  for (const auto& file : kCorpus) {
    const auto problem = load(file);
    const BigradedTor t = tor_table(problem.complex, *problem.subgroup, 12);
    try {
      const TorVerdicts v = verdicts(t);
      const bool a = v.bigcm.status == VerdictStatus::HoldsUpTo;
      const bool b = v.odd_vanishing.status == VerdictStatus::HoldsUpTo;
      c.expect(a == b, file + ": bigcm and odd_vanishing differ");
      if (a)
        for (const auto& [key, g] : t.cells())
          c.expect(key.first == 0 || g.is_zero(), file + ": Tor_1 vanishes but not " + cell(key.first, key.second));
    } catch (const InternalError& e) {
      c.expect(false, file + ": " + e.what());
    }
  }
}

void criteria_checks(Check& c) {
  for (const char* file : {"wps12.tcx", "wps123.tcx", "prod1212.tcx", "cut_k1.tcx", "cut_k2.tcx"}) {
    const auto problem = load(file);
    c.expect(check_local_freeness(problem.complex, *problem.subgroup).status == CriterionStatus::Pass,
             std::string(file) + ": local freeness does not pass");
  }
  const auto bad = load("not_locally_free.tcx");
  c.expect(check_local_freeness(bad.complex, *bad.subgroup).status == CriterionStatus::Fail,
           "singular face submatrix not reported");
  c.expect(check_connected_kernel(SubgroupData(IntMatrix{{1, 0, -2, 0}, {0, 2, 0, -1}})),
           "kernel of the product matrix reported disconnected");
  c.expect(!check_connected_kernel(SubgroupData(IntMatrix{{2, 4}})), "kernel of [2 4] reported connected");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"weighted projective line (1,2): Tor_0 = Z, Z, Z/2, ... up to j=20; higher Tor zero", weighted_line},
      {"weighted projective plane (1,2,3): Tor_0 = Z, Z, Z, Z/6, ... up to j=16", weighted_plane},
      {"smooth square: ranks (1,2,1), no torsion, verdicts hold up to 12", smooth_square},
      {"product of weighted lines: Tor_1 witness and zero divisor x2*x3^2", product_of_weighted_lines},
      {"symplectic cut: K1 holds, K2 fails, Tor_1 and regular sequence agree", symplectic_cut},
      {"GKM restrictions and torsion element on the smooth square", gkm_example},
      {"Gysin sequence exact and connecting map is multiplication by u_{n+1}", gysin_suite},
      {"oracles: Euler characteristic, Tor_0 = quotient, rational ranks", oracle_invariants},
      {"verdict consistency and rigidity on every table", internal_consistency},
      {"local freeness and connectedness criteria", criteria_checks},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first;
    if (!c.ok()) {
      std::cout << " [" << c.summary() << "]";
      ++failed;
    }
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
