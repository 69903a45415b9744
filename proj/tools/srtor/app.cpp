#include "app.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "problem.hpp"
#include "report.hpp"
#include "srtor/gkm.hpp"
#include "srtor/gysin.hpp"
#include "srtor/koszul.hpp"
#include "srtor/regularity.hpp"
#include "srtor/stanley_reisner.hpp"

namespace srtor::cli {

namespace {

struct CommonOptions {
  std::string input;
  std::size_t max_degree = 12;
  bool rational = false;
  bool json = false;
};

struct Output {
  Json result;
  std::string text;
  int code = kOk;
};

struct Invocation {
  std::string command;
  CommonOptions common;
  std::string element;
  std::string extra;
  std::string vertex;
  std::size_t split = 0;  // 1-based; 0 means the last row
};

std::vector<LinearForm> subgroup_forms(const ProblemSpec& problem, std::string_view command) {
  return rows_as_forms(problem.require_subgroup(command).matrix());
}

FaceMask parse_vertex(const std::string& text, std::size_t m) {
  std::vector<int> vertices;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    vertices.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      if (digits.size() > 3) throw InputError("vertex index too large in '" + text + "'");
    } else if (c == '{' || c == '}' || c == ',' || c == ' ' || c == '\t') {
      flush();
    } else {
      throw InputError("malformed face '" + text + "'");
    }
  }
  flush();
  if (vertices.empty()) throw InputError("empty face '" + text + "'");
  return face_mask(vertices, m);
}

LinearForm resolve_form(const ProblemSpec& problem, const std::string& text) {
  if (const LinearForm* f = problem.find_form(text)) return *f;
  LinearForm form = parse_linear_form(text, problem.complex.vertex_count());
  return form;
}

Output cmd_tor(const ProblemSpec& problem, const Invocation& inv) {
  const std::size_t D = inv.common.max_degree;
  const KoszulComplex C(problem.complex, subgroup_forms(problem, "tor"), D);
  Output out;
  if (inv.common.rational) {
    const auto dims = rational_tor_dimensions(C);
    out.result = rational_entries_json(dims);
    out.text = rational_table_text(dims, C.n(), D);
    return out;
  }
  const BigradedTor table = tor_table(C);
  out.result = tor_entries_json(table);
  out.text = tor_table_text(table);
  return out;
}

Output cmd_check_bigcm(const ProblemSpec& problem, const Invocation& inv) {
  const std::size_t D = inv.common.max_degree;
  const auto forms = subgroup_forms(problem, "check-bigcm");
  const KoszulComplex C(problem.complex, forms, D);
  const BigradedTor table = tor_table(C);
  const TorVerdicts v = verdicts(table, tor1_witness(C));
  const RegularSequenceReport reg = check_regular_sequence(problem.complex, forms, D);
  Output out;
  out.result = verdict_json(v.bigcm);
  out.result["regular_sequence"] = regular_sequence_json(reg);
  out.text = verdict_text(v.bigcm) + "\nregular sequence check: " + regular_sequence_text(reg) + "\n";
  if (reg.holds != (v.bigcm.status == VerdictStatus::HoldsUpTo))
    out.text += "note: the two checks differ below the degree bound; raise --max-degree\n";
  return out;
}

Output cmd_check_free(const ProblemSpec& problem, const Invocation& inv) {
  const KoszulComplex C(problem.complex, subgroup_forms(problem, "check-free"), inv.common.max_degree);
  const BigradedTor table = tor_table(C);
  const TorVerdicts v = verdicts(table, tor1_witness(C));
  const DepthEstimate depth = depth_estimate(table);
  Output out;
  out.result = verdict_json(v.free_over_R);
  out.result["bigcm"] = verdict_json(v.bigcm);
  out.result["odd_vanishing"] = verdict_json(v.odd_vanishing);
  out.result["tor0_torsion_free"] = verdict_json(v.tor0_torsion_free);
  out.result["depth"] = Json{{"value", depth.value}, {"qualifier", to_string(depth.qualifier)}};
  std::ostringstream text;
  text << "free over Z[R*]: " << verdict_text(v.free_over_R) << "\n"
       << "  Tor_1 vanishes: " << verdict_text(v.bigcm) << "\n"
       << "  odd degrees vanish: " << verdict_text(v.odd_vanishing) << "\n"
       << "  Tor_0 torsion-free: " << verdict_text(v.tor0_torsion_free) << "\n"
       << "depth: " << depth.value << " (" << to_string(depth.qualifier) << ")\n";
  out.text = text.str();
  return out;
}

Output cmd_check_local_free(const ProblemSpec& problem, const Invocation&) {
  const LocalFreenessReport r = check_local_freeness(problem.complex, problem.require_subgroup("check-local-free"));
  Output out;
  out.result["status"] = to_string(r.status);
  if (!r.reason.empty()) out.result["reason"] = r.reason;
  Json faces = Json::array();
  std::ostringstream text;
  text << to_string(r.status) << (r.reason.empty() ? "" : ": " + r.reason) << "\n";
  for (const auto& f : r.faces) {
    faces.push_back(Json{{"face", face_to_string(f.face)}, {"det", integer_json(f.det)}});
    text << "  det B" << face_to_string(f.face) << " = " << f.det.get_str() << "\n";
  }
  out.result["faces"] = std::move(faces);
  out.result["warnings"] = r.warnings;
  for (const auto& w : r.warnings) text << "warning: " << w << "\n";
  out.text = text.str();
  return out;
}

Output cmd_check_connected(const ProblemSpec& problem, const Invocation&) {
  const SubgroupData& S = problem.require_subgroup("check-connected");
  const bool connected = check_connected_kernel(S);
  Output out;
  out.result["connected"] = connected;
  Json factors = Json::array();
  std::string listed;
  for (const auto& d : invariant_factors(S.matrix())) {
    factors.push_back(integer_json(d));
    listed += (listed.empty() ? "" : " ") + d.get_str();
  }
  out.result["invariant_factors"] = std::move(factors);
  out.text = std::string(connected ? "true" : "false") + " (invariant factors of B: " + listed + ")\n";
  return out;
}

Output cmd_gkm(const ProblemSpec& problem, const Invocation& inv) {
  if (inv.element.empty()) throw InputError("gkm needs --element");
  const GkmData data(problem.complex, problem.require_subgroup("gkm"));
  const Polynomial p = parse_polynomial(inv.element, problem.complex.vertex_count());
  const GkmTuple tuple = data.restrict(p);
  const GkmCheckResult check = gkm_check(data, tuple);
  Output out;
  out.result["element"] = p.to_string();
  out.result["delzant"] = data.is_delzant();
  Json vertices = Json::array();
  std::ostringstream text;
  text << "Phi(" << p.to_string() << "), Delzant: " << (data.is_delzant() ? "yes" : "no") << "\n";
  for (std::size_t v = 0; v < tuple.size(); ++v) {
    const std::string face = face_to_string(data.vertices()[v].face);
    const std::string value = tuple[v].to_string('u');
    vertices.push_back(Json{{"face", face}, {"restriction", value}});
    text << "  v" << v + 1 << " = " << face << ": " << value << "\n";
  }
  out.result["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : data.edges())
    edges.push_back(Json{{"from", e.from + 1}, {"to", e.to + 1}, {"weight", e.weight.to_string('u')}});
  out.result["edges"] = std::move(edges);
  out.result["gkm_condition"] = check.ok;
  text << "edge divisibility: " << (check.ok ? "holds" : "FAILS") << "\n";
  for (const auto& e : check.failing)
    text << "  edge v" << e.from + 1 << " - v" << e.to + 1 << ": " << e.weight.to_string('u')
         << " does not divide the difference\n";
  out.text = text.str();
  return out;
}

Output cmd_find_torsion(const ProblemSpec& problem, const Invocation& inv) {
  if (inv.extra.empty()) throw InputError("find-torsion needs --extra");
  if (inv.vertex.empty()) throw InputError("find-torsion needs --vertex");
  const std::size_t m = problem.complex.vertex_count();
  const LinearForm extra = resolve_form(problem, inv.extra);
  const FaceMask vertex = parse_vertex(inv.vertex, m);
  const TorsionElement t = find_torsion(problem.complex, problem.require_subgroup("find-torsion"), extra, vertex);
  Output out;
  out.result["vertex"] = face_to_string(vertex);
  out.result["extra"] = extra.to_string();
  out.result["f"] = t.f.to_string();
  Json g = Json::array();
  for (const auto& c : t.g) g.push_back(integer_json(c));
  out.result["g"] = std::move(g);
  out.result["g_text"] = t.g_text;
  out.result["g_in_x"] = t.g_in_x.to_string();
  out.result["verified"] = t.verified;
  out.text = "f = " + t.f.to_string() + "\ng = " + t.g_text + " = " + t.g_in_x.to_string() +
             "\ng * f = 0 in Z[K]: " + (t.verified ? "verified" : "NOT verified") + "\n";
  return out;
}

Output cmd_annihilate(const ProblemSpec& problem, const Invocation& inv) {
  if (inv.element.empty()) throw InputError("annihilate needs --element");
  const Polynomial f = parse_polynomial(inv.element, problem.complex.vertex_count());
  const auto found = annihilator_search(problem.complex, problem.require_subgroup("annihilate"), f, inv.common.max_degree);
  Output out;
  out.result["element"] = f.to_string();
  Json list = Json::array();
  std::ostringstream text;
  text << "annihilators of " << f.to_string() << " in Z[u] up to degree " << inv.common.max_degree << ":\n";
  for (const auto& a : found) {
    list.push_back(Json{{"degree", a.degree}, {"g", a.g.to_string('u')}});
    text << "  degree " << a.degree << ": " << a.g.to_string('u') << "\n";
  }
  if (found.empty()) text << "  none\n";
  out.result["annihilators"] = std::move(list);
  out.text = text.str();
  return out;
}

Output cmd_gysin(const ProblemSpec& problem, const Invocation& inv) {
  const SubgroupData& S = problem.require_subgroup("gysin");
  if (S.n() == 0) throw InputError("gysin needs at least one row in B");
  std::size_t split = S.n() - 1;
  if (inv.split != 0) {
    if (inv.split > S.n())
      throw InputError("--split " + std::to_string(inv.split) + " out of range [1, " + std::to_string(S.n()) + "]");
    split = inv.split - 1;
  }
  const GysinData data(problem.complex, S, split, inv.common.max_degree);
  const GysinReport report = build_and_verify_exactness(data);
  const auto connecting = connecting_map_check(data);
  Output out;
  out.result = gysin_json(report, connecting);
  out.result["split"] = split + 1;
  out.text = "split row " + std::to_string(split + 1) + ": u_{n+1} = " + data.split_form().to_string() + "\n" +
             gysin_text(report, connecting);
  if (!out.result["all_pass"].get<bool>()) out.code = kInternalError;
  return out;
}

Output cmd_hilbert(const ProblemSpec& problem, const Invocation& inv) {
  Output out;
  std::vector<std::size_t> f_vector(problem.complex.max_face_size() + 1, 0);
  for (FaceMask f : problem.complex.faces()) ++f_vector[face_size(f)];
  out.result["f_vector"] = f_vector;
  Json coeffs = Json::array();
  std::ostringstream text;
  text << "f-vector (by face size 0..):";
  for (auto f : f_vector) text << " " << f;
  text << "\nrank of Z[K] in degree j:\n";
  for (std::size_t j = 0; j <= inv.common.max_degree; j += 2) {
    const std::size_t h = hilbert_coefficient(problem.complex, j);
    coeffs.push_back(Json{{"j", j}, {"rank", h}});
    text << "  j=" << j << ": " << h << "\n";
  }
  out.result["coefficients"] = std::move(coeffs);
  out.text = text.str();
  return out;
}

Output cmd_check_regular(const ProblemSpec& problem, const Invocation& inv) {
  const RegularSequenceReport r =
      check_regular_sequence(problem.complex, subgroup_forms(problem, "check-regular"), inv.common.max_degree);
  Output out;
  out.result = regular_sequence_json(r);
  out.text = regular_sequence_text(r) + "\n";
  return out;
}

using Handler = std::function<Output(const ProblemSpec&, const Invocation&)>;

int dispatch(const Invocation& inv, const Handler& handler, std::ostream& out) {
  if (inv.common.max_degree % 2 != 0) throw InputError("--max-degree must be even");
  ProblemSpec problem = load_problem(inv.common.input);
  problem.options.max_degree = inv.common.max_degree;
  problem.options.rational = inv.common.rational;
  if (inv.split != 0) problem.options.split = inv.split - 1;
  const Output result = handler(problem, inv);
  if (inv.common.json) {
    Json doc;
    doc["command"] = inv.command;
    doc["input"] = inv.common.input;
    doc["max_degree"] = inv.common.max_degree;
    doc["result"] = result.result;
    out << doc.dump(2) << "\n";
  } else {
    out << result.text;
  }
  return result.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bigraded Tor of Stanley-Reisner rings over a polynomial subring"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "srtor 0.1.0");

  Invocation inv;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"tor", "bigraded Tor table and its cohomological view"},
      {"check-bigcm", "does Tor_1 vanish up to the degree bound"},
      {"check-free", "is Z[K] a free Z[R*]-module up to the degree bound"},
      {"check-local-free", "determinants of B over the maximal faces"},
      {"check-connected", "is the kernel subgroup connected (all invariant factors 1)"},
      {"check-regular", "are the rows of B a regular sequence, by multiplication maps"},
      {"gkm", "restrictions of a polynomial to the vertices"},
      {"find-torsion", "torsion element g*f built from a vertex and an extra form"},
      {"annihilate", "polynomials in u that kill a given element"},
      {"gysin", "exactness of the long exact sequence splitting off one row"},
      {"hilbert", "ranks of Z[K] by degree"},
  };
  const std::map<std::string, Handler> handlers{
      {"tor", cmd_tor},
      {"check-bigcm", cmd_check_bigcm},
      {"check-free", cmd_check_free},
      {"check-local-free", cmd_check_local_free},
      {"check-connected", cmd_check_connected},
      {"check-regular", cmd_check_regular},
      {"gkm", cmd_gkm},
      {"find-torsion", cmd_find_torsion},
      {"annihilate", cmd_annihilate},
      {"gysin", cmd_gysin},
      {"hilbert", cmd_hilbert},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--input,-i", inv.common.input, "problem file (.tcx)")->required();
    sub->add_option("--max-degree,-D", inv.common.max_degree, "largest internal degree j")->capture_default_str();
    sub->add_flag("--rational", inv.common.rational, "compute over Q instead of Z");
    sub->add_flag("--json", inv.common.json, "machine-readable output");
    if (name == "gkm" || name == "annihilate") sub->add_option("--element", inv.element, "polynomial in x")->required();
    if (name == "find-torsion") {
      sub->add_option("--extra", inv.extra, "form name from the input, or a linear form in x")->required();
      sub->add_option("--vertex", inv.vertex, "maximal face, e.g. \"{1 2}\"")->required();
    }
    if (name == "gysin") sub->add_option("--split", inv.split, "1-based row of B used as u_{n+1} (default: last)");
  }

  std::vector<const char*> argv{"srtor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (const auto& [name, handler] : handlers) {
    if (!app.got_subcommand(name)) continue;
    inv.command = name;
    try {
      return dispatch(inv, handler, out);
    } catch (const InternalError& e) {
      err << "internal error: " << e.what() << "\n";
      return kInternalError;
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return kInternalError;
    }
  }
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace srtor::cli
