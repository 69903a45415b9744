#include "report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace srtor::cli {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], row[c].size());
    }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += (c ? "  " : "") + pad(row[c], widths[c]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  return out.str();
}

std::string index_text(const KoszulIndex& idx) {
  return "(p=" + std::to_string(idx.p) + ", j=" + std::to_string(idx.j) + ")";
}

const char* term_name(GysinTerm t) {
  switch (t) {
    case GysinTerm::SmallShifted:
      return "R_shifted";
    case GysinTerm::Small:
      return "R";
    case GysinTerm::Big:
      return "R_tilde";
  }
  return "?";
}

}  // namespace

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json zmodule_json(const ZModule& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion()) torsion.push_back(integer_json(d));
  Json out;
  out["rank"] = g.rank();
  out["torsion"] = std::move(torsion);
  return out;
}

Json tor_entries_json(const BigradedTor& table) {
  Json entries = Json::array();
  for (const auto& [key, group] : table.cells()) {
    if (group.is_zero()) continue;
    const KoszulIndex idx{key.first, key.second};
    Json e;
    e["p"] = idx.p;
    e["j"] = idx.j;
    e["q"] = idx.q();
    const Json g = zmodule_json(group);
    e["rank"] = g["rank"];
    e["torsion"] = g["torsion"];
    entries.push_back(std::move(e));
  }
  Json out;
  out["entries"] = std::move(entries);
  return out;
}

Json rational_entries_json(const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& dims) {
  Json entries = Json::array();
  for (const auto& [key, dim] : dims) {
    if (dim == 0) continue;
    const KoszulIndex idx{key.first, key.second};
    Json e;
    e["p"] = idx.p;
    e["j"] = idx.j;
    e["q"] = idx.q();
    e["rank"] = dim;
    e["torsion"] = Json::array();
    entries.push_back(std::move(e));
  }
  Json out;
  out["entries"] = std::move(entries);
  return out;
}

Json cycle_json(const KoszulCycle& cycle) {
  Json out;
  out["p"] = cycle.index.p;
  out["j"] = cycle.index.j;
  out["q"] = cycle.index.q();
  out["group"] = cycle.group.to_string();
  out["order"] = integer_json(cycle.order);
  out["cycle"] = cycle.text;
  Json comps = Json::array();
  for (const auto& c : cycle.components) comps.push_back(c.to_string());
  out["components"] = std::move(comps);
  out["explanation"] = cycle.explanation;
  return out;
}

Json verdict_json(const Verdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  out["bound"] = v.bound;
  if (v.witness) {
    Json w;
    w["p"] = v.witness->index.p;
    w["j"] = v.witness->index.j;
    w["q"] = v.witness->index.q();
    w["group"] = v.witness->group.to_string();
    if (v.witness->cycle) w["cycle"] = cycle_json(*v.witness->cycle);
    out["witness"] = std::move(w);
  }
  return out;
}

Json regular_sequence_json(const RegularSequenceReport& r) {
  Json out;
  out["status"] = r.holds ? "HOLDS_UP_TO" : "FAILS";
  out["bound"] = r.bound;
  if (r.witness) {
    Json w;
    w["form"] = "u" + std::to_string(r.witness->form_index + 1);
    w["degree"] = r.witness->degree;
    w["element"] = r.witness->element.to_string();
    out["witness"] = std::move(w);
  }
  return out;
}

Json gysin_json(const GysinReport& report, const std::vector<ConnectingCheck>& connecting) {
  Json out;
  out["n"] = report.n;
  out["bound"] = report.bound;
  out["chain_exact"] =
      std::all_of(report.chain.begin(), report.chain.end(), [](const ChainExactness& c) { return c.pass(); });
  Json nodes = Json::array();
  for (const auto& nd : report.nodes) {
    Json e;
    e["j"] = nd.j;
    e["position"] = nd.position;
    e["term"] = term_name(nd.term);
    e["i"] = nd.i;
    e["label"] = nd.label();
    e["group"] = zmodule_json(nd.group);
    e["image_in"] = zmodule_json(nd.image_in);
    e["kernel_out"] = zmodule_json(nd.kernel_out);
    e["status"] = nd.pass ? "PASS" : "FAIL";
    nodes.push_back(std::move(e));
  }
  out["nodes"] = std::move(nodes);
  Json conn = Json::array();
  for (const auto& c : connecting) {
    Json e;
    e["i"] = c.i;
    e["j"] = c.j;
    e["group"] = zmodule_json(c.group);
    e["agree"] = c.agree;
    e["lifts_agree"] = c.lifts_agree;
    conn.push_back(std::move(e));
  }
  out["connecting"] = std::move(conn);
  bool all = report.all_pass();
  for (const auto& c : connecting) all = all && c.agree && c.lifts_agree;
  out["all_pass"] = all;
  return out;
}

std::string verdict_text(const Verdict& v) {
  if (v.status == VerdictStatus::HoldsUpTo) return "HOLDS_UP_TO(" + std::to_string(v.bound) + ")";
  if (v.status == VerdictStatus::NotApplicable) return "NOT_APPLICABLE";
  std::string s = "FAILS";
  if (v.witness) {
    s += ": witness at " + index_text(v.witness->index) + ", group " + v.witness->group.to_string();
    if (v.witness->cycle) s += ", cycle " + v.witness->cycle->text;
  }
  return s;
}

std::string regular_sequence_text(const RegularSequenceReport& r) {
  if (r.holds) return "HOLDS_UP_TO(" + std::to_string(r.bound) + ")";
  std::string s = "FAILS";
  if (r.witness)
    s += ": u" + std::to_string(r.witness->form_index + 1) + " kills " + r.witness->element.to_string() +
         " (degree " + std::to_string(r.witness->degree) + ") modulo the earlier forms";
  return s;
}

std::string tor_table_text(const BigradedTor& table) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"p\\j"};
  for (std::size_t j = 0; j <= table.max_degree(); j += 2) header.push_back(std::to_string(j));
  rows.push_back(header);
  for (std::size_t p = 0; p <= table.n(); ++p) {
    std::vector<std::string> row{std::to_string(p)};
    for (std::size_t j = 0; j <= table.max_degree(); j += 2) row.push_back(table.at(p, j).to_string());
    rows.push_back(row);
  }
  std::ostringstream out;
  out << "Tor_p over Z[R*] of Z[K], n = " << table.n() << ", j <= " << table.max_degree() << "\n";
  out << grid(rows);
  std::map<long, std::vector<std::string>> by_q;
  for (const auto& [key, group] : table.cells()) {
    if (group.is_zero()) continue;
    const KoszulIndex idx{key.first, key.second};
    by_q[idx.q()].push_back(group.to_string() + " at " + index_text(idx));
  }
  out << "\ncohomological degree q = j - p:\n";
  if (by_q.empty()) out << "  all zero\n";
  for (const auto& [q, parts] : by_q) {
    out << "  q=" << q << ":";
    for (std::size_t k = 0; k < parts.size(); ++k) out << (k ? " +" : "") << " " << parts[k];
    out << "\n";
  }
  return out.str();
}

std::string rational_table_text(const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& dims,
                                std::size_t n, std::size_t max_degree) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"p\\j"};
  for (std::size_t j = 0; j <= max_degree; j += 2) header.push_back(std::to_string(j));
  rows.push_back(header);
  for (std::size_t p = 0; p <= n; ++p) {
    std::vector<std::string> row{std::to_string(p)};
    for (std::size_t j = 0; j <= max_degree; j += 2) {
      auto it = dims.find({p, j});
      row.push_back(std::to_string(it == dims.end() ? 0 : it->second));
    }
    rows.push_back(row);
  }
  return "dim over Q of Tor_p, n = " + std::to_string(n) + ", j <= " + std::to_string(max_degree) + "\n" + grid(rows);
}

std::string gysin_text(const GysinReport& report, const std::vector<ConnectingCheck>& connecting) {
  std::ostringstream out;
  const bool chain_ok =
      std::all_of(report.chain.begin(), report.chain.end(), [](const ChainExactness& c) { return c.pass(); });
  out << "chain-level sequence: " << (chain_ok ? "exact" : "NOT exact") << "\n";
  for (const auto& c : report.chain)
    if (!c.pass())
      out << "  FAIL at (p=" << c.p << ", j=" << c.j << "): injective=" << c.inclusion_injective
          << " surjective=" << c.contraction_surjective << " composite_zero=" << c.composite_zero
          << " middle_exact=" << c.middle_exact << "\n";
  std::vector<std::vector<std::string>> rows{{"j", "pos", "term", "group", "image in", "kernel out", "status"}};
  for (const auto& nd : report.nodes)
    rows.push_back({std::to_string(nd.j), std::to_string(nd.position), nd.label(), nd.group.to_string(),
                    nd.image_in.to_string(), nd.kernel_out.to_string(), nd.pass ? "PASS" : "FAIL"});
  out << "\nlong exact sequence, n = " << report.n << ", j <= " << report.bound << "\n" << grid(rows);
  out << "\nconnecting map vs multiplication by u_{n+1}:\n";
  std::vector<std::vector<std::string>> crow{{"i", "j", "group", "agree", "lifts agree"}};
  for (const auto& c : connecting)
    crow.push_back({std::to_string(c.i), std::to_string(c.j), c.group.to_string(), c.agree ? "yes" : "NO",
                    c.lifts_agree ? "yes" : "NO"});
  out << grid(crow);
  return out.str();
}

}  // namespace srtor::cli
