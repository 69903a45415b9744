#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "srtor/gysin.hpp"
#include "srtor/intlinalg.hpp"
#include "srtor/koszul.hpp"
#include "srtor/regularity.hpp"
#include "srtor/simplicial.hpp"

namespace srtor::cli {

using Json = nlohmann::ordered_json;

// Small integers become JSON numbers, anything wider becomes a decimal string.
Json integer_json(const Integer& v);
Json zmodule_json(const ZModule& g);
// {"p", "j", "q", "rank", "torsion"} for each nonzero cell, p-major.
Json tor_entries_json(const BigradedTor& table);
Json rational_entries_json(const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& dims);
Json cycle_json(const KoszulCycle& cycle);
Json verdict_json(const Verdict& v);
Json regular_sequence_json(const RegularSequenceReport& r);
Json gysin_json(const GysinReport& report, const std::vector<ConnectingCheck>& connecting);

std::string verdict_text(const Verdict& v);
std::string regular_sequence_text(const RegularSequenceReport& r);
// Grid of groups with p down the side and even j across, then the same
// cells collected by cohomological degree q = j - p.
std::string tor_table_text(const BigradedTor& table);
std::string rational_table_text(const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& dims,
                                std::size_t n, std::size_t max_degree);
std::string gysin_text(const GysinReport& report, const std::vector<ConnectingCheck>& connecting);

}  // namespace srtor::cli
