#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srtor/errors.hpp"
#include "srtor/simplicial.hpp"
#include "srtor/stanley_reisner.hpp"

namespace srtor::cli {

// Syntax or semantic error in a .tcx file, with a 1-based location.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source = "");
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct NamedForm {
  std::string name;
  LinearForm form;
  friend bool operator==(const NamedForm& a, const NamedForm& b) {
    return a.name == b.name && a.form.coefficients() == b.form.coefficients();
  }
};

struct ProblemOptions {
  std::size_t max_degree = 12;
  bool rational = false;
  std::optional<std::size_t> split;  // 0-based row of B
  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

struct ProblemSpec {
  SimplicialComplex complex;
  std::optional<SubgroupData> subgroup;
  std::vector<NamedForm> forms;
  ProblemOptions options;

  const LinearForm* find_form(std::string_view name) const;
  // Throws InputError naming `command` when no B was given.
  const SubgroupData& require_subgroup(std::string_view command) const;
};

bool operator==(const ProblemSpec& a, const ProblemSpec& b);

// Grammar, one statement per line, `#` starts a comment:
//   m = 4
//   faces = {1 2} {2 3} {3 4} {1 4}     (continuation lines may start with `{`)
//   B = [1 0 -2 0 ; 0 2 0 -1]           (may span lines until `]`)
//   form u3 = x2 + x3 - x4
ProblemSpec parse_problem(std::string_view text);
ProblemSpec load_problem(const std::string& path);

std::string render_problem(const ProblemSpec& problem);

}  // namespace srtor::cli
