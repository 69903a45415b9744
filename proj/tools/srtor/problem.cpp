#include "problem.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace srtor::cli {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message, const std::string& source)
    : InputError((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) + ": " +
                 message),
      line_(line),
      column_(column),
      message_(message) {}

const LinearForm* ProblemSpec::find_form(std::string_view name) const {
  for (const auto& f : forms)
    if (f.name == name) return &f.form;
  return nullptr;
}

const SubgroupData& ProblemSpec::require_subgroup(std::string_view command) const {
  if (!subgroup) throw InputError(std::string(command) + " needs a matrix B in the input file");
  return *subgroup;
}

bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
  if (a.complex.vertex_count() != b.complex.vertex_count()) return false;
  const std::set<FaceMask> fa(a.complex.maximal_faces().begin(), a.complex.maximal_faces().end());
  const std::set<FaceMask> fb(b.complex.maximal_faces().begin(), b.complex.maximal_faces().end());
  if (fa != fb) return false;
  if (a.subgroup.has_value() != b.subgroup.has_value()) return false;
  if (a.subgroup && !(a.subgroup->matrix() == b.subgroup->matrix())) return false;
  return a.forms == b.forms && a.options == b.options;
}

namespace {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

template <class T>
struct Located {
  T value;
  Location where;
};

struct RawTerm {
  Integer coeff;
  Located<long> var;
};

struct RawForm {
  Located<std::string> name;
  std::vector<RawTerm> terms;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  Location where() const { return loc_; }

  void advance() {
    if (eof()) return;
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  // Spaces, tabs, carriage returns and comments, but not newlines.
  void skip_inline() {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void skip_blank() {
    for (;;) {
      skip_inline();
      if (peek() != '\n') return;
      advance();
    }
  }

  // Is the next non-blank character on a later line equal to c?
  bool next_line_starts_with(char c) const {
    Scanner probe = *this;
    probe.skip_blank();
    return probe.peek() == c;
  }

  bool at_line_end() const { return eof() || peek() == '\n'; }

  // U+2212 MINUS SIGN, encoded as E2 88 92.
  bool at_unicode_minus() const {
    return text_.substr(pos_, 3) == "\xE2\x88\x92";
  }
  void skip_unicode_minus() {
    for (int i = 0; i < 3; ++i) ++pos_;
    ++loc_.column;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(loc_.line, loc_.column, message); }
  [[noreturn]] static void fail_at(Location at, const std::string& message) {
    throw ParseError(at.line, at.column, message);
  }

  void expect(char c) {
    skip_inline();
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    advance();
  }

  std::string identifier() {
    skip_inline();
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) fail("expected a name" + found());
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out += peek();
      advance();
    }
    return out;
  }

  // Optionally signed decimal integer.
  Integer integer() {
    skip_inline();
    std::string digits;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') digits += '-';
      advance();
    } else if (at_unicode_minus()) {
      digits += '-';
      skip_unicode_minus();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer" + found());
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Integer(digits);
  }

  std::string found() const {
    if (eof()) return ", found end of input";
    if (peek() == '\n') return ", found end of line";
    return std::string(", found '") + peek() + "'";
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  Location loc_;
};

long small_int(const Integer& v, Location at) {
  if (!v.fits_slong_p()) Scanner::fail_at(at, "integer " + v.get_str() + " is too large");
  return v.get_si();
}

std::vector<Located<long>> parse_face(Scanner& s) {
  s.expect('{');
  std::vector<Located<long>> face;
  for (;;) {
    s.skip_inline();
    if (s.peek() == '}') {
      s.advance();
      return face;
    }
    if (s.at_line_end()) s.fail("unterminated face");
    const Location at = s.where();
    face.push_back({small_int(s.integer(), at), at});
  }
}

std::vector<std::vector<Located<long>>> parse_faces(Scanner& s) {
  std::vector<std::vector<Located<long>>> faces;
  for (;;) {
    s.skip_inline();
    if (s.peek() == '{') {
      faces.push_back(parse_face(s));
      continue;
    }
    if (s.peek() == '\n' && s.next_line_starts_with('{')) {
      s.skip_blank();
      continue;
    }
    if (!s.at_line_end()) s.fail("malformed face list" + s.found());
    return faces;
  }
}

std::vector<std::vector<Located<Integer>>> parse_matrix(Scanner& s) {
  s.expect('[');
  std::vector<std::vector<Located<Integer>>> rows(1);
  for (;;) {
    s.skip_blank();
    const char c = s.peek();
    if (c == ']') {
      s.advance();
      break;
    }
    if (c == ';') {
      s.advance();
      rows.emplace_back();
      continue;
    }
    if (s.eof()) s.fail("unterminated matrix");
    const Location at = s.where();
    rows.back().push_back({s.integer(), at});
  }
  if (rows.size() == 1 && rows[0].empty()) rows.clear();
  return rows;
}

std::vector<RawTerm> parse_linear(Scanner& s) {
  std::vector<RawTerm> terms;
  bool first = true;
  for (;;) {
    s.skip_inline();
    if (s.at_line_end()) break;
    int sign = 1;
    bool had_sign = false;
    if (s.peek() == '+' || s.peek() == '-') {
      sign = s.peek() == '-' ? -1 : 1;
      had_sign = true;
      s.advance();
    } else if (s.at_unicode_minus()) {
      sign = -1;
      had_sign = true;
      s.skip_unicode_minus();
    }
    if (!first && !had_sign) s.fail("expected '+' or '-' between terms" + s.found());
    s.skip_inline();
    Integer coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
      coeff = s.integer();
      s.skip_inline();
      if (s.peek() == '*') {
        s.advance();
        s.skip_inline();
      }
    }
    const Location var_at = s.where();
    if (s.peek() != 'x') s.fail("expected a variable x<i>" + s.found());
    s.advance();
    if (!std::isdigit(static_cast<unsigned char>(s.peek()))) s.fail("expected a variable index" + s.found());
    const Integer index = s.integer();
    terms.push_back({sign * coeff, {small_int(index, var_at), var_at}});
    first = false;
  }
  if (terms.empty()) s.fail("empty linear form");
  return terms;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  Scanner s(text);
  std::optional<Located<Integer>> m_value;
  std::optional<std::vector<std::vector<Located<long>>>> faces;
  std::optional<std::vector<std::vector<Located<Integer>>>> matrix;
  Location matrix_at;
  std::vector<RawForm> raw_forms;
  std::map<std::string, Location> seen;

  for (;;) {
    s.skip_blank();
    if (s.eof()) break;
    const Location key_at = s.where();
    const std::string key = s.identifier();
    std::string slot = key;
    RawForm form;
    if (key == "form") {
      const Location name_at = (s.skip_inline(), s.where());
      form.name = {s.identifier(), name_at};
      slot = "form " + form.name.value;
    } else if (key != "m" && key != "faces" && key != "B") {
      Scanner::fail_at(key_at, "unknown key '" + key + "'");
    }
    if (auto it = seen.find(slot); it != seen.end())
      Scanner::fail_at(key_at, "duplicate key '" + slot + "' (first given at line " +
                                   std::to_string(it->second.line) + ")");
    seen.emplace(slot, key_at);
    s.expect('=');
    s.skip_inline();
    if (key == "m") {
      const Location at = s.where();
      m_value = Located<Integer>{s.integer(), at};
    } else if (key == "faces") {
      faces = parse_faces(s);
    } else if (key == "B") {
      matrix_at = s.where();
      matrix = parse_matrix(s);
    } else {
      form.terms = parse_linear(s);
      raw_forms.push_back(std::move(form));
    }
    s.skip_inline();
    if (!s.at_line_end()) s.fail("trailing data after '" + slot + "'" + s.found());
  }

  if (!m_value) throw ParseError(1, 1, "missing key 'm'");
  if (!faces) throw ParseError(1, 1, "missing key 'faces'");
  const Integer& mv = m_value->value;
  if (mv < 1 || mv > 64) Scanner::fail_at(m_value->where, "m must lie in [1, 64]");
  const auto m = static_cast<std::size_t>(mv.get_ui());

  ProblemSpec problem;
  std::vector<FaceMask> masks;
  for (const auto& face : *faces) {
    FaceMask mask = 0;
    for (const auto& v : face) {
      if (v.value < 1 || static_cast<std::size_t>(v.value) > m)
        Scanner::fail_at(v.where, "vertex " + std::to_string(v.value) + " out of range [1, " + std::to_string(m) + "]");
      const FaceMask bit = FaceMask{1} << (v.value - 1);
      if (mask & bit) Scanner::fail_at(v.where, "vertex " + std::to_string(v.value) + " repeated in a face");
      mask |= bit;
    }
    masks.push_back(mask);
  }
  problem.complex = SimplicialComplex::from_masks(m, masks);

  if (matrix) {
    for (const auto& row : *matrix)
      if (row.size() != m) {
        const Location at = row.empty() ? matrix_at : row.front().where;
        Scanner::fail_at(at, "matrix row has " + std::to_string(row.size()) + " entries but m = " + std::to_string(m));
      }
    IntMatrix B(matrix->size(), m);
    for (std::size_t r = 0; r < B.rows(); ++r)
      for (std::size_t c = 0; c < m; ++c) B(r, c) = (*matrix)[r][c].value;
    try {
      problem.subgroup = SubgroupData(std::move(B), m);
    } catch (const InputError& e) {
      Scanner::fail_at(matrix_at, e.what());
    }
  }

  for (const auto& rf : raw_forms) {
    IntVector coeffs(m);
    for (const auto& t : rf.terms) {
      if (t.var.value < 1 || static_cast<std::size_t>(t.var.value) > m)
        Scanner::fail_at(t.var.where,
                         "variable x" + std::to_string(t.var.value) + " out of range [1, " + std::to_string(m) + "]");
      coeffs[static_cast<std::size_t>(t.var.value - 1)] += t.coeff;
    }
    LinearForm form(std::move(coeffs));
    if (form.is_zero()) Scanner::fail_at(rf.name.where, "form '" + rf.name.value + "' is zero");
    problem.forms.push_back({rf.name.value, std::move(form)});
  }
  return problem;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_problem(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path);
  }
}

std::string render_problem(const ProblemSpec& problem) {
  std::ostringstream out;
  out << "m = " << problem.complex.vertex_count() << "\n";
  out << "faces =";
  for (FaceMask f : problem.complex.maximal_faces()) out << " " << face_to_string(f);
  out << "\n";
  if (problem.subgroup) {
    const IntMatrix& B = problem.subgroup->matrix();
    out << "B = [";
    for (std::size_t r = 0; r < B.rows(); ++r) {
      if (r > 0) out << " ;";
      for (std::size_t c = 0; c < B.cols(); ++c) out << (r == 0 && c == 0 ? "" : " ") << B(r, c).get_str();
    }
    out << "]\n";
  }
  for (const auto& f : problem.forms) out << "form " << f.name << " = " << f.form.to_string() << "\n";
  return out.str();
}

}  // namespace srtor::cli
