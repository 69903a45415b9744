#include "srtor/matrix.hpp"

#include <cctype>

#include "srtor/errors.hpp"

namespace srtor {

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
  IntMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  IntMatrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

IntMatrix parse_int_matrix(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw InputError("matrix: expected '['");
  ++pos;
  std::vector<std::vector<Integer>> rows(1);
  bool closed = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    char ch = text[pos];
    if (ch == ']') {
      closed = true;
      ++pos;
      break;
    }
    if (ch == ';') {
      rows.emplace_back();
      ++pos;
      continue;
    }
    std::size_t start = pos;
    if (ch == '+' || ch == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && (ch == '+' || ch == '-')))
      throw InputError("matrix: unexpected character '" + std::string(1, ch) + "'");
    std::string token(text.substr(start, pos - start));
    if (token[0] == '+') token.erase(0, 1);
    rows.back().emplace_back(token, 10);
  }
  if (!closed) throw InputError("matrix: missing ']'");
  skip_ws();
  if (pos != text.size()) throw InputError("matrix: trailing characters after ']'");
  if (rows.size() == 1 && rows[0].empty()) return IntMatrix();
  const std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols || cols == 0) throw InputError("matrix: rows must be nonempty and of equal length");
  return IntMatrix::from_rows(rows, cols);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

}  // namespace srtor
