#include "srtor/polynomial.hpp"

#include <cctype>

#include "srtor/errors.hpp"

namespace srtor {

std::string Monomial::to_string(char var) const {
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += var;
    s += std::to_string(i + 1);
    if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
  }
  return s;
}

namespace {

void fill_monomials(std::size_t var, std::size_t remaining, Monomial& current, std::vector<Monomial>& out) {
  if (var + 1 == current.nvars()) {
    current[var] = static_cast<std::uint32_t>(remaining);
    out.push_back(current);
    current[var] = 0;
    return;
  }
  for (std::size_t e = remaining + 1; e-- > 0;) {
    current[var] = static_cast<std::uint32_t>(e);
    fill_monomials(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_exponent_sum(std::size_t nvars, std::size_t sum) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (sum == 0) out.emplace_back(0);
    return out;
  }
  Monomial current(nvars);
  fill_monomials(0, sum, current, out);
  return out;
}

std::string coefficient_term_string(const Integer& c, const std::string& monomial) {
  if (monomial.empty()) return c.get_str();
  if (c == 1) return monomial;
  return c.get_str() + monomial;
}

std::string coefficient_term_string(const Rational& c, const std::string& monomial) {
  if (c.get_den() == 1) return coefficient_term_string(Integer(c.get_num()), monomial);
  if (monomial.empty()) return c.get_str();
  return "(" + c.get_str() + ")" + monomial;
}

RatPolynomial to_rational(const Polynomial& p) {
  RatPolynomial out(p.nvars());
  for (const auto& [m, c] : p.terms()) out.add_term(m, Rational(c));
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, char var) : text_(text), nvars_(nvars), var_(var) {}

  Polynomial parse() {
    Polynomial out(nvars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (consume_minus()) {
        sign = -1;
      } else if (peek() == '+') {
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      auto [mono, coeff] = parse_term();
      out.add_term(mono, sign * coeff);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Monomial, Integer> parse_term() {
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Integer(read_digits(), 10);
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != var_) fail("expected variable after '*'");
      }
    }
    Monomial mono(nvars_);
    bool have_factor = false;
    while (peek() == var_) {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
      const unsigned long index = std::stoul(read_digits());
      if (index < 1 || index > nvars_)
        fail("variable " + std::string(1, var_) + std::to_string(index) + " out of range [1, " +
             std::to_string(nvars_) + "]");
      std::uint32_t exponent = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        exponent = static_cast<std::uint32_t>(std::stoul(read_digits()));
      }
      mono[index - 1] += exponent;
      have_factor = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != var_) fail("expected variable after '*'");
      } else {
        break;
      }
    }
    if (!have_coeff && !have_factor) fail("expected a term");
    return {mono, coeff};
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool consume_minus() {
    if (peek() == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  std::string_view text_;
  std::size_t nvars_;
  char var_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, char var) {
  return PolyParser(text, nvars, var).parse();
}

}  // namespace srtor
