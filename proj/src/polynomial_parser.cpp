#include "hodge/polynomial_parser.hpp"

#include <cctype>
#include <string>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

// Parse into an oversized ring first, then shrink to the requested arity.
constexpr std::size_t kScratchVars = Monomial::kMaxVars;

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_ += c;
  }

  Polynomial parse() {
    if (src_.empty()) fail("empty input");
    Polynomial p = expr();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

  std::size_t max_var() const { return max_var_; }
  bool saw_var() const { return saw_var_; }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  Polynomial expr() {
    Polynomial acc(kScratchVars);
    bool negate = false;
    if (peek('+') || peek('-')) negate = src_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = src_[pos_++] == '-';
      Polynomial t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("exponent must be a nonnegative integer");
      if (digits.size() > 3) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    if (peek('(')) {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    if (peek('x')) {
      ++pos_;
      const std::string digits = read_digits();
      if (digits.empty()) fail("variable needs an index");
      if (digits.size() > 2) fail("variable index too large");
      const std::size_t idx = std::stoul(digits);
      if (idx >= kScratchVars) fail("variable index too large");
      saw_var_ = true;
      if (idx > max_var_) max_var_ = idx;
      return Polynomial::variable(kScratchVars, idx);
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      std::string lit = read_digits();
      if (peek('/')) {
        ++pos_;
        const std::string den = read_digits();
        if (den.empty()) fail("malformed rational literal");
        lit += '/' + den;
      }
      return Polynomial(kScratchVars, parse_rational(lit));
    }
    if (pos_ >= src_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, src_[pos_]) + "'");
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) out += src_[pos_++];
    return out;
  }

  std::string src_;
  std::size_t pos_ = 0;
  std::size_t max_var_ = 0;
  bool saw_var_ = false;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n_vars) {
  Parser parser(text);
  Polynomial wide = parser.parse();
  const std::size_t needed = parser.saw_var() ? parser.max_var() + 1 : 1;
  if (n_vars == 0) n_vars = needed;
  if (n_vars < needed) throw ParseError("polynomial uses x" + std::to_string(needed - 1) + " but only " +
                                        std::to_string(n_vars) + " variables were declared");
  Polynomial out(n_vars);
  for (const auto& [m, c] : wide.terms()) {
    Monomial small(n_vars);
    for (std::size_t i = 0; i < n_vars; ++i) small.set(i, m[i]);
    out.add_term(small, c);
  }
  return out;
}

}  // namespace hodge
