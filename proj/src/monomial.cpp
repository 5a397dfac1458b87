#include "hodge/monomial.hpp"

#include <stdexcept>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

// Small binomial table; monomial counts stay far below 2^63 at the sizes used here.
std::size_t small_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::size_t>(r);
}

}  // namespace

Monomial::Monomial(std::size_t n_vars) : n_vars_(static_cast<std::uint8_t>(n_vars)) {
  if (n_vars > kMaxVars) throw PreconditionError("too many variables");
}

Monomial::Monomial(std::initializer_list<int> exponents) : Monomial(std::vector<int>(exponents)) {}

Monomial::Monomial(const std::vector<int>& exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t n_vars, std::size_t index) {
  Monomial m(n_vars);
  m.set(index, 1);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0 || e > 255) throw PreconditionError("exponent out of range");
  degree_ += e - exps_[i];
  exps_[i] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_vars_; ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (e > 255) throw PreconditionError("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_vars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_vars_; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw PreconditionError("monomial division not exact");
    r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  }
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (std::size_t i = 0; i < a.n_vars_; ++i)
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  return a.n_vars_ <=> b.n_vars_;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_vars_; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < n_vars_; ++i) h = (h ^ exps_[i]) * 1099511628211ULL;
  return h;
}

std::size_t mono_count(std::size_t n_vars, int degree) {
  if (degree < 0 || n_vars == 0) return degree == 0 && n_vars == 0 ? 1 : 0;
  return small_binomial(degree + static_cast<int>(n_vars) - 1, static_cast<int>(n_vars) - 1);
}

std::vector<Monomial> mono_basis(std::size_t n_vars, int degree) {
  if (n_vars < 1) throw PreconditionError("mono_basis needs at least one variable");
  std::vector<Monomial> out;
  if (degree < 0) return out;
  out.reserve(mono_count(n_vars, degree));
  std::vector<int> e(n_vars, 0);
  // Lexicographically descending enumeration of compositions of `degree`.
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos + 1 == n_vars) {
      e[pos] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, degree);
  return out;
}

std::size_t mono_rank(const Monomial& m) {
  const int n = static_cast<int>(m.size());
  int remaining = m.degree();
  std::size_t rank = 0;
  for (int i = 0; i + 1 < n; ++i) {
    // monomials sharing the prefix but with a larger exponent at position i
    for (int v = remaining; v > m[i]; --v) rank += small_binomial(remaining - v + n - i - 2, n - i - 2);
    remaining -= m[i];
  }
  return rank;
}

}  // namespace hodge
