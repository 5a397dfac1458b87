#include "hodge/polynomial.hpp"

#include "hodge/errors.hpp"

namespace hodge {

Polynomial::Polynomial(std::size_t n_vars, const Rational& constant) : n_vars_(n_vars) {
  add_term(Monomial(n_vars), constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) : n_vars_(m.size()) { add_term(m, c); }

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t index) {
  return Polynomial(Monomial::variable(n_vars, index));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (m.size() != n_vars_) throw PreconditionError("monomial arity mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

int Polynomial::max_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (n_vars_ == 0 && terms_.empty()) n_vars_ = other.n_vars_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (n_vars_ == 0 && terms_.empty()) n_vars_ = other.n_vars_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.n_vars_ ? a.n_vars_ : b.n_vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(n_vars_, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::partial_derivative(std::size_t var_index) const {
  if (var_index >= n_vars_) throw PreconditionError("partial_derivative: variable index out of range");
  Polynomial r(n_vars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[var_index];
    if (e == 0) continue;
    Monomial dm = m;
    dm.set(var_index, e - 1);
    r.add_term(dm, c * e);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != n_vars_) throw PreconditionError("substitute: need one image per variable");
  const std::size_t target_vars = images.empty() ? 0 : images.front().n_vars();
  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(n_vars_);
  Polynomial r(target_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial term(target_vars, c);
    for (std::size_t i = 0; i < n_vars_; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.emplace_back(target_vars, Rational(1));
      while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * images[i]);
      if (m[i] > 0) term = term * pw[m[i]];
    }
    r += term;
  }
  return r;
}

Polynomial Polynomial::restrict_to_hyperplane(std::size_t index) const {
  if (index >= n_vars_) throw PreconditionError("restrict_to_hyperplane: index out of range");
  Polynomial r(n_vars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[index] != 0) continue;
    Monomial small(n_vars_ - 1);
    for (std::size_t i = 0, j = 0; i < n_vars_; ++i)
      if (i != index) small.set(j++, m[i]);
    r.add_term(small, c);
  }
  return r;
}

Polynomial Polynomial::extend_vars(std::size_t n_vars) const {
  if (n_vars < n_vars_) throw PreconditionError("extend_vars: cannot shrink");
  Polynomial r(n_vars);
  for (const auto& [m, c] : terms_) {
    Monomial big(n_vars);
    for (std::size_t i = 0; i < n_vars_; ++i) big.set(i, m[i]);
    r.add_term(big, c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    if (m.degree() == 0) {
      out += mag.get_str();
    } else {
      if (!unit) out += mag.get_str() + '*';
      out += m.to_string();
    }
  }
  return out;
}

}  // namespace hodge
