#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodge/monomial.hpp"
#include "hodge/rational.hpp"

namespace hodge {

/// Multivariate polynomial over Q in a fixed number of variables.
/// Zero coefficients are never stored; terms iterate grlex-largest first.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n_vars) : n_vars_(n_vars) {}
  Polynomial(std::size_t n_vars, const Rational& constant);
  Polynomial(const Monomial& m, const Rational& c = 1);

  static Polynomial variable(std::size_t n_vars, std::size_t index);

  std::size_t n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of m (zero when absent).
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Common degree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const { return n_vars_ == other.n_vars_ && terms_ == other.terms_; }

  Polynomial partial_derivative(std::size_t var_index) const;

  /// Substitute x_i -> images[i] (all images in a common ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Sets variable `index` to zero and drops it, giving a polynomial in one fewer variables.
  Polynomial restrict_to_hyperplane(std::size_t index) const;

  /// Reinterprets in more variables (appended variables absent).
  Polynomial extend_vars(std::size_t n_vars) const;

  std::string to_string() const;

 private:
  std::size_t n_vars_ = 0;
  TermMap terms_;
};

}  // namespace hodge
