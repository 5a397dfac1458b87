#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hodge {

/// Exponent vector in at most kMaxVars variables.
///
/// Monomials are totally ordered by graded lexicographic order: higher total
/// degree first, then lexicographically with x0 the most significant
/// variable. `mono_basis` lists monomials from the largest to the smallest,
/// so "earliest" always means "largest in grlex".
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;

  Monomial() = default;
  explicit Monomial(std::size_t n_vars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(const std::vector<int>& exponents);

  static Monomial variable(std::size_t n_vars, std::size_t index);

  std::size_t size() const { return n_vars_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Exact quotient; requires divides(other) as `other / *this`.
  Monomial operator/(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const = default;
  /// Graded lexicographic comparison (greater = earlier in listings).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint8_t n_vars_ = 0;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Orders std::map keys so iteration runs from the grlex-largest monomial.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

/// All monomials of the given total degree, grlex-largest first.
/// Count is binomial(degree + n_vars - 1, n_vars - 1).
std::vector<Monomial> mono_basis(std::size_t n_vars, int degree);

/// Number of monomials of a given degree.
std::size_t mono_count(std::size_t n_vars, int degree);

/// Position of `m` inside mono_basis(m.size(), m.degree()); O(n * d).
std::size_t mono_rank(const Monomial& m);

}  // namespace hodge
