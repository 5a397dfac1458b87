#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

/// Dense polynomial in one variable over Q; coeffs[i] multiplies t^i and the
/// leading coefficient is never zero.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly monomial(int degree, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  bool operator==(const UPoly& o) const = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws PreconditionError on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Monic product of the distinct irreducible factors.
UPoly squarefree_part(const UPoly& a);
/// Unique polynomial of degree < n through the n points (distinct abscissae).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace hodge
