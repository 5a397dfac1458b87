#include "hodge/univariate.hpp"

#include <algorithm>

#include "hodge/errors.hpp"

namespace hodge {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + Rational(-1) * b; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(v));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return UPoly(std::move(v));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool show = i == 0 || mag != 1;
    if (show) out += hodge::to_string(mag);
    if (i > 0) {
      if (show) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1));
  std::vector<Rational> r = a.coeffs();
  const Rational lead = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    const Rational f = r[i + b.degree()] / lead;
    q[i] = f;
    if (f == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) r[i + j] -= f * b.coeff(j);
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) x = std::exchange(y, divmod(x, y).second);
  return x.monic();
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a.is_zero() ? a : UPoly::constant(1);
  return divmod(a, gcd(a, a.derivative())).first.monic();
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw PreconditionError("interpolate: size mismatch");
  UPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly basis = UPoly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw PreconditionError("interpolate: repeated abscissa");
      basis = basis * UPoly({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / denom) * basis;
  }
  return acc;
}

}  // namespace hodge
