#include <random>

#include "doctest.h"
#include "hodge/errors.hpp"
#include "hodge/exact_matrix.hpp"
#include "hodge/monomial.hpp"
#include "hodge/polynomial.hpp"
#include "hodge/polynomial_parser.hpp"
#include "hodge/rational.hpp"
#include "test_support.hpp"

using namespace hodge;
using hodge::testing::ratio;

namespace {

Polynomial random_poly(std::mt19937& rng, std::size_t n_vars, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg), var(0, static_cast<int>(n_vars) - 1);
  Polynomial p(n_vars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(n_vars);
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) {
      const auto v = static_cast<std::size_t>(var(rng));
      m.set(v, m[v] + 1);
    }
    p.add_term(m, ratio(coef(rng), 1 + std::abs(coef(rng))));
  }
  return p;
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int rank_cap) {
  std::uniform_int_distribution<int> coef(-4, 4);
  ExactMatrix a(r, static_cast<std::size_t>(rank_cap)), b(static_cast<std::size_t>(rank_cap), c);
  for (std::size_t i = 0; i < r; ++i)
    for (int j = 0; j < rank_cap; ++j) a(i, static_cast<std::size_t>(j)) = coef(rng);
  for (int i = 0; i < rank_cap; ++i)
    for (std::size_t j = 0; j < c; ++j) b(static_cast<std::size_t>(i), j) = ratio(coef(rng), 1 + std::abs(coef(rng)));
  return a * b;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  Rational q = parse_rational("-6/4");
  CHECK(q == Rational(-3, 2));
  CHECK(to_string(q) == "-3/2");
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("binomials and line bundle Euler characteristics") {
  CHECK(binomial(8, 2) == 28);
  CHECK(binomial(3, 5) == 0);
  CHECK(euler_char_line_bundle(6, 0) == 1);
  CHECK(euler_char_line_bundle(6, -3) == 0);
  CHECK(euler_char_line_bundle(6, -7) == 1);  // h^6(O(-7)) = 1
  CHECK(euler_char_line_bundle(2, -4) == 3);
}

TEST_CASE("mono_basis counts and order") {
  CHECK(mono_basis(7, 2).size() == 28);
  CHECK(mono_basis(7, 5).size() == 462);
  CHECK(mono_basis(1, 9).size() == 1);
  const auto b = mono_basis(3, 3);
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(mono_rank(b[i]) == i);
    if (i > 0) CHECK(b[i - 1] > b[i]);
  }
  CHECK(b.front().to_string() == "x0^3");
  CHECK(b.back().to_string() == "x2^3");
}

TEST_CASE("partial derivatives") {
  CHECK(parse_polynomial("x0^3").partial_derivative(0) == parse_polynomial("3*x0^2"));
  CHECK(parse_polynomial("x0^3", 2).partial_derivative(1).is_zero());
  CHECK(parse_polynomial("x0*x1*x2").partial_derivative(1) == parse_polynomial("x0*x2", 3));
  CHECK_THROWS_AS(parse_polynomial("x0").partial_derivative(3), PreconditionError);
}

TEST_CASE("parser grammar") {
  const Polynomial p = parse_polynomial("x0^3 + x1^3 - 3*x0*x1*x2");
  CHECK(p.n_vars() == 3);
  CHECK(p.term_count() == 3);
  CHECK(p.homogeneous_degree() == 3);
  CHECK(parse_polynomial(" ( x0 + x1 ) ^ 2 ") == parse_polynomial("x0^2+2*x0*x1+x1^2"));
  CHECK(parse_polynomial("1/2*x0 - -x0", 1) == parse_polynomial("3/2*x0"));
  CHECK_FALSE(parse_polynomial("x0 + x1^2").homogeneous_degree().has_value());
  CHECK_THROWS_AS(parse_polynomial("x0 +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 ** 2"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("y0"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x3", 2), ParseError);
}

TEST_CASE("rank examples") {
  CHECK(rank(ExactMatrix::identity(5)) == 5);
  CHECK(rank(ExactMatrix(3, 4)) == 0);
  CHECK(rank(ExactMatrix::from_rows({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(ExactMatrix::identity(3)).empty());
  CHECK(kernel_basis(ExactMatrix(2, 3)).size() == 3);
  const auto k = kernel_basis(ExactMatrix::from_rows({{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
}

TEST_CASE("rank-nullity and kernel exactness on random matrices") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    const int cap = 1 + static_cast<int>(rng() % 6);
    const ExactMatrix m = random_matrix(rng, r, c, cap);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == c);
    CHECK(rank(m) <= static_cast<std::size_t>(cap));
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank_mod_p(m, 1000003) <= rank(m));
    for (const auto& v : ker)
      for (const auto& x : m.apply(v)) CHECK(x == 0);
    const auto e = reduced_row_echelon(m);
    CHECK(e.rank() == rank(m));
  }
}

TEST_CASE("solve and inverse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactMatrix m = random_matrix(rng, 4, 4, 4);
    const auto inv = inverse(m);
    if (rank(m) < 4) {
      CHECK_FALSE(inv.has_value());
      continue;
    }
    REQUIRE(inv.has_value());
    CHECK(m * *inv == ExactMatrix::identity(4));
    const RationalVector b{1, Rational(2, 3), -1, 5};
    const auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
  CHECK_FALSE(solve(ExactMatrix::from_rows({{1, 1}, {1, 1}}), {1, 2}).has_value());
}

TEST_CASE("polynomial ring axioms and Leibniz rule") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const Polynomial a = random_poly(rng, 4, 3, 5), b = random_poly(rng, 4, 3, 5), c = random_poly(rng, 4, 2, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    for (std::size_t j = 0; j < 4; ++j)
      CHECK((a * b).partial_derivative(j) == a.partial_derivative(j) * b + a * b.partial_derivative(j));
  }
}

TEST_CASE("Euler identity on homogeneous forms") {
  std::mt19937 rng(9);
  for (int d = 1; d <= 4; ++d) {
    Polynomial p(5);
    for (const auto& m : mono_basis(5, d))
      if (rng() % 3 == 0) p.add_term(m, static_cast<int>(rng() % 7) - 3);
    Polynomial lhs(5);
    for (std::size_t j = 0; j < 5; ++j) lhs += Polynomial::variable(5, j) * p.partial_derivative(j);
    CHECK(lhs == Rational(d) * p);
  }
}

TEST_CASE("substitution and restriction") {
  const Polynomial f = parse_polynomial("x0^2*x2 + x1^3 + x2^3");
  CHECK(f.restrict_to_hyperplane(2) == parse_polynomial("x1^3", 2));
  const std::vector<Polynomial> images{parse_polynomial("x0+x1", 3), Polynomial::variable(3, 1),
                                       Polynomial::variable(3, 2)};
  CHECK(parse_polynomial("x0^2", 3).substitute(images) == parse_polynomial("x0^2+2*x0*x1+x1^2", 3));
  CHECK(f.extend_vars(5).n_vars() == 5);
}
