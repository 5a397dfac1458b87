#include "doctest.h"
#include "hodge/errors.hpp"
#include "hodge/univariate.hpp"
#include "test_support.hpp"

using namespace hodge;
using hodge::testing::ratio;

TEST_CASE("univariate arithmetic") {
  const UPoly a({1, 0, 1});   // t^2 + 1
  const UPoly b({-1, 1});     // t - 1
  CHECK((a * b).to_string() == "t^3 - t^2 + t - 1");
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a(3) == 10);
  CHECK(a.derivative() == UPoly({0, 2}));
  const auto [q, r] = divmod(a, b);
  CHECK(q == UPoly({1, 1}));
  CHECK(r == UPoly::constant(2));
  CHECK_THROWS_AS(divmod(a, UPoly()), PreconditionError);
  CHECK(UPoly({ratio(1, 2), 3}).to_string() == "3*t + 1/2");
}

TEST_CASE("gcd and squarefree part") {
  const UPoly x1({-1, 1}), x2({2, 1});
  const UPoly f = x1 * x1 * x2;
  const UPoly g = x1 * UPoly({5, 0, 1});
  CHECK(gcd(f, g) == x1);
  CHECK(gcd(Rational(4) * x2, UPoly()) == x2);
  CHECK(squarefree_part(f) == x1 * x2);
  CHECK(squarefree_part(UPoly::constant(7)) == UPoly::constant(1));
}

TEST_CASE("interpolation recovers random polynomials") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> c(1 + trial % 7);
    for (auto& x : c) x = ratio(dist(rng), 1 + trial % 4);
    const UPoly p(c);
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 8; ++i) {
      xs.push_back(ratio(i * 3 - 7, 2));
      ys.push_back(p(xs.back()));
    }
    CHECK(interpolate(xs, ys) == p);
  }
  CHECK_THROWS_AS(interpolate({1, 1}, {0, 1}), PreconditionError);
}
