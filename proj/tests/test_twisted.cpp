#include <random>

#include "doctest.h"
#include "hodge/errors.hpp"
#include "hodge/hodge_residue.hpp"
#include "hodge/polynomial_parser.hpp"
#include "hodge/twisted_cohomology.hpp"
#include "test_support.hpp"

using namespace hodge;

namespace {

// d o d = 0 as polynomial matrices: sum over middle terms of composed entries.
bool squares_to_zero(const LineBundleComplex& c) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, Polynomial> acc;
  for (const auto& e1 : c.entries())
    for (const auto& e2 : c.entries()) {
      if (e2.src_term != e1.tgt_term || e2.src_comp != e1.tgt_comp) continue;
      auto key = std::make_tuple(e1.src_term, e1.src_comp, e2.tgt_term, e2.tgt_comp);
      auto it = acc.try_emplace(key, Polynomial(c.n_vars())).first;
      it->second += e2.coeff * e1.coeff;
    }
  for (const auto& [key, v] : acc)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("Bott formula examples") {
  CHECK(bott_formula(6, 0, 0) == CohomologyDims{{0, 1}});
  CHECK(bott_formula(6, 3, 0) == CohomologyDims{{3, 1}});
  CHECK(bott_formula(6, 1, 1).empty());
  CHECK(bott_formula(6, 1, 2) == CohomologyDims{{0, 21}});
  CHECK(bott_formula(6, 5, 7) == CohomologyDims{{0, 48}});  // tangent bundle, sl_7
  CHECK(bott_formula(2, 2, -3) == CohomologyDims{{2, 10}});  // O(-6) on the plane
}

TEST_CASE("Euler-Koszul engine reproduces Bott on projective space") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (long k = -6; k <= 6; ++k) {
        const auto c = projective_forms_complex(n, p, k);
        CHECK(squares_to_zero(c));
        const auto hc = hypercohomology(c);
        REQUIRE(hc.certified);
        CHECK(hc.dims == bott_formula(n, p, k));
      }
}

TEST_CASE("twisted-forms complex is a complex") {
  const Hypersurface h(parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x0*x1*x2+2*x2*x3*x4"));
  for (int p = 0; p <= 3; ++p)
    for (long k : {-2L, 0L, 3L}) CHECK(squares_to_zero(twisted_forms_complex(h, p, k)));
}

TEST_CASE("cubic 5-fold examples") {
  JacobianRing ring(Hypersurface::fermat(7, 3));
  // h^2(Omega^2) = 1 is the square of the hyperplane class.
  CHECK(twisted_hodge(ring, 2, 0).h == CohomologyDims{{2, 1}, {3, 21}});
  CHECK(twisted_hodge(ring, 3, 2).h == CohomologyDims{{2, 35}});
  CHECK(twisted_hodge(ring, 4, 3).h == CohomologyDims{{1, 21}});
  CHECK(euler_characteristic(ring.surface(), 5, 2) == 0);
  CHECK(twisted_hodge(ring, 5, 2).h.empty());
  CHECK(euler_characteristic(ring.surface(), 0, 0) == 1);
  CHECK(euler_characteristic(ring.surface(), 3, 0) == 20);  // h^2 = 21, h^3 = 1
}

TEST_CASE("singular input is rejected") {
  JacobianRing cone(Hypersurface(parse_polynomial("x0^3+x1^3+x2^3", 4)));
  CHECK_THROWS_AS(twisted_hodge(cone, 1, 0), SingularError);
}

TEST_CASE("alternating sums, Serre duality, vanishing and Hodge numbers on surfaces and threefolds") {
  std::mt19937 rng(23);
  std::vector<Hypersurface> cases{Hypersurface::fermat(4, 3), Hypersurface::fermat(4, 4),
                                  testing::random_smooth_cubic(rng, 4), testing::random_smooth_cubic(rng, 5, 3)};
  for (const auto& h : cases) {
    JacobianRing ring(h);
    const int n = h.dimension();
    const HodgeDiamond dia = primitive_hodge_numbers(ring);
    for (int p = 0; p <= n; ++p)
      for (long k = -4; k <= 4; ++k) {
        const TwistedCell cell = twisted_hodge(ring, p, k);
        CHECK(cell.consistent());
        if (k > 0)
          for (const auto& [q, v] : cell.h) CHECK_MESSAGE(p + q <= n, "Akizuki-Nakano p=", p, " q=", q, " k=", k);
        if (k == 0)
          for (int q = 0; q <= n; ++q) {
            const auto it = cell.h.find(q);
            CHECK((it == cell.h.end() ? 0 : it->second) == dia.hodge_number(p, q));
          }
        const auto direct = twisted_hodge_via(ring, p, k, TwistedRoute::Direct);
        const auto dual = twisted_hodge_via(ring, p, k, TwistedRoute::SerreDual);
        if (direct && dual) CHECK(*direct == *dual);
      }
  }
}

TEST_CASE("both routes agree wherever both are certified") {
  std::mt19937 rng(31);
  JacobianRing surface(Hypersurface::fermat(4, 3));
  JacobianRing threefold(testing::random_smooth_cubic(rng, 5, 3));
  std::size_t both = 0;
  for (const JacobianRing* ring : {&surface, &threefold}) {
    const int n = ring->surface().dimension();
    for (int p = 0; p <= n; ++p)
      for (long k = -3; k <= 3; ++k) {
        const auto a = twisted_hodge_via(*ring, p, k, TwistedRoute::Direct);
        const auto b = twisted_hodge_via(*ring, p, k, TwistedRoute::SerreDual);
        if (a && b) {
          ++both;
          CHECK(*a == *b);
        }
      }
  }
  CHECK(both >= 20);
}

TEST_CASE("table JSON cells") {
  JacobianRing ring(Hypersurface::fermat(4, 3));
  const TwistedTable t = twisted_table(ring, 1, 1, 0, 1);
  const auto j = to_json(t);
  REQUIRE(j.size() == 2);
  CHECK(j[0].at("p") == 1);
  CHECK(j[0].at("h").at("1") == 7);  // cubic surface h^{1,1} = 7
  CHECK(j[0].contains("chi"));
}
