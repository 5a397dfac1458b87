#include <random>

#include "doctest.h"
#include "hodge/errors.hpp"
#include "hodge/hodge_residue.hpp"
#include "hodge/mhs_pair.hpp"
#include "hodge/polynomial_parser.hpp"
#include "test_support.hpp"

using namespace hodge;

TEST_CASE("primitive Hodge numbers") {
  const auto five = primitive_hodge_numbers(JacobianRing(Hypersurface::fermat(7, 3)));
  CHECK(five.middle_primitive == std::vector<std::size_t>{0, 0, 21, 21, 0, 0});
  const auto four = primitive_hodge_numbers(JacobianRing(Hypersurface::fermat(6, 3)));
  CHECK(four.middle_primitive == std::vector<std::size_t>{0, 1, 20, 1, 0});
  CHECK(four.middle_full == std::vector<std::size_t>{0, 1, 21, 1, 0});
  const auto quintic = primitive_hodge_numbers(JacobianRing(Hypersurface::fermat(5, 5)));
  CHECK(quintic.middle_primitive == std::vector<std::size_t>{1, 101, 101, 1});
  CHECK_FALSE(quintic.degenerate);
}

TEST_CASE("middle Betti numbers") {
  CHECK(middle_betti(JacobianRing(Hypersurface::fermat(7, 3))) == 42);
  CHECK(middle_betti(JacobianRing(Hypersurface::fermat(6, 3))) == 23);
  JacobianRing quadric(Hypersurface::fermat(4, 2));
  CHECK(middle_betti(quadric) == 2);
  const auto dq = primitive_hodge_numbers(quadric);
  CHECK(dq.degenerate);
  CHECK(dq.middle_primitive == std::vector<std::size_t>{0, 1, 0});
  CHECK(primitive_hodge_numbers(JacobianRing(Hypersurface::fermat(3, 3))).degenerate);  // plane cubic
  CHECK(middle_betti(JacobianRing(Hypersurface::fermat(3, 3))) == 2);
  CHECK_THROWS_AS(middle_betti(JacobianRing(Hypersurface(parse_polynomial("x0^3+x1^3", 3)))), SingularError);
}

TEST_CASE("Hodge symmetry and Lefschetz diagonal") {
  std::mt19937 rng(4);
  for (std::size_t nv : {4u, 5u, 6u}) {
    JacobianRing ring(testing::random_smooth_cubic(rng, nv, 3));
    const auto dia = primitive_hodge_numbers(ring);
    const int n = dia.dimension;
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) CHECK(dia.hodge_number(p, q) == dia.hodge_number(q, p));
    for (int i = 0; i <= n; ++i)
      if (2 * i != n) CHECK(dia.hodge_number(i, i) == 1);
  }
}

TEST_CASE("cubic pair mixed Hodge structure") {
  const auto pair = HypersurfacePair::fermat_cubic_7();
  const MhsReport r = gysin_assemble(pair);
  CHECK(r.n == 5);
  CHECK(r.dim_total == 64);
  CHECK(r.dim_W_lower == 42);
  CHECK(r.f_dim(3) == 42);
  CHECK(r.f_dim(4) == 1);
  CHECK(r.f_dim(5) == 0);
  CHECK(r.f_dim(2) == 64);
  CHECK(r.hodge_lower == HodgeTypes{{{3, 2}, 21}, {{2, 3}, 21}});
  CHECK(r.gr_upper_hodge == HodgeTypes{{{4, 2}, 1}, {{3, 3}, 20}, {{2, 4}, 1}});
  CHECK(r.audit.empty());
  CHECK(r.i_star_rank + r.weight_sum_upper() == r.betti_y);
}

TEST_CASE("audit against the printed cubic table gives one finding") {
  const MhsReport r = gysin_assemble(HypersurfacePair::fermat_cubic_7());
  const auto findings = audit(r, ClaimTable::cubic_fivefold_published());
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].code == "claim");
  CHECK(findings[0].message.find("h_6^{3,3} = 21, derived 20") != std::string::npos);
  CHECK(findings[0].message.find("65") != std::string::npos);
  CHECK(findings[0].message.find("restores consistency") != std::string::npos);
}

TEST_CASE("corrupted report gives one additivity finding") {
  MhsReport r = gysin_assemble(HypersurfacePair::fermat_cubic_7());
  r.dim_total += 1;
  const auto findings = audit(r);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].code == "additivity");
}

TEST_CASE("claim table parsing") {
  const auto j = nlohmann::json::parse(R"({"dim_total": 64, "F": {"3": 42}, "hodge": {"6": {"3,3": 20}}})");
  const ClaimTable c = ClaimTable::from_json(j);
  CHECK(c.dim_total == 64);
  CHECK(c.f_dims.at(3) == 42);
  CHECK(c.hodge.at(6).at({3, 3}) == 20);
  const MhsReport r = gysin_assemble(HypersurfacePair::fermat_cubic_7());
  CHECK(audit(r, c).empty());
  CHECK_THROWS_AS(ClaimTable::from_json(nlohmann::json::parse(R"({"hodge": {"6": {"33": 1}}})")), ParseError);
}

TEST_CASE("top Hodge level cross-check") {
  const auto cubic = f_top_cross_check(HypersurfacePair::fermat_cubic_7());
  CHECK(cubic.passed);
  CHECK(cubic.witness.at("level") == 4);
  CHECK(cubic.witness.at("log_value") == 1);
  const auto quintic = f_top_cross_check(HypersurfacePair(Hypersurface::fermat(5, 5).form()));
  CHECK(quintic.passed);
  CHECK(quintic.witness.at("level") == 3);
  CHECK(quintic.witness.at("log_value") == 5);
  const auto even = f_top_cross_check(HypersurfacePair(Hypersurface::fermat(6, 3).form()));
  CHECK_FALSE(even.passed);
  CHECK(even.witness.at("skipped") == true);
}

TEST_CASE("Betti route and filtration on random pairs") {
  std::mt19937 rng(8);
  for (std::size_t nv : {5u, 6u, 7u}) {
    const auto pair = testing::random_smooth_pair(rng, nv, 3);
    const MhsReport r = gysin_assemble(pair);
    CHECK(r.audit.empty());
    CHECK(r.dim_total + 1 == r.betti_z + r.betti_y);
    CHECK(r.f_dim(r.n + 1) == 0);
    for (int p = 1; p <= r.n + 1; ++p) CHECK(r.f_dim(p) <= r.f_dim(p - 1));
    if (!r.even_dimension) { const auto c = f_top_cross_check(pair); INFO(nv, c.witness.dump()); CHECK(c.passed == c.witness.value("quotient_acyclic", true)); }
  }
}

TEST_CASE("singular section is rejected") {
  CHECK_THROWS_AS(HypersurfacePair(parse_polynomial("x0^3+x1^3+x2^3+x3^2*x4+x4^3")), SingularError);
}
