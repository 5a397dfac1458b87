#include <random>

#include "doctest.h"
#include "hodge/deformation.hpp"
#include "hodge/errors.hpp"
#include "hodge/polynomial_parser.hpp"
#include "hodge/twisted_cohomology.hpp"
#include "test_support.hpp"

using namespace hodge;

namespace {

/// F(A x) for a random invertible A fixing x_N, so the section x_N = 0 is
/// transformed by the upper-left block.
Polynomial random_hyperplane_preserving_change(std::mt19937& rng, const Polynomial& f) {
  const std::size_t nv = f.n_vars();
  std::uniform_int_distribution<int> dist(-2, 2);
  for (;;) {
    ExactMatrix a(nv, nv);
    for (std::size_t i = 0; i + 1 < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j) a(i, j) = dist(rng);
    a(nv - 1, nv - 1) = 1;
    if (rank(a) < nv) continue;
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < nv; ++i) {
      Polynomial row(nv);
      for (std::size_t j = 0; j < nv; ++j) row += Polynomial::variable(nv, j) * a(i, j);
      images.push_back(row);
    }
    return f.substitute(images);
  }
}

}  // namespace

TEST_CASE("tangent space of the cubic pair") {
  const auto pair = HypersurfacePair::fermat_cubic_7();
  const TangentModel t = tangent_space(pair);
  CHECK(t.dim() == 21);
  CHECK(t.dim() == pair.z_ring().dim(2));
  const TwistedCell cell = twisted_hodge(pair.z_ring(), 4, tangent_twist(pair));
  CHECK(cell.h == CohomologyDims{{1, 21}});
  // x_6 is special for the Fermat pair: x_6 * x_i x_j vanishes in R_3 when
  // the quadric involves x_6.
  CHECK(t.lift_rank == 15);
  CHECK(t.direction(0).homogeneous_degree() == 3);
}

TEST_CASE("tangent lift is injective for a generic pair") {
  std::mt19937 rng(21);
  const auto pair = testing::random_smooth_pair(rng, 5, 20);
  const TangentModel t = tangent_space(pair);
  CHECK(t.dim() == 10);
  CHECK(t.lift_injective());
  CHECK(twisted_hodge(pair.z_ring(), 2, tangent_twist(pair)).h == CohomologyDims{{1, 10}});
}

TEST_CASE("tangent model preconditions") {
  const HypersurfacePair quintic(Hypersurface::fermat(5, 5).form());
  CHECK_THROWS_WITH_AS(tangent_space(quintic), "tangent model specific to cubic pairs", PreconditionError);
  CHECK_THROWS_AS(obstruction_vanishes(quintic), PreconditionError);
  CHECK_THROWS_AS(jb_certificate(quintic), PreconditionError);
  CHECK_THROWS_AS(HypersurfacePair(parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 7)), SingularError);
}

TEST_CASE("obstruction space vanishes") {
  const auto pair = HypersurfacePair::fermat_cubic_7();
  const Certificate ok = obstruction_vanishes(pair);
  CHECK(ok.passed);
  CHECK(ok.witness.at("value") == 0);
  CHECK(ok.witness.at("k") == 3);
  const Certificate misuse = obstruction_vanishes(pair, 1);
  CHECK_FALSE(misuse.passed);
  CHECK(misuse.witness.at("value") == 21);
  CHECK(misuse.witness.contains("misuse"));
}

TEST_CASE("kappa image equals the Jacobian ideal") {
  const auto pair = HypersurfacePair::fermat_cubic_7();
  CHECK(kappa_image(pair, 1).dim() == 0);
  CHECK(kappa_image(pair, 2).dim() == 7);
  CHECK(kappa_image(pair, 3).dim() == 49);
  for (int deg = 2; deg <= 5; ++deg) {
    const Subspace k = kappa_image(pair, deg);
    const GradedQuotient& q = pair.z_ring().piece(deg);
    CHECK(k.dim() == q.ideal_rank());
    for (const Monomial& m : mono_basis(7, deg - 2))
      for (const Polynomial& g : pair.z().gradient()) CHECK(k.contains(Polynomial(m) * g));
  }
  CHECK(kappa_image(pair, 3).contains(pair.z().form()));
  CHECK_FALSE(kappa_image(pair, 3).contains(parse_polynomial("x0*x1*x2", 7)));
}

TEST_CASE("kappa image on random pairs") {
  std::mt19937 rng(5);
  const auto pair = testing::random_smooth_pair(rng, 5, 4);
  for (int deg = 2; deg <= 4; ++deg) {
    const Subspace k = kappa_image(pair, deg);
    CHECK(k.dim() == pair.z_ring().piece(deg).ideal_rank());
    CHECK(k.dim() + pair.z_ring().dim(deg) == mono_basis(5, deg).size());
  }
}

TEST_CASE("contraction and polarization ranks") {
  const auto pair = HypersurfacePair::fermat_cubic_7();
  const Certificate c = jb_certificate(pair);
  CHECK(c.passed);
  CHECK(c.witness.at("product_rank") == 21);
  CHECK(c.witness.at("pairing_rank") == 21);
  CHECK(c.witness.at("product_is_identity") == true);
  CHECK(mult_operator(pair.z_ring(), Polynomial(7, 1), 2) == ExactMatrix::identity(21));
  const ExactMatrix m = matrix_from_json(c.witness.at("pairing_matrix"));
  CHECK(rank(m) == 21);
}

TEST_CASE("certificate ranks are invariant under coordinate changes") {
  std::mt19937 rng(17);
  const Polynomial base = Hypersurface::fermat(5, 3).form();
  const Certificate ref = jb_certificate(HypersurfacePair(base));
  CHECK(ref.passed);
  for (int trial = 0; trial < 2; ++trial) {
    const HypersurfacePair moved(random_hyperplane_preserving_change(rng, base));
    const Certificate c = jb_certificate(moved);
    CHECK(c.passed);
    CHECK(c.witness.at("product_rank") == ref.witness.at("product_rank"));
    CHECK(c.witness.at("pairing_rank") == ref.witness.at("pairing_rank"));
    CHECK(obstruction_vanishes(moved).passed);
    CHECK(tangent_space(moved).dim() == 10);
  }
}

TEST_CASE("coordinate change on the cubic 5-fold pair") {
  // Sparse unipotent change fixing x6: keeps the elimination blocks small.
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 7; ++i) images.push_back(Polynomial::variable(7, i));
  images[0] += Polynomial::variable(7, 1) * Rational(2);
  images[3] -= Polynomial::variable(7, 4);
  images[5] += Polynomial::variable(7, 6);
  const HypersurfacePair moved(Hypersurface::fermat(7, 3).form().substitute(images));
  const Certificate c = jb_certificate(moved);
  CHECK(c.passed);
  CHECK(c.witness.at("product_rank") == 21);
  CHECK(c.witness.at("pairing_rank") == 21);
}
