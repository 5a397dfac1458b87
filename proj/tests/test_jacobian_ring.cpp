#include <random>

#include "doctest.h"
#include "hodge/errors.hpp"
#include "hodge/jacobian_ring.hpp"
#include "hodge/polynomial_parser.hpp"
#include "test_support.hpp"

using namespace hodge;

namespace {

// Greedy quotient basis by dense linear algebra: walk monomials in listing
// order and keep those independent of J_k plus the previously kept ones.
std::vector<Monomial> greedy_quotient_oracle(const Hypersurface& h, int k) {
  const auto ambient = mono_basis(h.n_vars(), k);
  std::vector<RationalVector> rows;
  if (k - h.degree() + 1 >= 0)
    for (const auto& m : mono_basis(h.n_vars(), k - h.degree() + 1))
      for (const auto& g : h.gradient()) {
        RationalVector r(ambient.size());
        const Polynomial gen = Polynomial(m) * g;
        for (const auto& [t, c] : gen.terms()) r[mono_rank(t)] = c;
        rows.push_back(r);
      }
  std::size_t base = rows.empty() ? 0 : rank(ExactMatrix::from_rows(rows));
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    RationalVector r(ambient.size());
    r[i] = 1;
    rows.push_back(r);
    const std::size_t rk = rank(ExactMatrix::from_rows(rows));
    if (rk > base) {
      kept.push_back(ambient[i]);
      base = rk;
    } else {
      rows.pop_back();
    }
  }
  return kept;
}

}  // namespace

TEST_CASE("Fermat cubic pieces") {
  JacobianRing ring(Hypersurface::fermat(7, 3));
  CHECK(ring.dim(0) == 1);
  CHECK(ring.dim(2) == 21);
  CHECK(ring.dim(7) == 1);
  CHECK(ring.dim(8) == 0);
  CHECK(ring.is_smooth());
  const auto oracle = hilbert_series_oracle(6, 3);
  for (int k = 0; k <= 7; ++k) CHECK(ring.dim(k) == oracle[static_cast<std::size_t>(k)]);
}

TEST_CASE("Hilbert series oracle") {
  CHECK(hilbert_series_oracle(6, 3) == std::vector<std::size_t>{1, 7, 21, 35, 35, 21, 7, 1});
  CHECK(hilbert_series_oracle(5, 3) == std::vector<std::size_t>{1, 6, 15, 20, 15, 6, 1});
  CHECK(hilbert_series_oracle(4, 5)[5] == 101);
}

TEST_CASE("smoothness gate") {
  CHECK_FALSE(JacobianRing(Hypersurface(parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 7))).is_smooth());
  CHECK_FALSE(JacobianRing(Hypersurface(parse_polynomial("x0^2*x1", 3))).is_smooth());
  JacobianRing cone(Hypersurface(parse_polynomial("x0^3+x1^3", 3)));
  CHECK_THROWS_AS(cone.require_smooth("test"), SingularError);
  CHECK_THROWS_AS(socle_pairing(cone, 0), SingularError);
  CHECK_THROWS_AS(Hypersurface(parse_polynomial("x0^3+x1", 3)), PreconditionError);
  CHECK_THROWS_AS(Hypersurface(parse_polynomial("x0^2+x1^2")), PreconditionError);
}

TEST_CASE("quotient basis agrees with the greedy oracle") {
  for (const auto& text : {"x0^3+x1^3+x2^3+x0*x1*x2", "x0^3+x1^3+x2^3+x3^3+x0*x1*x2+2*x1*x2*x3",
                           "x0^4+x1^4+x2^4+x0^2*x1*x2"}) {
    const Hypersurface h(parse_polynomial(text));
    JacobianRing ring(h);
    for (int k = 0; k <= h.socle_degree() + 1; ++k) CHECK(ring.piece(k).quotient_basis() == greedy_quotient_oracle(h, k));
  }
}

TEST_CASE("reduce annihilates the ideal and ideal components reconstruct") {
  const Hypersurface h(parse_polynomial("x0^3+x1^3+x2^3+x3^3+x4^3+x0*x1*x2-x2*x3*x4"));
  JacobianRing ring(h);
  CHECK(ring.is_smooth());
  CHECK(ring.piece(3).reduce(h.form()) == RationalVector(ring.dim(3)));
  std::mt19937 rng(2);
  for (int k = 2; k <= 4; ++k) {
    const auto& q = ring.piece(k);
    Polynomial p(5);
    for (const auto& m : mono_basis(5, k))
      if (rng() % 4 == 0) p.add_term(m, static_cast<int>(rng() % 9) - 4);
    const auto comps = q.ideal_components(p);
    Polynomial rebuilt = q.normal_form(p);
    for (std::size_t j = 0; j < 5; ++j) rebuilt += comps[j] * h.gradient()[j];
    CHECK(rebuilt == p);
    for (std::size_t j = 0; j < 5; ++j) {
      const Polynomial gen = Polynomial(mono_basis(5, k - 2)[0]) * h.gradient()[j];
      CHECK(q.reduce(gen) == RationalVector(q.dim()));
    }
    CHECK(q.ambient_basis().size() - rank(q.ideal_basis()) == q.dim());
  }
}

TEST_CASE("mult_operator examples") {
  JacobianRing ring(Hypersurface::fermat(7, 3));
  CHECK(mult_operator(ring, Polynomial(7, 1), 2) == ExactMatrix::identity(21));
  const ExactMatrix m = mult_operator(ring, parse_polynomial("x6*x0*x1", 7), 2);
  CHECK(m.rows() == 21);
  CHECK(m.cols() == 21);
  CHECK(rank(m) <= 21);
  CHECK(mult_operator(ring, parse_polynomial("x0^2", 7), 2).is_zero());
  CHECK(mult_operator(ring, parse_polynomial("x0^2", 7), 7).rows() == 0);
}

TEST_CASE("socle pairing on the Fermat cubic") {
  JacobianRing ring(Hypersurface::fermat(7, 3));
  CHECK(rank(socle_pairing(ring, 2).matrix) == 21);
  const auto p0 = socle_pairing(ring, 0).matrix;
  CHECK(p0.rows() == 1);
  CHECK(p0(0, 0) != 0);
  CHECK(socle_pairing(ring, 7).matrix == p0.transpose());
  CHECK(socle_pairing(ring, 5).matrix == socle_pairing(ring, 2).matrix.transpose());
}

TEST_CASE("duality and self-adjointness on random smooth forms") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    const Hypersurface h = testing::random_smooth_cubic(rng, 5);
    JacobianRing ring(h);
    const int sigma = h.socle_degree();
    for (int a = 0; a <= sigma; ++a) {
      CHECK(ring.dim(a) == ring.dim(sigma - a));
      CHECK(rank(socle_pairing(ring, a).matrix) == ring.dim(a));
    }
    const Polynomial u = testing::random_form(rng, 5, 1);
    const int a = 1;
    const auto& ra = ring.piece(a);
    const auto& rb = ring.piece(sigma - a - 1);
    for (std::size_t i = 0; i < ra.dim(); ++i)
      for (std::size_t j = 0; j < rb.dim(); ++j) {
        const Polynomial v(ra.quotient_basis()[i]), w(rb.quotient_basis()[j]);
        CHECK(ring.socle_value(u * v * w) == ring.socle_value(v * (u * w)));
      }
  }
}
