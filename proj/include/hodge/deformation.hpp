#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hodge/certificate.hpp"
#include "hodge/mhs_pair.hpp"

namespace hodge {

/// Tangent space to deformations of a cubic pair fixing Y, modelled by R_2(Z).
/// A class [Q] lifts to the Y-fixing cubic direction x_N * Q.
struct TangentModel {
  const HypersurfacePair* pair = nullptr;
  std::vector<Monomial> basis;  // quotient basis of R_2(Z)
  ExactMatrix lift;             // R_2 -> R_3, multiplication by x_N
  std::size_t lift_rank = 0;

  std::size_t dim() const { return basis.size(); }
  bool lift_injective() const { return lift_rank == basis.size(); }
  /// The direction x_N * Q for a basis class Q.
  Polynomial direction(std::size_t i) const;
};

/// Throws PreconditionError unless Z is a cubic.
TangentModel tangent_space(const HypersurfacePair& pair);

/// Twist c with T_Z(-Y) = Omega^{n-1}_Z(c) for a cubic pair (c = N - 3).
int tangent_twist(const HypersurfacePair& pair);

/// Passes iff H^q(Omega^{n-1}_Z(N-3)) vanishes; q = 2 is the obstruction space.
/// Any other q is recorded in the witness as a misuse.
Certificate obstruction_vanishes(const HypersurfacePair& pair, int queried_degree = 2);

/// Subspace of S_degree given by reduced echelon rows over the monomial basis.
struct Subspace {
  int degree = 0;
  std::vector<Monomial> ambient;
  std::vector<SparseVector> rows;

  std::size_t dim() const { return rows.size(); }
  bool contains(const Polynomial& p) const;
};

/// Span of m * dF/dx_j together with F * S_{degree - d}: the image of
/// x_i d/dx_j -> x_i dF/dx_j and its multiples.
Subspace kappa_image(const HypersurfacePair& pair, int degree);

/// Product R_0 x R_2 -> R_2 and polarization R_2 x R_{sigma-2} -> R_sigma;
/// passes iff both have full rank.
Certificate jb_certificate(const HypersurfacePair& pair);

}  // namespace hodge
