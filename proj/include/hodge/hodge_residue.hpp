#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hodge/jacobian_ring.hpp"

namespace hodge {

/// Middle-row Hodge numbers of a smooth hypersurface of dimension n.
struct HodgeDiamond {
  int dimension = 0;                         // n = N - 1
  std::vector<std::size_t> middle_primitive;  // h^{n-q,q}_prim, q = 0..n
  std::vector<std::size_t> middle_full;       // plus the hyperplane class at q = n/2 for even n
  bool degenerate = false;                    // quadrics (d = 2) or curves (n <= 1)
  std::string note;

  /// h^{p,q} anywhere in the diamond: middle row from the Jacobian ring,
  /// Lefschetz 1's on the diagonal elsewhere.
  std::size_t hodge_number(int p, int q) const;
};

/// Jacobian-ring degree that carries h^{n-q,q}_prim: (q+1)d - N - 1.
int residue_degree(const Hypersurface& h, int q);

/// Throws SingularError for singular input.
HodgeDiamond primitive_hodge_numbers(const JacobianRing& ring);

std::size_t middle_betti(const JacobianRing& ring);

}  // namespace hodge
