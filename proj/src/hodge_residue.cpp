#include "hodge/hodge_residue.hpp"

namespace hodge {

int residue_degree(const Hypersurface& h, int q) { return (q + 1) * h.degree() - h.ambient_dim() - 1; }

std::size_t HodgeDiamond::hodge_number(int p, int q) const {
  if (p < 0 || q < 0 || p > dimension || q > dimension) return 0;
  if (p + q == dimension) return middle_full[static_cast<std::size_t>(q)];
  return p == q ? 1 : 0;
}

HodgeDiamond primitive_hodge_numbers(const JacobianRing& ring) {
  ring.require_smooth("primitive_hodge_numbers");
  const Hypersurface& h = ring.surface();
  HodgeDiamond out;
  out.dimension = h.dimension();
  for (int q = 0; q <= out.dimension; ++q) out.middle_primitive.push_back(ring.dim(residue_degree(h, q)));
  out.middle_full = out.middle_primitive;
  if (out.dimension % 2 == 0) out.middle_full[static_cast<std::size_t>(out.dimension / 2)] += 1;
  if (h.degree() == 2 || out.dimension <= 1) {
    out.degenerate = true;
    out.note = h.degree() == 2 ? "quadric: Jacobian ring is C, only R_0 contributes"
                               : "curve: middle row is H^1, no primitive/Lefschetz split";
  }
  return out;
}

std::size_t middle_betti(const JacobianRing& ring) {
  const HodgeDiamond dia = primitive_hodge_numbers(ring);
  std::size_t total = 0;
  for (auto v : dia.middle_full) total += v;
  return total;
}

}  // namespace hodge
