#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hodge/certificate.hpp"
#include "hodge/jacobian_ring.hpp"

namespace hodge {

/// Smooth hypersurface Z with its smooth hyperplane section Y = Z cap {x_N = 0}.
class HypersurfacePair {
 public:
  /// Throws SingularError if Z or Y is singular.
  explicit HypersurfacePair(const Polynomial& form);

  /// Fermat cubic in 7 variables with Y the 6-variable Fermat cubic.
  static HypersurfacePair fermat_cubic_7();
  /// Built-in pairs by name; throws PreconditionError for unknown names.
  static HypersurfacePair named(const std::string& name);

  const Hypersurface& z() const { return z_ring_->surface(); }
  const Hypersurface& y() const { return y_ring_->surface(); }
  const JacobianRing& z_ring() const { return *z_ring_; }
  const JacobianRing& y_ring() const { return *y_ring_; }

 private:
  std::shared_ptr<JacobianRing> z_ring_;
  std::shared_ptr<JacobianRing> y_ring_;
};

using HodgeTypes = std::map<std::pair<int, int>, std::size_t>;  // (p, q) -> h, nonzero only

struct AuditFinding {
  std::string code;  // "additivity", "filtration", "symmetry", "betti", "claim"
  std::string message;
};

/// Dimensions of the weight and Hodge filtrations on H^n(U), U = Z \ Y.
struct MhsReport {
  int n = 0;
  std::size_t dim_total = 0;
  std::size_t dim_W_lower = 0;          // Gr^W_n
  HodgeTypes hodge_lower;                // types of Gr^W_n, weight n
  HodgeTypes gr_upper_hodge;             // types of Gr^W_{n+1} = ker(i_*)(-1)
  std::vector<std::size_t> hodge_filtration_dims;  // dim F^p, p = 0..n+1
  std::size_t i_star_rank = 0;           // H^{n-1}(Y) -> H^{n+1}(Z)
  std::size_t lower_gysin_rank = 0;      // H^{n-2}(Y)(-1) -> H^n(Z)
  std::size_t betti_z = 0, betti_y = 0;  // middle Betti numbers
  bool even_dimension = false;
  std::vector<AuditFinding> audit;

  std::size_t f_dim(int p) const;
  std::size_t weight_sum_upper() const;
};

/// Claimed values for audit mode. Hodge entries are keyed by weight then (p, q).
struct ClaimTable {
  std::optional<std::size_t> dim_total;
  std::map<int, std::size_t> f_dims;
  std::map<int, HodgeTypes> hodge;
  bool hodge_exhaustive = false;  // unlisted Hodge numbers are claimed to be zero

  static ClaimTable from_json(const nlohmann::json& j);
  /// Values printed for the cubic 5-fold pair (with h_6^{3,3} = 21).
  static ClaimTable cubic_fivefold_published();
};

MhsReport gysin_assemble(const HypersurfacePair& pair);

/// Consistency checks on a report; with claims, every disagreement is
/// reported once, attributed to the claimed value that causes it.
std::vector<AuditFinding> audit(const MhsReport& report, const std::optional<ClaimTable>& claims = std::nullopt);

/// Top nonzero Hodge level recomputed through twisted cohomology of Z:
/// F^n = h^0(Omega^n_Z(1)), and F^{n-1} = h^1(Omega^{n-1}_Z(1)) when
/// Omega^n_Z(2) is acyclic (closed-form triple).
Certificate f_top_cross_check(const HypersurfacePair& pair);

nlohmann::json to_json(const MhsReport& r);

}  // namespace hodge
