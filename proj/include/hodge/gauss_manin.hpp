#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hodge/certificate.hpp"
#include "hodge/mhs_pair.hpp"
#include "hodge/univariate.hpp"

namespace hodge {

/// The form A * Omega / F^k on the complement of the hypersurface, with
/// deg A = k*d - N - 1.
struct ResidueClass {
  Polynomial numerator;
  int pole_order = 1;
};

/// deg A required for pole order k: k*d - (N+1).
int numerator_degree(const Hypersurface& h, int pole_order);

/// Griffiths-Dwork step: A = sum_j A_j dF/dx_j at pole order k is
/// cohomologous to (1/(k-1)) * sum_j dA_j/dx_j at pole order k-1.
Polynomial griffiths_dwork_step(const std::vector<Polynomial>& components, int pole_order);

/// Lowers the pole order while the numerator lies in the Jacobian ideal.
/// Throws PreconditionError on a degree mismatch.
ResidueClass reduce_pole(const JacobianRing& ring, const ResidueClass& c);

/// Monomial frame of primitive middle cohomology: for each pole order k the
/// quotient basis of R_{kd-N-1}, ordered by increasing k.
struct ResidueFrame {
  struct Slot {
    int pole_order;
    int degree;
    std::size_t offset;
    std::size_t dim;
  };
  std::vector<Slot> slots;
  std::vector<ResidueClass> classes;

  std::size_t size() const { return classes.size(); }
  const Slot* slot_for_pole(int k) const;
};

ResidueFrame residue_frame(const JacobianRing& ring);

/// Coordinates in the frame after complete reduction.
RationalVector frame_coordinates(const JacobianRing& ring, const ResidueFrame& frame, const ResidueClass& c);

/// Coordinates of A/F_e^k with F_e = F + e*H over Q[e]/(e^2), where A = a0 + e*a1.
/// Returns the value and the e-coefficient.
std::pair<RationalVector, RationalVector> dual_frame_coordinates(const JacobianRing& ring, const ResidueFrame& frame,
                                                                 const Polynomial& h, const Polynomial& a0,
                                                                 const Polynomial& a1, int pole_order);

/// Base point and formal directions F + sum t_i G_i.
class Family {
 public:
  /// Throws SingularError if F is singular and PreconditionError if a
  /// direction is not a form of degree d in the same variables.
  Family(const Polynomial& base, std::vector<Polynomial> directions);
  Family(std::shared_ptr<const JacobianRing> ring, std::vector<Polynomial> directions);

  const JacobianRing& ring() const { return *ring_; }
  const Hypersurface& base() const { return ring_->surface(); }
  const std::vector<Polynomial>& directions() const { return directions_; }
  const ResidueFrame& frame() const { return frame_; }

 private:
  void validate() const;
  std::shared_ptr<const JacobianRing> ring_;
  std::vector<Polynomial> directions_;
  ResidueFrame frame_;
};

/// Column j holds the frame coordinates of the derivative of frame class j,
/// d/dt (A/F_t^k) = -k*A*G/F^{k+1}.
struct ConnectionMatrix {
  std::size_t direction_index = 0;
  ExactMatrix matrix;
};

ConnectionMatrix connection_matrix(const Family& fam, std::size_t direction_index);

/// Connection matrix along G_i and its derivative along H, both at the base point.
std::pair<ExactMatrix, ExactMatrix> connection_with_derivative(const Family& fam, std::size_t direction_index,
                                                               const Polynomial& h);

/// Passes iff the derivative of a pole-order-k class has no component of pole order above k+1.
Certificate transversality(const Family& fam, const ConnectionMatrix& m);

/// Compares each graded block (pole k -> k+1) with multiplication by G
/// (or by `against` when given) on the Jacobian ring; the documented
/// constant is -k. Passes iff every block equals -k times the ring operator.
Certificate ks_compatibility(const Family& fam, std::size_t direction_index,
                             const std::optional<Polynomial>& against = std::nullopt);

/// Zero-curvature check for two directions: dA_v/du + A_u A_v = dA_u/dv + A_v A_u.
Certificate flatness(const Family& fam, std::size_t u, std::size_t v);

using LinearFunctional = std::function<Rational(const Polynomial&)>;

/// Entry (i, j) = phi(NF(u * v_i) * v_j), the normal form taken in R_{a + deg u}.
ExactMatrix symmetry_form(const JacobianRing& ring, const Polynomial& u, const std::vector<Polynomial>& frame,
                          const LinearFunctional& phi);

/// Functional on S_degree with pseudo-random integer values on monomials.
LinearFunctional ambient_functional(std::size_t n_vars, int degree, std::uint32_t seed);

/// For each Y-fixing cubic direction u = x_N * Q, the form socle(NF(u v) w)
/// on R_a x R_a, a = (sigma - 3)/2, must be symmetric. Throws
/// PreconditionError for non-cubic pairs, even n, or u not divisible by x_N.
/// A replacement functional on S_sigma can be supplied as a negative control.
Certificate symmetry_certificate(const HypersurfacePair& pair, const std::vector<Polynomial>& directions,
                                 const std::optional<LinearFunctional>& functional = std::nullopt);

/// Directions x_N * m for m in the quotient basis of R_{d-1} (21 for the cubic 5-fold).
std::vector<Polynomial> coordinate_directions(const HypersurfacePair& pair);

/// Operator sum_i P_i(t) (d/dt)^i annihilating a frame class along F + t*G.
struct PicardFuchs {
  bool found = false;
  int order = 0;
  std::vector<UPoly> coefficients;  // P_0 .. P_order, P_order monic
  std::vector<Rational> samples;    // t-values used, including the verification points
  std::string method;
};

/// Samples rational t, reduces the derivative tower exactly at each, and
/// solves for polynomial coefficients of the smallest degree.
PicardFuchs picard_fuchs(const Family& fam, std::size_t class_index, int max_order, int max_coeff_degree = 12);

nlohmann::json to_json(const PicardFuchs& pf);

}  // namespace hodge
