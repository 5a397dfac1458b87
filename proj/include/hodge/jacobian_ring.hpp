#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hodge/certificate.hpp"
#include "hodge/exact_matrix.hpp"
#include "hodge/monomial.hpp"
#include "hodge/polynomial.hpp"
#include "hodge/sparse_elimination.hpp"

namespace hodge {

/// Homogeneous form F of degree d >= 2 in N+1 >= 3 variables, i.e. a
/// hypersurface in projective N-space.
class Hypersurface {
 public:
  /// Throws PreconditionError unless F is homogeneous with d >= 2, N >= 2.
  explicit Hypersurface(Polynomial form);

  const Polynomial& form() const { return form_; }
  int ambient_dim() const { return ambient_dim_; }  // N
  int degree() const { return degree_; }           // d
  int dimension() const { return ambient_dim_ - 1; }
  std::size_t n_vars() const { return form_.n_vars(); }
  /// Degree of the socle of the Jacobian ring, (N+1)(d-2).
  int socle_degree() const { return static_cast<int>(n_vars()) * (degree_ - 2); }
  const std::vector<Polynomial>& gradient() const { return gradient_; }

  /// Section by x_N = 0, as a form in N variables.
  Hypersurface hyperplane_section() const;

  static Hypersurface fermat(std::size_t n_vars, int degree);

 private:
  Polynomial form_;
  int ambient_dim_ = 0;
  int degree_ = 0;
  std::vector<Polynomial> gradient_;
};

/// Degree slice R_k = S_k / J_k of the Jacobian ring.
///
/// J_k is spanned by m * dF/dx_j over monomials m of degree k-d+1. The
/// quotient basis consists of the grlex-earliest monomials whose images are
/// independent; reduce() is exact and annihilates exactly J_k.
class GradedQuotient {
 public:
  GradedQuotient(const Hypersurface& h, int degree);

  int degree() const { return degree_; }
  const std::vector<Monomial>& ambient_basis() const { return ambient_; }
  std::size_t ideal_rank() const { return ideal_rank_; }
  std::size_t dim() const { return quotient_.size(); }
  const std::vector<Monomial>& quotient_basis() const { return quotient_; }

  /// Coordinates of p in the quotient basis. p must be homogeneous of this
  /// degree (or zero).
  RationalVector reduce(const Polynomial& p) const;
  /// Representative of p's class supported on the quotient basis.
  Polynomial normal_form(const Polynomial& p) const;
  /// A_0..A_N with p - normal_form(p) == sum_j A_j * dF/dx_j.
  std::vector<Polynomial> ideal_components(const Polynomial& p) const;

  /// Matrix whose columns are the generators m * dF/dx_j written in the ambient basis.
  ExactMatrix ideal_basis() const;

 private:
  std::size_t column_of(const Monomial& m) const;
  SparseVector to_columns(const Polynomial& p) const;

  int degree_;
  std::size_t n_vars_;
  std::vector<Monomial> ambient_;
  std::vector<Monomial> multipliers_;  // monomials of degree (degree - d + 1)
  std::unique_ptr<SparseMatrix> generators_;
  std::vector<MatrixBlock> blocks_;
  std::vector<std::size_t> block_of_col_;
  std::vector<std::unique_ptr<BlockEchelon>> echelons_;
  std::size_t ideal_rank_ = 0;
  std::vector<Monomial> quotient_;
  std::vector<std::ptrdiff_t> quotient_index_of_col_;
};

/// Coefficients of ((1 - t^(d-1)) / (1 - t))^(N+1): the Hilbert function of
/// R when the partials form a regular sequence. Length (N+1)(d-2) + 1.
std::vector<std::size_t> hilbert_series_oracle(int ambient_dim, int degree);

/// Owns a hypersurface and caches its graded pieces. Thread-safe.
class JacobianRing {
 public:
  explicit JacobianRing(Hypersurface h) : surface_(std::make_unique<Hypersurface>(std::move(h))) {}
  JacobianRing(JacobianRing&&) = default;

  const Hypersurface& surface() const { return *surface_; }
  const GradedQuotient& piece(int degree) const;
  std::size_t dim(int degree) const { return degree < 0 ? 0 : piece(degree).dim(); }

  /// Smoothness certificate: passes iff dim R_{sigma+1} == 0. Cached.
  const Certificate& smoothness() const;
  bool is_smooth() const { return smoothness().passed; }
  /// Throws SingularError naming the first degree where dim R_k deviates
  /// from the regular-sequence Hilbert function.
  void require_smooth(const char* context) const;

  /// Socle coordinate of a degree-sigma polynomial.
  Rational socle_value(const Polynomial& p) const;

 private:
  std::unique_ptr<Hypersurface> surface_;
  mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::map<int, std::unique_ptr<GradedQuotient>> pieces_;
  mutable std::optional<Certificate> smooth_;
};

Certificate is_smooth(const JacobianRing& ring);

/// Matrix of v -> u*v from R_a to R_{a + deg u} in the quotient bases.
/// Targets above the socle give a matrix with zero rows.
ExactMatrix mult_operator(const JacobianRing& ring, const Polynomial& u, int a);

/// Pairing R_a x R_{sigma-a} -> R_sigma, read off through the socle coordinate.
struct SoclePairing {
  int a = 0;
  ExactMatrix matrix;
};

SoclePairing socle_pairing(const JacobianRing& ring, int a);

}  // namespace hodge
