#include "hodge/jacobian_ring.hpp"

#include <algorithm>
#include <string>

#include "hodge/errors.hpp"

namespace hodge {

Hypersurface::Hypersurface(Polynomial form) : form_(std::move(form)) {
  const auto deg = form_.homogeneous_degree();
  if (!deg) throw PreconditionError("hypersurface form must be nonzero and homogeneous");
  if (*deg < 2) throw PreconditionError("hypersurface degree must be at least 2");
  if (form_.n_vars() < 3) throw PreconditionError("hypersurface needs at least 3 variables (N >= 2)");
  degree_ = *deg;
  ambient_dim_ = static_cast<int>(form_.n_vars()) - 1;
  for (std::size_t j = 0; j < form_.n_vars(); ++j) gradient_.push_back(form_.partial_derivative(j));
}

Hypersurface Hypersurface::hyperplane_section() const {
  return Hypersurface(form_.restrict_to_hyperplane(n_vars() - 1));
}

Hypersurface Hypersurface::fermat(std::size_t n_vars, int degree) {
  Polynomial f(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i) {
    Monomial m(n_vars);
    m.set(i, degree);
    f.add_term(m, 1);
  }
  return Hypersurface(std::move(f));
}

GradedQuotient::GradedQuotient(const Hypersurface& h, int degree)
    : degree_(degree), n_vars_(h.n_vars()) {
  if (degree < 0) throw PreconditionError("negative degree");
  ambient_ = mono_basis(n_vars_, degree);
  const int mult_degree = degree - h.degree() + 1;
  if (mult_degree >= 0) multipliers_ = mono_basis(n_vars_, mult_degree);

  generators_ = std::make_unique<SparseMatrix>(multipliers_.size() * n_vars_, ambient_.size());
  for (std::size_t i = 0; i < multipliers_.size(); ++i)
    for (std::size_t j = 0; j < n_vars_; ++j)
      for (const auto& [m, c] : h.gradient()[j].terms())
        generators_->add(i * n_vars_ + j, column_of(multipliers_[i] * m), c);
  generators_->finalize();

  blocks_ = connected_blocks(*generators_);
  block_of_col_.assign(ambient_.size(), 0);
  std::vector<bool> is_pivot(ambient_.size(), false);
  echelons_.resize(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t c : blocks_[b].cols) block_of_col_[c] = b;
    if (blocks_[b].rows.empty()) continue;
    echelons_[b] = std::make_unique<BlockEchelon>(*generators_, blocks_[b]);
    ideal_rank_ += echelons_[b]->rank();
    for (std::size_t p : echelons_[b]->pivot_cols()) is_pivot[p] = true;
  }
  // Column order is the reverse of the listing, so non-pivots read backwards
  // are the grlex-earliest independent monomials.
  quotient_index_of_col_.assign(ambient_.size(), -1);
  for (std::size_t idx = 0; idx < ambient_.size(); ++idx) {
    const std::size_t col = column_of(ambient_[idx]);
    if (!is_pivot[col]) {
      quotient_index_of_col_[col] = static_cast<std::ptrdiff_t>(quotient_.size());
      quotient_.push_back(ambient_[idx]);
    }
  }
}

std::size_t GradedQuotient::column_of(const Monomial& m) const { return ambient_.size() - 1 - mono_rank(m); }

SparseVector GradedQuotient::to_columns(const Polynomial& p) const {
  SparseVector v;
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != degree_ || m.size() != n_vars_)
      throw PreconditionError("GradedQuotient: polynomial not homogeneous of degree " + std::to_string(degree_));
    v.emplace_back(column_of(m), c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

namespace {

// Splits a column vector by block and applies fn(block_index, part).
template <typename Fn>
void for_each_block_part(const SparseVector& v, const std::vector<std::size_t>& block_of_col, Fn&& fn) {
  std::map<std::size_t, SparseVector> parts;
  for (const auto& [c, x] : v) parts[block_of_col[c]].emplace_back(c, x);
  for (auto& [b, part] : parts) fn(b, part);
}

}  // namespace

RationalVector GradedQuotient::reduce(const Polynomial& p) const {
  RationalVector coords(quotient_.size());
  for_each_block_part(to_columns(p), block_of_col_, [&](std::size_t b, const SparseVector& part) {
    const SparseVector nf = echelons_[b] ? echelons_[b]->reduce(part) : part;
    for (const auto& [c, x] : nf) {
      const auto q = quotient_index_of_col_[c];
      if (q < 0) throw PreconditionError("GradedQuotient::reduce: residual on a pivot column");
      coords[static_cast<std::size_t>(q)] += x;
    }
  });
  return coords;
}

Polynomial GradedQuotient::normal_form(const Polynomial& p) const {
  const RationalVector coords = reduce(p);
  Polynomial out(n_vars_);
  for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(quotient_[i], coords[i]);
  return out;
}

std::vector<Polynomial> GradedQuotient::ideal_components(const Polynomial& p) const {
  std::vector<Polynomial> comps(n_vars_, Polynomial(n_vars_));
  const Polynomial rest = p - normal_form(p);
  for_each_block_part(to_columns(rest), block_of_col_, [&](std::size_t b, const SparseVector& part) {
    if (!echelons_[b]) throw PreconditionError("ideal_components: vector outside the ideal");
    const RationalVector y = echelons_[b]->lift(*generators_, part);
    const auto& rows = echelons_[b]->basis_rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (y[i] == 0) continue;
      comps[rows[i] % n_vars_].add_term(multipliers_[rows[i] / n_vars_], y[i]);
    }
  });
  return comps;
}

ExactMatrix GradedQuotient::ideal_basis() const {
  ExactMatrix m(ambient_.size(), generators_->rows());
  for (std::size_t r = 0; r < generators_->rows(); ++r)
    for (const auto& [c, x] : generators_->row(r)) m(ambient_.size() - 1 - c, r) = x;
  return m;
}

std::vector<std::size_t> hilbert_series_oracle(int ambient_dim, int degree) {
  if (degree < 2 || ambient_dim < 0) throw PreconditionError("hilbert_series_oracle: need d >= 2");
  std::vector<Integer> coeffs{1};
  for (int f = 0; f <= ambient_dim; ++f) {
    std::vector<Integer> next(coeffs.size() + static_cast<std::size_t>(degree - 2));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      for (int k = 0; k <= degree - 2; ++k) next[i + static_cast<std::size_t>(k)] += coeffs[i];
    coeffs = std::move(next);
  }
  std::vector<std::size_t> out;
  for (const auto& c : coeffs) out.push_back(c.get_ui());
  return out;
}

const GradedQuotient& JacobianRing::piece(int degree) const {
  if (degree < 0) throw PreconditionError("negative degree");
  std::lock_guard lock(*mutex_);
  auto& slot = pieces_[degree];
  if (!slot) slot = std::make_unique<GradedQuotient>(*surface_, degree);
  return *slot;
}

const Certificate& JacobianRing::smoothness() const {
  {
    std::lock_guard lock(*mutex_);
    if (smooth_) return *smooth_;
  }
  const int top = surface_->socle_degree() + 1;
  const GradedQuotient& q = piece(top);
  Certificate c;
  c.name = "smoothness";
  c.passed = q.dim() == 0;
  c.summary = c.passed ? "R_" + std::to_string(top) + " = 0" : "R_" + std::to_string(top) + " != 0 (singular)";
  c.witness = {{"degree", top},
               {"ambient_dim", q.ambient_basis().size()},
               {"ideal_rank", q.ideal_rank()},
               {"quotient_dim", q.dim()}};
  std::lock_guard lock(*mutex_);
  if (!smooth_) smooth_ = std::move(c);
  return *smooth_;
}

void JacobianRing::require_smooth(const char* context) const {
  if (is_smooth()) return;
  const auto oracle = hilbert_series_oracle(surface_->ambient_dim(), surface_->degree());
  int first = surface_->socle_degree() + 1;
  for (int k = 0; k <= surface_->socle_degree(); ++k)
    if (dim(k) != oracle[static_cast<std::size_t>(k)]) {
      first = k;
      break;
    }
  throw SingularError(std::string(context) + ": hypersurface is singular (Hilbert function deviates at degree " +
                      std::to_string(first) + ")");
}

Rational JacobianRing::socle_value(const Polynomial& p) const {
  const GradedQuotient& top = piece(surface_->socle_degree());
  if (top.dim() != 1) throw SingularError("socle undefined");
  return top.reduce(p)[0];
}

Certificate is_smooth(const JacobianRing& ring) { return ring.smoothness(); }

ExactMatrix mult_operator(const JacobianRing& ring, const Polynomial& u, int a) {
  ring.require_smooth("mult_operator");
  const auto du = u.is_zero() ? std::optional<int>(0) : u.homogeneous_degree();
  if (!du) throw PreconditionError("mult_operator: multiplier must be homogeneous");
  const GradedQuotient& src = ring.piece(a);
  const int target = a + *du;
  if (target > ring.surface().socle_degree()) return ExactMatrix(0, src.dim());
  const GradedQuotient& dst = ring.piece(target);
  ExactMatrix m(dst.dim(), src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    if (u.is_zero()) continue;
    const RationalVector col = dst.reduce(u * Polynomial(src.quotient_basis()[i]));
    for (std::size_t r = 0; r < col.size(); ++r) m(r, i) = col[r];
  }
  return m;
}

SoclePairing socle_pairing(const JacobianRing& ring, int a) {
  if (!ring.is_smooth()) throw SingularError("socle undefined");
  const int sigma = ring.surface().socle_degree();
  if (a < 0 || a > sigma) throw PreconditionError("socle_pairing: degree outside [0, sigma]");
  const GradedQuotient& left = ring.piece(a);
  const GradedQuotient& right = ring.piece(sigma - a);
  SoclePairing out{a, ExactMatrix(left.dim(), right.dim())};
  for (std::size_t i = 0; i < left.dim(); ++i)
    for (std::size_t j = 0; j < right.dim(); ++j)
      out.matrix(i, j) = ring.socle_value(Polynomial(left.quotient_basis()[i] * right.quotient_basis()[j]));
  return out;
}

}  // namespace hodge
