#include "hodge/gauss_manin.hpp"

#include <random>
#include <string>

#include "hodge/errors.hpp"

namespace hodge {

int numerator_degree(const Hypersurface& h, int pole_order) {
  return pole_order * h.degree() - static_cast<int>(h.n_vars());
}

namespace {

void check_degree(const Hypersurface& h, const Polynomial& a, int pole_order) {
  if (pole_order < 1) throw PreconditionError("pole order must be positive");
  if (a.is_zero()) return;
  const auto deg = a.homogeneous_degree();
  if (!deg || *deg != numerator_degree(h, pole_order))
    throw PreconditionError("numerator degree mismatch: pole order " + std::to_string(pole_order) +
                            " needs degree " + std::to_string(numerator_degree(h, pole_order)));
}

bool all_zero(const RationalVector& v) {
  for (const Rational& x : v)
    if (x != 0) return false;
  return true;
}

/// Writes coordinates of a normal form into `out` at the slot for pole k;
/// a nonzero class without a slot means the frame is incomplete.
void deposit(const ResidueFrame& frame, int k, const RationalVector& coords, RationalVector& out) {
  if (all_zero(coords)) return;
  const ResidueFrame::Slot* s = frame.slot_for_pole(k);
  if (!s) throw SingularError("reduction produced a class outside the frame at pole order " + std::to_string(k));
  for (std::size_t i = 0; i < coords.size(); ++i) out[s->offset + i] += coords[i];
}

Polynomial zero_like(const Hypersurface& h) { return Polynomial(h.n_vars()); }

}  // namespace

Polynomial griffiths_dwork_step(const std::vector<Polynomial>& components, int pole_order) {
  if (pole_order < 2) throw PreconditionError("cannot lower pole order 1");
  if (components.empty()) throw PreconditionError("griffiths_dwork_step: no components");
  Polynomial acc(components.front().n_vars());
  for (std::size_t j = 0; j < components.size(); ++j) acc += components[j].partial_derivative(j);
  return acc * Rational(1, pole_order - 1);
}

ResidueClass reduce_pole(const JacobianRing& ring, const ResidueClass& c) {
  const Hypersurface& h = ring.surface();
  check_degree(h, c.numerator, c.pole_order);
  ring.require_smooth("reduce_pole");
  ResidueClass cur = c;
  while (cur.pole_order > 1) {
    const int deg = numerator_degree(h, cur.pole_order);
    if (deg < 0) {
      cur = {zero_like(h), cur.pole_order - 1};
      continue;
    }
    const GradedQuotient& q = ring.piece(deg);
    if (!all_zero(q.reduce(cur.numerator))) break;
    cur = {griffiths_dwork_step(q.ideal_components(cur.numerator), cur.pole_order), cur.pole_order - 1};
  }
  return cur;
}

const ResidueFrame::Slot* ResidueFrame::slot_for_pole(int k) const {
  for (const Slot& s : slots)
    if (s.pole_order == k) return &s;
  return nullptr;
}

ResidueFrame residue_frame(const JacobianRing& ring) {
  ring.require_smooth("residue_frame");
  const Hypersurface& h = ring.surface();
  ResidueFrame f;
  for (int k = 1; k <= h.ambient_dim(); ++k) {
    const int deg = numerator_degree(h, k);
    if (deg < 0 || deg > h.socle_degree()) continue;
    const GradedQuotient& q = ring.piece(deg);
    if (q.dim() == 0) continue;
    f.slots.push_back({k, deg, f.classes.size(), q.dim()});
    for (const Monomial& m : q.quotient_basis()) f.classes.push_back({Polynomial(m), k});
  }
  return f;
}

RationalVector frame_coordinates(const JacobianRing& ring, const ResidueFrame& frame, const ResidueClass& c) {
  const Hypersurface& h = ring.surface();
  check_degree(h, c.numerator, c.pole_order);
  RationalVector out(frame.size());
  Polynomial cur = c.numerator;
  for (int k = c.pole_order; k >= 1 && !cur.is_zero(); --k) {
    const GradedQuotient& q = ring.piece(numerator_degree(h, k));
    deposit(frame, k, q.reduce(cur), out);
    if (k == 1) break;
    cur = griffiths_dwork_step(q.ideal_components(cur), k);
  }
  return out;
}

std::pair<RationalVector, RationalVector> dual_frame_coordinates(const JacobianRing& ring, const ResidueFrame& frame,
                                                                 const Polynomial& h, const Polynomial& a0,
                                                                 const Polynomial& a1, int pole_order) {
  const Hypersurface& hs = ring.surface();
  check_degree(hs, a0, pole_order);
  check_degree(hs, a1, pole_order);
  std::vector<Polynomial> dh;
  for (std::size_t j = 0; j < hs.n_vars(); ++j) dh.push_back(h.partial_derivative(j));
  RationalVector c0(frame.size()), c1(frame.size());
  Polynomial b0 = a0, b1 = a1;
  for (int k = pole_order; k >= 1 && !(b0.is_zero() && b1.is_zero()); --k) {
    const GradedQuotient& q = ring.piece(numerator_degree(hs, k));
    const std::vector<Polynomial> comps0 = q.ideal_components(b0);
    Polynomial rest = b1;
    for (std::size_t j = 0; j < comps0.size(); ++j) rest -= comps0[j] * dh[j];
    deposit(frame, k, q.reduce(b0), c0);
    deposit(frame, k, q.reduce(rest), c1);
    if (k == 1) break;
    const std::vector<Polynomial> comps1 = q.ideal_components(rest);
    b0 = griffiths_dwork_step(comps0, k);
    b1 = griffiths_dwork_step(comps1, k);
  }
  return {c0, c1};
}

Family::Family(const Polynomial& base, std::vector<Polynomial> directions)
    : Family(std::make_shared<const JacobianRing>(Hypersurface(base)), std::move(directions)) {}

Family::Family(std::shared_ptr<const JacobianRing> ring, std::vector<Polynomial> directions)
    : ring_(std::move(ring)), directions_(std::move(directions)) {
  ring_->require_smooth("family base point");
  validate();
  frame_ = residue_frame(*ring_);
}

void Family::validate() const {
  const Hypersurface& h = base();
  for (const Polynomial& g : directions_) {
    if (g.n_vars() != h.n_vars()) throw PreconditionError("direction lives in a different number of variables");
    if (g.is_zero()) continue;
    const auto deg = g.homogeneous_degree();
    if (!deg || *deg != h.degree()) throw PreconditionError("direction must be a form of degree d");
  }
}

ConnectionMatrix connection_matrix(const Family& fam, std::size_t direction_index) {
  const Polynomial& g = fam.directions().at(direction_index);
  const ResidueFrame& frame = fam.frame();
  ConnectionMatrix out{direction_index, ExactMatrix(frame.size(), frame.size())};
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const ResidueClass& e = frame.classes[j];
    const ResidueClass d{e.numerator * g * Rational(-e.pole_order), e.pole_order + 1};
    const RationalVector col = frame_coordinates(fam.ring(), frame, d);
    for (std::size_t i = 0; i < col.size(); ++i) out.matrix(i, j) = col[i];
  }
  return out;
}

std::pair<ExactMatrix, ExactMatrix> connection_with_derivative(const Family& fam, std::size_t direction_index,
                                                               const Polynomial& h) {
  const Polynomial& g = fam.directions().at(direction_index);
  const ResidueFrame& frame = fam.frame();
  ExactMatrix value(frame.size(), frame.size()), slope(frame.size(), frame.size());
  const Polynomial none(fam.base().n_vars());
  for (std::size_t j = 0; j < frame.size(); ++j) {
    const ResidueClass& e = frame.classes[j];
    const auto [c0, c1] =
        dual_frame_coordinates(fam.ring(), frame, h, e.numerator * g * Rational(-e.pole_order), none, e.pole_order + 1);
    for (std::size_t i = 0; i < frame.size(); ++i) {
      value(i, j) = c0[i];
      slope(i, j) = c1[i];
    }
  }
  return {value, slope};
}

Certificate transversality(const Family& fam, const ConnectionMatrix& m) {
  const ResidueFrame& frame = fam.frame();
  Certificate c;
  c.name = "transversality";
  nlohmann::json violations = nlohmann::json::array();
  int max_shift = 0;
  for (const auto& src : frame.slots)
    for (const auto& dst : frame.slots) {
      bool nonzero = false;
      for (std::size_t i = 0; i < dst.dim && !nonzero; ++i)
        for (std::size_t j = 0; j < src.dim && !nonzero; ++j) nonzero = m.matrix(dst.offset + i, src.offset + j) != 0;
      if (!nonzero) continue;
      max_shift = std::max(max_shift, dst.pole_order - src.pole_order);
      if (dst.pole_order > src.pole_order + 1)
        violations.push_back({{"from_pole", src.pole_order}, {"to_pole", dst.pole_order}});
    }
  c.passed = violations.empty();
  c.witness = {{"direction", m.direction_index}, {"max_pole_shift", max_shift}, {"violations", violations},
               {"frame_size", frame.size()}};
  c.summary = "pole order rises by at most " + std::to_string(max_shift);
  return c;
}

Certificate ks_compatibility(const Family& fam, std::size_t direction_index, const std::optional<Polynomial>& against) {
  const ConnectionMatrix conn = connection_matrix(fam, direction_index);
  const Polynomial& g = against ? *against : fam.directions().at(direction_index);
  const ResidueFrame& frame = fam.frame();
  Certificate c;
  c.name = "ks_compatibility";
  c.passed = true;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& src : frame.slots) {
    const ResidueFrame::Slot* dst = frame.slot_for_pole(src.pole_order + 1);
    if (!dst) continue;
    ExactMatrix block(dst->dim, src.dim);
    for (std::size_t i = 0; i < dst->dim; ++i)
      for (std::size_t j = 0; j < src.dim; ++j) block(i, j) = conn.matrix(dst->offset + i, src.offset + j);
    const ExactMatrix ring_op = mult_operator(fam.ring(), g, src.degree);
    const Rational expected = -src.pole_order;
    std::optional<Rational> scalar;
    for (std::size_t i = 0; i < ring_op.rows() && !scalar; ++i)
      for (std::size_t j = 0; j < ring_op.cols() && !scalar; ++j)
        if (ring_op(i, j) != 0) scalar = Rational(block(i, j) / ring_op(i, j));
    const bool proportional = scalar ? block == *scalar * ring_op : block.is_zero();
    const bool ok = block == expected * ring_op;
    c.passed = c.passed && ok;
    levels.push_back({{"from_pole", src.pole_order},
                      {"scalar", scalar ? nlohmann::json(to_string(*scalar)) : nlohmann::json(nullptr)},
                      {"expected_scalar", to_string(expected)},
                      {"proportional", proportional},
                      {"block", to_json(block)},
                      {"ring_operator", to_json(ring_op)}});
  }
  c.witness = {{"direction", fam.directions().at(direction_index).to_string()}, {"levels", levels}};
  if (against) c.witness["compared_against"] = against->to_string();
  c.summary = c.passed ? "graded blocks equal -k times multiplication in the Jacobian ring"
                       : "graded block differs from the ring operator";
  return c;
}

Certificate flatness(const Family& fam, std::size_t u, std::size_t v) {
  const auto [au, dv_au] = connection_with_derivative(fam, u, fam.directions().at(v));
  const auto [av, du_av] = connection_with_derivative(fam, v, fam.directions().at(u));
  const ExactMatrix lhs = du_av + au * av;
  const ExactMatrix rhs = dv_au + av * au;
  Certificate c;
  c.name = "flatness";
  c.passed = lhs == rhs;
  c.witness = {{"u", u}, {"v", v}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)},
               {"commutator_zero", (au * av - av * au).is_zero()},
               {"derivatives_zero", dv_au.is_zero() && du_av.is_zero()}};
  c.summary = c.passed ? "curvature vanishes" : "curvature is nonzero";
  return c;
}

ExactMatrix symmetry_form(const JacobianRing& ring, const Polynomial& u, const std::vector<Polynomial>& frame,
                          const LinearFunctional& phi) {
  ExactMatrix out(frame.size(), frame.size());
  if (u.is_zero()) return out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Polynomial uv = u * frame[i];
    if (uv.is_zero()) continue;
    const Polynomial nf = ring.piece(*uv.homogeneous_degree()).normal_form(uv);
    for (std::size_t j = 0; j < frame.size(); ++j) out(i, j) = phi(nf * frame[j]);
  }
  return out;
}

LinearFunctional ambient_functional(std::size_t n_vars, int degree, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  auto values = std::make_shared<std::map<Monomial, Rational, GrlexGreater>>();
  for (const Monomial& m : mono_basis(n_vars, degree)) (*values)[m] = dist(rng);
  return [values](const Polynomial& p) {
    Rational acc = 0;
    for (const auto& [m, c] : p.terms()) {
      const auto it = values->find(m);
      if (it != values->end()) acc += c * it->second;
    }
    return acc;
  };
}

namespace {

int symmetric_degree(const HypersurfacePair& pair) {
  if (pair.z().degree() != 3) throw PreconditionError("symmetry certificate is specific to cubic pairs");
  const int rest = pair.z().socle_degree() - 3;
  if (rest < 0 || rest % 2 != 0) throw PreconditionError("symmetry certificate needs odd-dimensional Z");
  return rest / 2;
}

void require_y_fixing(const Polynomial& u) {
  const std::size_t last = u.n_vars() - 1;
  for (const auto& [m, c] : u.terms())
    if (m[last] == 0) throw PreconditionError("not a Y-fixing direction: " + u.to_string());
}

}  // namespace

Certificate symmetry_certificate(const HypersurfacePair& pair, const std::vector<Polynomial>& directions,
                                 const std::optional<LinearFunctional>& functional) {
  const int a = symmetric_degree(pair);
  const JacobianRing& ring = pair.z_ring();
  ring.require_smooth("symmetry_certificate");
  for (const Polynomial& u : directions) {
    if (u.n_vars() != pair.z().n_vars()) throw PreconditionError("direction lives in a different number of variables");
    if (!u.is_zero() && u.homogeneous_degree() != 3) throw PreconditionError("direction must be a cubic form");
    require_y_fixing(u);
  }
  std::vector<Polynomial> frame;
  for (const Monomial& m : ring.piece(a).quotient_basis()) frame.emplace_back(m);
  const LinearFunctional phi =
      functional ? *functional : LinearFunctional([&ring](const Polynomial& p) { return ring.socle_value(p); });

  Certificate c;
  c.name = "symmetry_certificate";
  c.passed = true;
  nlohmann::json per = nlohmann::json::array();
  std::size_t failures = 0;
  for (const Polynomial& u : directions) {
    const ExactMatrix form = symmetry_form(ring, u, frame, phi);
    const bool sym = form.is_symmetric();
    if (!sym) ++failures;
    per.push_back({{"direction", u.to_string()}, {"symmetric", sym}, {"form", to_json(form)}});
  }
  c.passed = failures == 0;
  c.witness = {{"degree", a}, {"frame_size", frame.size()}, {"directions", per}, {"failures", failures},
               {"functional", functional ? "supplied" : "socle"}};
  c.summary = std::to_string(directions.size() - failures) + " of " + std::to_string(directions.size()) +
              " forms symmetric";
  return c;
}

std::vector<Polynomial> coordinate_directions(const HypersurfacePair& pair) {
  const std::size_t nv = pair.z().n_vars();
  const Polynomial xn = Polynomial::variable(nv, nv - 1);
  std::vector<Polynomial> out;
  for (const Monomial& m : pair.z_ring().piece(pair.z().degree() - 1).quotient_basis())
    out.push_back(xn * Polynomial(m));
  return out;
}

namespace {

/// Derivative tower (d/dt)^j of a frame class at F + t0*G, j = 0..order,
/// in that fibre's own frame. Empty if the fibre is singular.
std::vector<RationalVector> derivative_tower(const Family& fam, const ResidueClass& e, const Rational& t0, int order) {
  const Polynomial& g = fam.directions().front();
  const Polynomial ft = fam.base().form() + t0 * g;
  JacobianRing ring{Hypersurface(ft)};
  if (!ring.is_smooth()) return {};
  const ResidueFrame frame = residue_frame(ring);
  std::vector<RationalVector> tower;
  Polynomial num = e.numerator;
  for (int j = 0; j <= order; ++j) {
    const int k = e.pole_order + j;
    tower.push_back(frame_coordinates(ring, frame, {num, k}));
    num = num * g * Rational(-k);
  }
  return tower;
}

/// Coefficients c with v_r = sum_{i<r} c_i v_i, or nullopt if v_r is independent.
std::optional<RationalVector> relation(const std::vector<RationalVector>& tower, int r) {
  if (tower.empty()) return std::nullopt;
  ExactMatrix m(tower[0].size(), r);
  for (int i = 0; i < r; ++i)
    for (std::size_t row = 0; row < tower[0].size(); ++row) m(row, i) = tower[i][row];
  return solve(m, tower[r]);
}

}  // namespace

PicardFuchs picard_fuchs(const Family& fam, std::size_t class_index, int max_order, int max_coeff_degree) {
  if (fam.directions().size() != 1) throw PreconditionError("picard_fuchs needs a one-direction family");
  const ResidueClass& e = fam.frame().classes.at(class_index);
  PicardFuchs pf;
  pf.method = "exact reduction at sampled rational t, polynomial coefficients by linear solve";

  struct Sample {
    Rational t;
    std::vector<RationalVector> tower;
  };
  std::vector<Sample> samples;
  long next_t = 0;
  auto take_sample = [&](int order) {
    for (;;) {
      const Rational t = next_t++;
      auto tower = derivative_tower(fam, e, t, order);
      if (!tower.empty()) {
        samples.push_back({t, std::move(tower)});
        return;
      }
    }
  };

  // Order: the first r where v_r depends on v_0..v_{r-1} at two distinct fibres.
  take_sample(max_order);
  take_sample(max_order);
  int order = -1;
  for (int r = 1; r <= max_order && order < 0; ++r) {
    bool dependent = true;
    for (const Sample& s : samples) dependent = dependent && relation(s.tower, r).has_value();
    if (dependent) order = r;
  }
  if (order < 0) return pf;

  auto sample_coeffs = [&](const Sample& s) {
    const auto c = relation(s.tower, order);
    if (!c) throw PreconditionError("derivative tower degenerates at a sampled fibre");
    return *c;
  };

  for (int deg = 0; deg <= max_coeff_degree; ++deg) {
    const std::size_t unknowns = static_cast<std::size_t>(order + 1) * (deg + 1);
    const std::size_t needed = (unknowns + order - 1) / order + 3;
    while (samples.size() < needed) take_sample(order);
    // Unknown layout: P_i has coefficients x[i*(deg+1) + e] of t^e.
    std::vector<RationalVector> rows;
    for (const Sample& s : samples) {
      const RationalVector c = sample_coeffs(s);
      for (int i = 0; i < order; ++i) {
        RationalVector row(unknowns);
        Rational power = 1;
        for (int p = 0; p <= deg; ++p) {
          row[i * (deg + 1) + p] = power;
          row[order * (deg + 1) + p] = -c[i] * power;
          power *= s.t;
        }
        rows.push_back(std::move(row));
      }
    }
    const std::vector<RationalVector> ker = kernel_basis(ExactMatrix::from_rows(rows));
    if (ker.empty()) continue;
    std::vector<UPoly> coeffs;
    for (int i = 0; i <= order; ++i) {
      std::vector<Rational> cs(ker[0].begin() + i * (deg + 1), ker[0].begin() + (i + 1) * (deg + 1));
      coeffs.emplace_back(std::move(cs));
    }
    const Rational scale = 1 / coeffs.back().leading();
    for (UPoly& p : coeffs) p = scale * p;
    // Operator convention: sum_i P_i v_i = 0 with v_i the i-th derivative.
    std::vector<UPoly> op(order + 1);
    for (int i = 0; i < order; ++i) op[i] = Rational(-1) * coeffs[i];
    op[order] = coeffs[order];
    // Verify on two fresh fibres.
    bool ok = true;
    for (int extra = 0; extra < 2 && ok; ++extra) {
      take_sample(order);
      const Sample& s = samples.back();
      RationalVector acc(s.tower[0].size());
      for (int i = 0; i <= order; ++i) {
        const Rational w = op[i](s.t);
        for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += w * s.tower[i][r];
      }
      for (const Rational& x : acc) ok = ok && x == 0;
    }
    if (!ok) continue;
    pf.found = true;
    pf.order = order;
    pf.coefficients = std::move(op);
    break;
  }
  for (const Sample& s : samples) pf.samples.push_back(s.t);
  return pf;
}

nlohmann::json to_json(const PicardFuchs& pf) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const UPoly& p : pf.coefficients) coeffs.push_back(p.to_string());
  nlohmann::json samples = nlohmann::json::array();
  for (const Rational& t : pf.samples) samples.push_back(to_string(t));
  return {{"found", pf.found}, {"order", pf.order}, {"coefficients", coeffs}, {"samples", samples},
          {"method", pf.method}};
}

}  // namespace hodge
