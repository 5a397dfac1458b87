#include "hodge/deformation.hpp"

#include <algorithm>
#include <map>

#include "hodge/errors.hpp"
#include "hodge/twisted_cohomology.hpp"

namespace hodge {

namespace {

void require_cubic(const HypersurfacePair& pair) {
  if (pair.z().degree() != 3) throw PreconditionError("tangent model specific to cubic pairs");
}

std::size_t last_var(const HypersurfacePair& pair) { return pair.z().n_vars() - 1; }

}  // namespace

Polynomial TangentModel::direction(std::size_t i) const {
  const std::size_t nv = pair->z().n_vars();
  return Polynomial::variable(nv, nv - 1) * Polynomial(basis.at(i));
}

TangentModel tangent_space(const HypersurfacePair& pair) {
  require_cubic(pair);
  TangentModel t;
  t.pair = &pair;
  t.basis = pair.z_ring().piece(2).quotient_basis();
  t.lift = mult_operator(pair.z_ring(), Polynomial::variable(pair.z().n_vars(), last_var(pair)), 2);
  t.lift_rank = rank(t.lift);
  return t;
}

int tangent_twist(const HypersurfacePair& pair) {
  require_cubic(pair);
  return pair.z().ambient_dim() - 3;
}

Certificate obstruction_vanishes(const HypersurfacePair& pair, int queried_degree) {
  const int twist = tangent_twist(pair);
  const int p = pair.z().dimension() - 1;
  const TwistedCell cell = twisted_hodge(pair.z_ring(), p, twist);
  const auto it = cell.h.find(queried_degree);
  const std::size_t value = it == cell.h.end() ? 0 : it->second;
  Certificate c;
  c.name = "obstruction_vanishes";
  nlohmann::json dims = nlohmann::json::object();
  for (const auto& [q, v] : cell.h) dims[std::to_string(q)] = v;
  c.witness = {{"p", p}, {"k", twist}, {"queried_degree", queried_degree}, {"value", value}, {"h", dims},
               {"route", cell.route == TwistedRoute::Direct ? "direct" : "serre-dual"}};
  if (queried_degree != 2) c.witness["misuse"] = "obstructions live in degree 2";
  c.passed = queried_degree == 2 && value == 0;
  c.summary = "h^" + std::to_string(queried_degree) + "(Omega^" + std::to_string(p) + "_Z(" + std::to_string(twist) +
              ")) = " + std::to_string(value);
  return c;
}

bool Subspace::contains(const Polynomial& p) const {
  std::map<Monomial, std::size_t, GrlexGreater> col;
  for (std::size_t i = 0; i < ambient.size(); ++i) col[ambient[i]] = i;
  std::vector<Rational> v(ambient.size());
  for (const auto& [m, c] : p.terms()) {
    const auto it = col.find(m);
    if (it == col.end()) return false;
    v[it->second] = c;
  }
  for (const SparseVector& r : rows) {
    const std::size_t pivot = r.front().first;
    if (v[pivot] == 0) continue;
    const Rational f = v[pivot];
    for (const auto& [j, x] : r) v[j] -= f * x;
  }
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Subspace kappa_image(const HypersurfacePair& pair, int degree) {
  const Hypersurface& h = pair.z();
  const int d = h.degree();
  Subspace s;
  s.degree = degree;
  s.ambient = mono_basis(h.n_vars(), degree);
  if (degree < d - 1) return s;
  std::map<Monomial, std::size_t, GrlexGreater> col;
  for (std::size_t i = 0; i < s.ambient.size(); ++i) col[s.ambient[i]] = i;

  std::vector<Polynomial> gens;
  for (const Monomial& m : mono_basis(h.n_vars(), degree - d + 1))
    for (const Polynomial& g : h.gradient()) gens.push_back(Polynomial(m) * g);
  if (degree >= d)
    for (const Monomial& m : mono_basis(h.n_vars(), degree - d)) gens.push_back(Polynomial(m) * h.form());

  SparseMatrix mat(gens.size(), s.ambient.size());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (const auto& [m, c] : gens[r].terms()) mat.add(r, col.at(m), c);
  mat.finalize();
  for (const MatrixBlock& b : connected_blocks(mat)) {
    if (b.rows.empty()) continue;
    const BlockEchelon e(mat, b);
    for (const SparseVector& r : e.reduced_rows()) s.rows.push_back(r);
  }
  std::sort(s.rows.begin(), s.rows.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.front().first < b.front().first; });
  return s;
}

Certificate jb_certificate(const HypersurfacePair& pair) {
  require_cubic(pair);
  const JacobianRing& ring = pair.z_ring();
  ring.require_smooth("jb_certificate");
  const int sigma = ring.surface().socle_degree();
  const GradedQuotient& r0 = ring.piece(0);
  const ExactMatrix product = mult_operator(ring, Polynomial(r0.quotient_basis().at(0)), 2);
  const SoclePairing pairing = socle_pairing(ring, 2);
  const std::size_t product_rank = rank(product);
  const std::size_t pairing_rank = rank(pairing.matrix);
  const std::size_t n2 = ring.dim(2);

  Certificate c;
  c.name = "jb_certificate";
  c.witness = {{"dim_R2", n2},
               {"dim_R_dual", ring.dim(sigma - 2)},
               {"product_rank", product_rank},
               {"pairing_rank", pairing_rank},
               {"product_is_identity", product == ExactMatrix::identity(n2)},
               {"product_matrix", to_json(product)},
               {"pairing_matrix", to_json(pairing.matrix)}};
  c.passed = product_rank == n2 && pairing_rank == n2 && ring.dim(sigma - 2) == n2;
  c.summary = "ranks (" + std::to_string(product_rank) + ", " + std::to_string(pairing_rank) + ") of " +
              std::to_string(n2);
  return c;
}

}  // namespace hodge
