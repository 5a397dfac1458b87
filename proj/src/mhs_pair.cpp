#include "hodge/mhs_pair.hpp"

#include <algorithm>
#include <sstream>

#include "hodge/errors.hpp"
#include "hodge/hodge_residue.hpp"
#include "hodge/twisted_cohomology.hpp"

namespace hodge {

HypersurfacePair::HypersurfacePair(const Polynomial& form) {
  Hypersurface z(form);
  if (z.ambient_dim() < 3) throw PreconditionError("hypersurface pair needs N >= 3 so that Y has N >= 2");
  Hypersurface y = z.hyperplane_section();
  z_ring_ = std::make_shared<JacobianRing>(std::move(z));
  y_ring_ = std::make_shared<JacobianRing>(std::move(y));
  z_ring_->require_smooth("HypersurfacePair (Z)");
  y_ring_->require_smooth("HypersurfacePair (Y)");
}

HypersurfacePair HypersurfacePair::fermat_cubic_7() { return HypersurfacePair(Hypersurface::fermat(7, 3).form()); }

HypersurfacePair HypersurfacePair::named(const std::string& name) {
  if (name == "fermat-cubic-7") return fermat_cubic_7();
  throw PreconditionError("unknown pair '" + name + "' (known: fermat-cubic-7)");
}

std::size_t MhsReport::f_dim(int p) const {
  if (p < 0) p = 0;
  if (p >= static_cast<int>(hodge_filtration_dims.size())) return 0;
  return hodge_filtration_dims[static_cast<std::size_t>(p)];
}

std::size_t MhsReport::weight_sum_upper() const {
  std::size_t s = 0;
  for (const auto& [pq, v] : gr_upper_hodge) s += v;
  return s;
}

namespace {

std::size_t sum_of(const HodgeTypes& t) {
  std::size_t s = 0;
  for (const auto& [pq, v] : t) s += v;
  return s;
}

std::size_t type_at(const HodgeTypes& t, int p, int q) {
  const auto it = t.find({p, q});
  return it == t.end() ? 0 : it->second;
}

std::string type_name(int weight, int p, int q) {
  return "h_" + std::to_string(weight) + "^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

// F^p dims from Hodge types: sum of h^{a,b} with a >= p over both weights.
std::vector<std::size_t> filtration_from(const std::vector<const HodgeTypes*>& parts, int n) {
  std::vector<std::size_t> f(static_cast<std::size_t>(n + 2), 0);
  for (int p = 0; p <= n + 1; ++p)
    for (const auto* t : parts)
      for (const auto& [pq, v] : *t)
        if (pq.first >= p) f[static_cast<std::size_t>(p)] += v;
  return f;
}

}  // namespace

MhsReport gysin_assemble(const HypersurfacePair& pair) {
  MhsReport r;
  const HodgeDiamond dz = primitive_hodge_numbers(pair.z_ring());
  const HodgeDiamond dy = primitive_hodge_numbers(pair.y_ring());
  r.n = dz.dimension;
  r.even_dimension = r.n % 2 == 0;
  r.betti_z = middle_betti(pair.z_ring());
  r.betti_y = middle_betti(pair.y_ring());
  // Odd n: H^{n-2}(Y) vanishes and i_* maps onto the line H^{n+1}(Z).
  // Even n: the Gysin image of H^{n-2}(Y)(-1) is the hyperplane class and H^{n+1}(Z) = 0.
  r.i_star_rank = r.even_dimension ? 0 : 1;
  r.lower_gysin_rank = r.even_dimension ? 1 : 0;

  const int n = r.n;
  const auto& lower = r.even_dimension ? dz.middle_primitive : dz.middle_full;
  for (int q = 0; q <= n; ++q)
    if (auto v = lower[static_cast<std::size_t>(q)]) r.hodge_lower[{n - q, q}] = v;
  // ker i_* is the primitive part of H^{n-1}(Y); the Tate twist shifts (a, b) to (a+1, b+1).
  for (int q = 0; q <= n - 1; ++q)
    if (auto v = dy.middle_primitive[static_cast<std::size_t>(q)]) r.gr_upper_hodge[{n - q, q + 1}] = v;

  r.dim_W_lower = sum_of(r.hodge_lower);
  r.dim_total = r.dim_W_lower + sum_of(r.gr_upper_hodge);
  r.hodge_filtration_dims = filtration_from({&r.hodge_lower, &r.gr_upper_hodge}, n);
  r.audit = audit(r);
  return r;
}

std::vector<AuditFinding> audit(const MhsReport& r, const std::optional<ClaimTable>& claims) {
  std::vector<AuditFinding> out;
  const int n = r.n;
  if (sum_of(r.hodge_lower) != r.dim_W_lower)
    out.push_back({"additivity", "Gr^W_n Hodge numbers sum to " + std::to_string(sum_of(r.hodge_lower)) +
                                     " but dim W_n = " + std::to_string(r.dim_W_lower)});
  if (r.dim_W_lower + r.weight_sum_upper() != r.dim_total)
    out.push_back({"additivity", "dim W_n + dim Gr^W_{n+1} = " + std::to_string(r.dim_W_lower + r.weight_sum_upper()) +
                                     " but dim H^n(U) = " + std::to_string(r.dim_total)});
  // Betti route: b_n(Z) + b_{n-1}(Y) - 1, one dimension lost to the Gysin maps.
  const std::size_t graded_total = sum_of(r.hodge_lower) + r.weight_sum_upper();
  if (r.betti_z + r.betti_y != graded_total + r.i_star_rank + r.lower_gysin_rank)
    out.push_back({"betti", "b_n(Z) + b_{n-1}(Y) - rank(Gysin maps) = " +
                                std::to_string(r.betti_z + r.betti_y - r.i_star_rank - r.lower_gysin_rank) +
                                " but the graded Hodge numbers sum to " + std::to_string(graded_total)});
  const auto expected_f = filtration_from({&r.hodge_lower, &r.gr_upper_hodge}, n);
  for (int p = 0; p <= n + 1; ++p)
    if (r.f_dim(p) != expected_f[static_cast<std::size_t>(p)])
      out.push_back({"filtration", "dim F^" + std::to_string(p) + " = " + std::to_string(r.f_dim(p)) +
                                       " but the graded Hodge numbers give " +
                                       std::to_string(expected_f[static_cast<std::size_t>(p)])});
  if (r.f_dim(n + 1) != 0) out.push_back({"filtration", "F^{n+1} is nonzero"});
  for (int p = 1; p <= n + 1; ++p)
    if (r.f_dim(p) > r.f_dim(p - 1)) out.push_back({"filtration", "F^p is not decreasing at p = " + std::to_string(p)});
  for (const auto* part : {&r.hodge_lower, &r.gr_upper_hodge})
    for (const auto& [pq, v] : *part)
      if (type_at(*part, pq.second, pq.first) != v)
        out.push_back({"symmetry", "h^{" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
                                       "} != h^{" + std::to_string(pq.second) + "," + std::to_string(pq.first) + "}"});
  if (!claims) return out;

  // Claimed Hodge numbers: one finding per disagreeing value, listing every
  // claimed aggregate it contradicts.
  const ClaimTable& c = *claims;
  std::map<int, const HodgeTypes*> derived{{n, &r.hodge_lower}, {n + 1, &r.gr_upper_hodge}};
  bool hodge_mismatch = false;
  std::size_t claimed_sum = 0;
  for (const auto& [w, types] : c.hodge)
    for (const auto& [pq, v] : types) claimed_sum += v;
  for (const auto& [w, types] : c.hodge) {
    const auto dit = derived.find(w);
    for (const auto& [pq, v] : types) {
      const std::size_t d = dit == derived.end() ? 0 : type_at(*dit->second, pq.first, pq.second);
      if (d == v) continue;
      hodge_mismatch = true;
      std::ostringstream msg;
      msg << "claimed " << type_name(w, pq.first, pq.second) << " = " << v << ", derived " << d;
      if (c.dim_total && claimed_sum != *c.dim_total)
        msg << "; claimed Hodge numbers sum to " << claimed_sum << ", contradicting the claimed total " << *c.dim_total;
      for (const auto& [p, fv] : c.f_dims) {
        std::size_t claimed_f = 0;
        for (const auto& [w2, t2] : c.hodge)
          for (const auto& [pq2, v2] : t2)
            if (pq2.first >= p) claimed_f += v2;
        if (pq.first >= p && claimed_f != fv)
          msg << "; they give dim F^" << p << " = " << claimed_f << ", contradicting the claimed " << fv;
      }
      const long corrected = static_cast<long>(v) + (c.dim_total ? static_cast<long>(*c.dim_total) - static_cast<long>(claimed_sum) : 0);
      if (c.dim_total && corrected == static_cast<long>(d))
        msg << "; the derived value " << d << " restores consistency";
      out.push_back({"claim", msg.str()});
    }
  }
  if (c.hodge_exhaustive)
    for (const auto& [w, t] : derived)
      for (const auto& [pq, d] : *t) {
        const auto cit = c.hodge.find(w);
        if (cit == c.hodge.end() || !cit->second.count(pq)) {
          hodge_mismatch = true;
          out.push_back({"claim", "claimed " + type_name(w, pq.first, pq.second) + " = 0, derived " + std::to_string(d)});
        }
      }
  if (c.dim_total && *c.dim_total != r.dim_total)
    out.push_back({"claim", "claimed dim H^n(U) = " + std::to_string(*c.dim_total) + ", derived " + std::to_string(r.dim_total)});
  for (const auto& [p, fv] : c.f_dims)
    if (fv != r.f_dim(p))
      out.push_back({"claim", "claimed dim F^" + std::to_string(p) + " = " + std::to_string(fv) + ", derived " +
                                  std::to_string(r.f_dim(p))});
  if (!hodge_mismatch && c.dim_total && !c.hodge.empty() && claimed_sum != *c.dim_total && c.hodge_exhaustive)
    out.push_back({"claim", "claimed Hodge numbers sum to " + std::to_string(claimed_sum) + ", not the claimed total " +
                                std::to_string(*c.dim_total)});
  return out;
}

ClaimTable ClaimTable::from_json(const nlohmann::json& j) {
  ClaimTable c;
  try {
    if (j.contains("dim_total")) c.dim_total = j.at("dim_total").get<std::size_t>();
    if (j.contains("F"))
      for (const auto& [k, v] : j.at("F").items()) c.f_dims[std::stoi(k)] = v.get<std::size_t>();
    if (j.contains("hodge"))
      for (const auto& [w, types] : j.at("hodge").items())
        for (const auto& [pq, v] : types.items()) {
          const auto comma = pq.find(',');
          if (comma == std::string::npos) throw ParseError("Hodge type must be written \"p,q\"");
          c.hodge[std::stoi(w)][{std::stoi(pq.substr(0, comma)), std::stoi(pq.substr(comma + 1))}] = v.get<std::size_t>();
        }
    c.hodge_exhaustive = j.value("hodge_exhaustive", false);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("claim table: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("claim table: malformed integer key");
  }
  return c;
}

ClaimTable ClaimTable::cubic_fivefold_published() {
  ClaimTable c;
  c.dim_total = 64;
  c.f_dims = {{0, 64}, {1, 64}, {2, 64}, {3, 42}, {4, 1}, {5, 0}};
  c.hodge[5] = {{{2, 3}, 21}, {{3, 2}, 21}};
  c.hodge[6] = {{{2, 4}, 1}, {{4, 2}, 1}, {{3, 3}, 21}};
  c.hodge_exhaustive = true;
  return c;
}

Certificate f_top_cross_check(const HypersurfacePair& pair) {
  Certificate cert;
  cert.name = "f_top_cross_check";
  const MhsReport r = gysin_assemble(pair);
  const int n = r.n;
  if (r.even_dimension) {
    cert.summary = "not computed: Z is even-dimensional";
    cert.witness = {{"skipped", true}, {"reason", "even-dimensional Z"}};
    return cert;
  }
  int top = n;
  while (top > 0 && r.f_dim(top) == 0) --top;
  const JacobianRing& zr = pair.z_ring();
  cert.witness = {{"level", top}, {"gysin_value", r.f_dim(top)}};
  auto dim_of = [](const CohomologyDims& h, int q) -> std::size_t {
    const auto it = h.find(q);
    return it == h.end() ? 0 : it->second;
  };
  if (top == n) {
    // Top-degree forms are closed, so F^n = H^0(Omega^n_Z(Y)).
    const std::size_t v = dim_of(twisted_hodge(zr, n, 1).h, 0);
    cert.witness["route"] = "top-forms";
    cert.witness["log_value"] = v;
    cert.passed = v == r.f_dim(top);
  } else if (top == n - 1) {
    const CohomologyDims quotient = twisted_hodge(zr, n, 2).h;
    const std::size_t v = dim_of(twisted_hodge(zr, n - 1, 1).h, 1);
    cert.witness["route"] = "closed-form triple";
    cert.witness["quotient_acyclic"] = quotient.empty();
    cert.witness["log_value"] = v;
    cert.passed = quotient.empty() && v == r.f_dim(top);
    if (!quotient.empty()) {
      cert.summary = "inconclusive: Omega^n_Z(2) has cohomology, the log sequence does not split off";
      return cert;
    }
  } else {
    cert.witness["route"] = "none";
    cert.summary = "chain of triples does not close at level " + std::to_string(top);
    return cert;
  }
  cert.summary = "dim F^" + std::to_string(top) + ": Gysin " + std::to_string(r.f_dim(top)) + ", twisted " +
                 cert.witness["log_value"].dump();
  return cert;
}

nlohmann::json to_json(const MhsReport& r) {
  auto types = [](const HodgeTypes& t, int w) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [pq, v] : t) j.push_back({{"weight", w}, {"p", pq.first}, {"q", pq.second}, {"h", v}});
    return j;
  };
  nlohmann::json audit_j = nlohmann::json::array();
  for (const auto& f : r.audit) audit_j.push_back({{"code", f.code}, {"message", f.message}});
  return {{"n", r.n},
          {"dim_total", r.dim_total},
          {"dim_W_lower", r.dim_W_lower},
          {"hodge_lower", types(r.hodge_lower, r.n)},
          {"gr_upper_hodge", types(r.gr_upper_hodge, r.n + 1)},
          {"hodge_filtration_dims", r.hodge_filtration_dims},
          {"i_star_rank", r.i_star_rank},
          {"lower_gysin_rank", r.lower_gysin_rank},
          {"betti_z", r.betti_z},
          {"betti_y", r.betti_y},
          {"even_dimension", r.even_dimension},
          {"audit", audit_j}};
}

}  // namespace hodge
