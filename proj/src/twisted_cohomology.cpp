#include "hodge/twisted_cohomology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "hodge/errors.hpp"
#include "hodge/monomial.hpp"
#include "hodge/sparse_elimination.hpp"

namespace hodge {

CohomologyDims bott_formula(int n, int p, long k) {
  if (n < 1 || p < 0 || p > n) throw PreconditionError("bott_formula: need 0 <= p <= N");
  CohomologyDims out;
  auto put = [&](int q, const Integer& v) {
    if (v != 0) out[q] = v.get_ui();
  };
  if (k > p) put(0, binomial(k + n - p, k) * binomial(k - 1, p));
  if (k == 0) put(p, Integer(1));
  if (k < p - n) put(n, binomial(-k + p, -k) * binomial(-k - 1, n - p));
  return out;
}

LineBundleComplex::LineBundleComplex(int ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim < 1 || ambient_dim + 1 > static_cast<int>(Monomial::kMaxVars))
    throw PreconditionError("LineBundleComplex: unsupported ambient dimension");
  const unsigned nv = static_cast<unsigned>(ambient_dim + 1);
  subsets_.resize(nv + 1);
  subset_index_.resize(std::size_t{1} << nv);
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    auto& bucket = subsets_[static_cast<std::size_t>(std::popcount(mask))];
    subset_index_[mask] = bucket.size();
    bucket.push_back(mask);
  }
}

std::size_t LineBundleComplex::add_term(int position, int twist, int form_degree) {
  if (form_degree < 0 || form_degree > ambient_dim_ + 1) throw PreconditionError("add_term: bad form degree");
  terms_.push_back({position, twist, form_degree});
  return terms_.size() - 1;
}

void LineBundleComplex::add_entry(std::size_t src, std::size_t tgt, std::size_t src_comp, std::size_t tgt_comp,
                                  const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (terms_[tgt].position != terms_[src].position + 1) throw PreconditionError("add_entry: positions must differ by one");
  const auto deg = coeff.homogeneous_degree();
  if (!deg || *deg != terms_[tgt].twist - terms_[src].twist)
    throw PreconditionError("add_entry: coefficient degree does not match the twists");
  entries_.push_back({src, tgt, src_comp, tgt_comp, coeff});
}

void LineBundleComplex::add_wedge(std::size_t src, std::size_t tgt, const std::vector<Polynomial>& forms,
                                  const Rational& scale) {
  const int i = terms_[src].form_degree;
  for (std::size_t ci = 0; ci < subsets_[static_cast<std::size_t>(i)].size(); ++ci) {
    const unsigned mask = subsets_[static_cast<std::size_t>(i)][ci];
    for (unsigned l = 0; l < n_vars(); ++l) {
      if (mask & (1u << l)) continue;
      const int below = std::popcount(mask & ((1u << l) - 1));
      const Rational sign = (below % 2 ? -scale : scale);
      add_entry(src, tgt, ci, subset_index_[mask | (1u << l)], forms[l] * sign);
    }
  }
}

void LineBundleComplex::add_euler_contraction(std::size_t src, std::size_t tgt, const Rational& scale) {
  const int i = terms_[src].form_degree;
  for (std::size_t ci = 0; ci < subsets_[static_cast<std::size_t>(i)].size(); ++ci) {
    const unsigned mask = subsets_[static_cast<std::size_t>(i)][ci];
    int r = 0;
    for (unsigned l = 0; l < n_vars(); ++l) {
      if (!(mask & (1u << l))) continue;
      const Rational sign = (r % 2 ? -scale : scale);
      add_entry(src, tgt, ci, subset_index_[mask & ~(1u << l)], Polynomial::variable(n_vars(), l) * sign);
      ++r;
    }
  }
}

void LineBundleComplex::add_scalar(std::size_t src, std::size_t tgt, const Polynomial& g) {
  if (terms_[src].form_degree != terms_[tgt].form_degree) throw PreconditionError("add_scalar: form degrees differ");
  for (std::size_t ci = 0; ci < subsets_[static_cast<std::size_t>(terms_[src].form_degree)].size(); ++ci)
    add_entry(src, tgt, ci, ci, g);
}

std::pair<int, int> LineBundleComplex::position_range() const {
  if (terms_.empty()) return {0, -1};
  int lo = terms_[0].position, hi = lo;
  for (const auto& t : terms_) {
    lo = std::min(lo, t.position);
    hi = std::max(hi, t.position);
  }
  return {lo, hi};
}

Integer LineBundleComplex::euler_characteristic() const {
  Integer chi = 0;
  for (const auto& t : terms_) {
    const Integer part = binomial(ambient_dim_ + 1, t.form_degree) * euler_char_line_bundle(ambient_dim_, t.twist);
    chi += (t.position % 2 == 0) ? part : Integer(-part);
  }
  return chi;
}

namespace {

// Sections of O(t) (row 0) or the dual of H^N(O(t)) (row N) per component.
int row_degree(int twist, int ambient_dim, bool top) { return top ? -twist - ambient_dim - 1 : twist; }

std::size_t term_dim(const LineBundleComplex& c, const LineBundleComplex::Term& t, bool top) {
  const int deg = row_degree(t.twist, c.ambient_dim(), top);
  if (deg < 0) return 0;
  return c.components(t.form_degree).size() * mono_count(c.n_vars(), deg);
}

// Matrix of d: E1^{a,row} -> E1^{a+1,row}, one sparse row per source basis
// element. Row N is handled through the transposed map on dual polynomial
// spaces, which has the same rank.
SparseMatrix differential_matrix(const LineBundleComplex& c, int a, bool top) {
  const auto& terms = c.terms();
  const int from_pos = top ? a + 1 : a;
  const int to_pos = top ? a : a + 1;
  std::vector<std::size_t> col_offset(terms.size(), 0);
  std::size_t cols = 0, rows = 0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (terms[t].position == to_pos) {
      col_offset[t] = cols;
      cols += term_dim(c, terms[t], top);
    }
    if (terms[t].position == from_pos) rows += term_dim(c, terms[t], top);
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<const LineBundleComplex::Entry*>> by_row;
  for (const auto& e : c.entries()) {
    if (terms[e.src_term].position != a) continue;
    if (top)
      by_row[{e.tgt_term, e.tgt_comp}].push_back(&e);
    else
      by_row[{e.src_term, e.src_comp}].push_back(&e);
  }

  SparseMatrix m(rows, cols);
  std::size_t row = 0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (terms[t].position != from_pos) continue;
    const int deg = row_degree(terms[t].twist, c.ambient_dim(), top);
    if (deg < 0) continue;
    const auto basis = mono_basis(c.n_vars(), deg);
    for (std::size_t comp = 0; comp < c.components(terms[t].form_degree).size(); ++comp) {
      const auto it = by_row.find({t, comp});
      for (const auto& mono : basis) {
        if (it != by_row.end())
          for (const auto* e : it->second) {
            const std::size_t other = top ? e->src_term : e->tgt_term;
            const std::size_t other_comp = top ? e->src_comp : e->tgt_comp;
            const int other_deg = row_degree(terms[other].twist, c.ambient_dim(), top);
            if (other_deg < 0) continue;
            const std::size_t block = mono_count(c.n_vars(), other_deg);
            for (const auto& [cm, cv] : e->coeff.terms())
              m.add(row, col_offset[other] + other_comp * block + mono_rank(mono * cm), cv);
          }
        ++row;
      }
    }
  }
  m.finalize();
  return m;
}

// Exact ranks of all differentials in one row of the spectral sequence.
// Ranks mod p are lower bounds; since consecutive ranks of a complex satisfy
// r[a-1] + r[a] <= dim C^a, a position where the lower bounds already fill
// dim C^a pins both neighbouring ranks. Whatever stays open is computed
// exactly over Q.
std::map<int, std::size_t> row_ranks(const LineBundleComplex& c, const std::map<int, std::size_t>& e1, int lo, int hi,
                                     bool top, std::size_t& exact_count) {
  auto dim_at = [&](int a) -> std::size_t {
    const auto it = e1.find(a);
    return it == e1.end() ? 0 : it->second;
  };
  std::map<int, std::size_t> rank;
  std::map<int, bool> known;
  std::map<int, std::optional<SparseMatrix>> mats;
  for (int a = lo; a < hi; ++a) {
    if (dim_at(a) == 0 || dim_at(a + 1) == 0) {
      rank[a] = 0;
      known[a] = true;
      continue;
    }
    mats[a] = differential_matrix(c, a, top);
    if (const auto r = sparse_rank_mod_p(*mats[a])) {
      rank[a] = *r;
      known[a] = *r == std::min(dim_at(a), dim_at(a + 1));
    } else {
      rank[a] = sparse_rank(*mats[a]);
      known[a] = true;
      ++exact_count;
    }
  }
  auto r_at = [&](int a) -> std::size_t { return (a < lo || a >= hi) ? 0 : rank[a]; };
  auto k_at = [&](int a) { return a < lo || a >= hi || known[a]; };
  for (;;) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int a = lo; a <= hi; ++a)
        if (r_at(a - 1) + r_at(a) == dim_at(a) && (!k_at(a - 1) || !k_at(a))) {
          if (a - 1 >= lo) known[a - 1] = true;
          if (a < hi) known[a] = true;
          progress = true;
        }
    }
    int open = hi;
    for (int a = lo; a < hi; ++a)
      if (!known[a]) {
        open = a;
        break;
      }
    if (open == hi) break;
    rank[open] = sparse_rank(*mats[open]);
    known[open] = true;
    ++exact_count;
  }
  return rank;
}

}  // namespace

Hypercohomology hypercohomology(const LineBundleComplex& c) {
  Hypercohomology out;
  const auto [lo, hi] = c.position_range();
  const int n = c.ambient_dim();
  std::map<int, std::size_t> e1_0, e1_n;
  for (const auto& t : c.terms()) {
    e1_0[t.position] += term_dim(c, t, false);
    e1_n[t.position] += term_dim(c, t, true);
  }
  auto e2 = [&](std::map<int, std::size_t>& e1, bool top) {
    auto rk = row_ranks(c, e1, lo, hi, top, out.exact_ranks);
    std::map<int, std::size_t> res;
    for (int a = lo; a <= hi; ++a) {
      const std::size_t v = e1[a] - (a < hi ? rk[a] : 0) - (a > lo ? rk[a - 1] : 0);
      if (v) res[a] = v;
    }
    return res;
  };
  out.e2_row0 = e2(e1_0, false);
  out.e2_rowN = e2(e1_n, true);
  out.certified = true;
  for (const auto& [a, v] : out.e2_rowN)
    if (out.e2_row0.count(a + n + 1)) out.certified = false;
  for (const auto& [a, v] : out.e2_row0) out.dims[a] += v;
  for (const auto& [a, v] : out.e2_rowN) out.dims[a + n] += v;
  return out;
}

LineBundleComplex projective_forms_complex(int ambient_dim, int p, long k) {
  if (p < 0 || p > ambient_dim) throw PreconditionError("projective_forms_complex: need 0 <= p <= N");
  LineBundleComplex c(ambient_dim);
  std::size_t prev = c.add_term(0, static_cast<int>(k) - p, p);
  for (int s = 1; s <= p; ++s) {
    const std::size_t next = c.add_term(s, static_cast<int>(k) - p + s, p - s);
    c.add_euler_contraction(prev, next, 1);
    prev = next;
  }
  return c;
}

namespace {

// Terms (i, j, eps) of the twisted-forms complex: wedge^i V at conormal step
// j (0 <= i <= j <= p), eps = 1 for the copy shifted by the Koszul generator.
struct FormTerm {
  int i, j, eps;
};

template <typename Fn>
void for_each_form_term(int p, Fn&& fn) {
  for (int eps = 0; eps <= 1; ++eps)
    for (int j = 0; j <= p; ++j)
      for (int i = 0; i <= j; ++i) fn(FormTerm{i, j, eps});
}

int form_twist(const FormTerm& t, int p, long k, int d) { return static_cast<int>(k) - (p - t.j) * d - t.i - t.eps * d; }
int form_position(const FormTerm& t, int p) { return 2 * t.j - p - t.i - t.eps; }

}  // namespace

// The conormal complex Omega^0_P|Z(-pd) -> ... -> Omega^p_P|Z (maps dF^) with
// each Omega^j_P replaced by its Euler column and each restriction by the
// Koszul pair O(t-d) -F-> O(t). On P^N the anticommutator of dF^ and i_E is
// d*F, which the constant -d map from the eps = 0 layer to the eps = 1 layer
// one conormal step up cancels.
LineBundleComplex twisted_forms_complex(const Hypersurface& h, int p, long k) {
  const int n_proj = h.ambient_dim();
  const int d = h.degree();
  if (p < 0 || p > h.dimension()) throw PreconditionError("twisted_forms_complex: need 0 <= p <= dim Z");
  LineBundleComplex c(n_proj);
  std::map<std::tuple<int, int, int>, std::size_t> idx;
  for_each_form_term(p, [&](const FormTerm& t) {
    idx[{t.i, t.j, t.eps}] = c.add_term(form_position(t, p), form_twist(t, p, k, d), t.i);
  });
  auto at = [&](int i, int j, int eps) -> std::optional<std::size_t> {
    if (i < 0 || i > j || j > p) return std::nullopt;
    return idx.at({i, j, eps});
  };
  const Polynomial constant(h.n_vars(), Rational(-d));
  for_each_form_term(p, [&](const FormTerm& t) {
    const std::size_t src = *at(t.i, t.j, t.eps);
    const Rational sign = t.eps ? -1 : 1;
    if (auto tgt = at(t.i + 1, t.j + 1, t.eps)) c.add_wedge(src, *tgt, h.gradient(), sign);
    if (auto tgt = at(t.i - 1, t.j, t.eps)) c.add_euler_contraction(src, *tgt, sign);
    if (t.eps == 0) {
      if (auto tgt = at(t.i, t.j + 1, 1)) c.add_scalar(src, *tgt, constant);
    } else {
      c.add_scalar(src, *at(t.i, t.j, 0), h.form());
    }
  });
  return c;
}

bool TwistedCell::consistent() const {
  Integer sum = 0;
  for (const auto& [q, v] : h) sum += (q % 2 == 0) ? Integer(v) : Integer(-Integer(v));
  return sum == chi;
}

std::optional<CohomologyDims> twisted_hodge_via(const JacobianRing& ring, int p, long k, TwistedRoute route) {
  ring.require_smooth("twisted_hodge");
  const Hypersurface& h = ring.surface();
  const int n = h.dimension();
  if (p < 0 || p > n) throw PreconditionError("twisted_hodge: need 0 <= p <= dim Z");
  if (route == TwistedRoute::Direct) {
    const Hypercohomology hc = hypercohomology(twisted_forms_complex(h, p, k));
    if (!hc.certified) return std::nullopt;
    return hc.dims;
  }
  // h^q(Omega^p(k)) = h^{n-q}(Omega^{n-p}(-k)), since Omega^n_Z is the dualizing sheaf.
  const Hypercohomology hc = hypercohomology(twisted_forms_complex(h, n - p, -k));
  if (!hc.certified) return std::nullopt;
  CohomologyDims out;
  for (const auto& [q, v] : hc.dims) out[n - q] = v;
  return out;
}

TwistedCell twisted_hodge(const JacobianRing& ring, int p, long k) {
  const int n = ring.surface().dimension();
  TwistedCell cell;
  cell.p = p;
  cell.k = k;
  const TwistedRoute first = (p <= n - p) ? TwistedRoute::Direct : TwistedRoute::SerreDual;
  const TwistedRoute second = first == TwistedRoute::Direct ? TwistedRoute::SerreDual : TwistedRoute::Direct;
  auto dims = twisted_hodge_via(ring, p, k, first);
  cell.route = first;
  if (!dims) {
    dims = twisted_hodge_via(ring, p, k, second);
    cell.route = second;
  }
  if (!dims) throw std::logic_error("twisted_hodge: spectral sequence not certified on either route");
  cell.h = std::move(*dims);
  cell.chi = euler_characteristic(ring.surface(), p, k);
  return cell;
}

Integer euler_characteristic(const Hypersurface& h, int p, long k) {
  if (p < 0 || p > h.dimension()) throw PreconditionError("euler_characteristic: need 0 <= p <= dim Z");
  const int n_proj = h.ambient_dim();
  Integer chi = 0;
  for_each_form_term(p, [&](const FormTerm& t) {
    const Integer part = binomial(n_proj + 1, t.i) * euler_char_line_bundle(n_proj, form_twist(t, p, k, h.degree()));
    chi += (form_position(t, p) % 2 == 0) ? part : Integer(-part);
  });
  return chi;
}

std::size_t TwistedTable::at(int p, int q, long k) const {
  const auto it = entries.find({p, q, k});
  return it == entries.end() ? 0 : it->second;
}

TwistedTable twisted_table(const JacobianRing& ring, int p_min, int p_max, long k_min, long k_max) {
  TwistedTable table;
  for (int p = p_min; p <= p_max; ++p)
    for (long k = k_min; k <= k_max; ++k) {
      TwistedCell cell = twisted_hodge(ring, p, k);
      for (const auto& [q, v] : cell.h) table.entries[{p, q, k}] = v;
      table.euler_checks[{p, k}] = cell.chi;
      table.cells.push_back(std::move(cell));
    }
  return table;
}

nlohmann::json to_json(const TwistedCell& cell) {
  nlohmann::json h = nlohmann::json::object();
  for (const auto& [q, v] : cell.h) h[std::to_string(q)] = v;
  return {{"p", cell.p},
          {"k", cell.k},
          {"h", h},
          {"chi", cell.chi.get_si()},
          {"route", cell.route == TwistedRoute::Direct ? "direct" : "serre-dual"}};
}

nlohmann::json to_json(const TwistedTable& table) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : table.cells) cells.push_back(to_json(c));
  return cells;
}

}  // namespace hodge
