#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hodge/jacobian_ring.hpp"
#include "hodge/polynomial.hpp"
#include "hodge/rational.hpp"

namespace hodge {

/// Cohomology dimensions indexed by degree q; only nonzero entries stored.
using CohomologyDims = std::map<int, std::size_t>;

/// h^q(P^N, Omega^p(k)) by Bott's formula.
CohomologyDims bott_formula(int ambient_dim, int p, long k);

/// Bounded complex on P^N whose terms are sums  wedge^i V (x) O(t), V the
/// rank N+1 trivial bundle with basis dx_0..dx_N. Components of a term are
/// the i-subsets of {0..N}, stored as bitmasks in increasing mask order.
class LineBundleComplex {
 public:
  struct Term {
    int position;
    int twist;
    int form_degree;
  };
  struct Entry {
    std::size_t src_term, tgt_term;
    std::size_t src_comp, tgt_comp;
    Polynomial coeff;
  };

  explicit LineBundleComplex(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  std::size_t n_vars() const { return static_cast<std::size_t>(ambient_dim_ + 1); }
  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<unsigned>& components(int form_degree) const { return subsets_[static_cast<std::size_t>(form_degree)]; }
  std::size_t component_index(unsigned mask) const { return subset_index_[mask]; }

  std::size_t add_term(int position, int twist, int form_degree);
  /// Adds coeff * (src component -> tgt component); positions must differ by one.
  void add_entry(std::size_t src, std::size_t tgt, std::size_t src_comp, std::size_t tgt_comp, const Polynomial& coeff);

  /// Map sending f dx_I to sum over l of (f * forms[l]) dx_l ^ dx_I.
  void add_wedge(std::size_t src, std::size_t tgt, const std::vector<Polynomial>& forms, const Rational& scale);
  /// Contraction with the Euler field sum x_l d/dx_l.
  void add_euler_contraction(std::size_t src, std::size_t tgt, const Rational& scale);
  /// Componentwise multiplication by g.
  void add_scalar(std::size_t src, std::size_t tgt, const Polynomial& g);

  std::pair<int, int> position_range() const;
  /// Alternating sum of Euler characteristics of the terms.
  Integer euler_characteristic() const;

 private:
  int ambient_dim_;
  std::vector<Term> terms_;
  std::vector<Entry> entries_;
  std::vector<std::vector<unsigned>> subsets_;
  std::vector<std::size_t> subset_index_;
};

/// Hypercohomology from the E1 page of the line-bundle spectral sequence.
/// Only rows 0 and N exist, so the one possible later differential is
/// d_{N+1}: E^{a,N} -> E^{a+N+1,0}; `certified` records that the E2 page
/// leaves it no room.
struct Hypercohomology {
  CohomologyDims dims;
  std::map<int, std::size_t> e2_row0, e2_rowN;
  bool certified = false;
  /// Differentials whose rank needed exact elimination over Q (the rest were
  /// pinned by modular lower bounds and the complex condition).
  std::size_t exact_ranks = 0;
};

Hypercohomology hypercohomology(const LineBundleComplex& c);

/// Omega^p_P(k) resolved by the truncated Euler-Koszul complex.
LineBundleComplex projective_forms_complex(int ambient_dim, int p, long k);

/// Complex on P^N quasi-isomorphic to Omega^p_Z(k), cohomology sheaf in position 0.
LineBundleComplex twisted_forms_complex(const Hypersurface& h, int p, long k);

enum class TwistedRoute { Direct, SerreDual };

struct TwistedCell {
  int p = 0;
  long k = 0;
  CohomologyDims h;
  Integer chi;
  TwistedRoute route = TwistedRoute::Direct;
  /// Alternating sum of h equals chi.
  bool consistent() const;
};

/// h^q(Z, Omega^p_Z(k)) computed by the chosen route, or nullopt when the
/// spectral sequence cannot be certified to degenerate along that route.
std::optional<CohomologyDims> twisted_hodge_via(const JacobianRing& ring, int p, long k, TwistedRoute route);

/// Exact h^q(Omega^p_Z(k)); picks the route with the shorter complex.
TwistedCell twisted_hodge(const JacobianRing& ring, int p, long k);

/// chi(Omega^p_Z(k)) from binomial arithmetic over the same complex.
Integer euler_characteristic(const Hypersurface& h, int p, long k);

struct TwistedTable {
  std::map<std::tuple<int, int, long>, std::size_t> entries;  // (p, q, k) -> dim, nonzero only
  std::map<std::pair<int, long>, Integer> euler_checks;      // (p, k) -> chi
  std::vector<TwistedCell> cells;

  std::size_t at(int p, int q, long k) const;
};

/// Table over p in [p_min, p_max] and k in [k_min, k_max].
TwistedTable twisted_table(const JacobianRing& ring, int p_min, int p_max, long k_min, long k_max);

nlohmann::json to_json(const TwistedCell& cell);
nlohmann::json to_json(const TwistedTable& table);

}  // namespace hodge
