#include "hodge/sparse_elimination.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "hodge/errors.hpp"

namespace hodge {

namespace {

constexpr std::uint64_t kProbePrime = 2147483647ULL;  // 2^31 - 1; products fit in 64 bits

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::size_t local_index(const std::vector<std::size_t>& cols, std::size_t global) {
  auto it = std::lower_bound(cols.begin(), cols.end(), global);
  return static_cast<std::size_t>(it - cols.begin());
}

}  // namespace

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (value == 0) return;
  if (c >= cols_ || r >= rows_.size()) throw PreconditionError("SparseMatrix::add out of range");
  rows_[r].emplace_back(c, value);
}

void SparseMatrix::finalize() {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector merged;
    merged.reserve(row.size());
    for (auto& [c, v] : row) {
      if (!merged.empty() && merged.back().first == c)
        merged.back().second += v;
      else
        merged.emplace_back(c, std::move(v));
      if (merged.back().second == 0) merged.pop_back();
    }
    row = std::move(merged);
  }
}

std::vector<MatrixBlock> connected_blocks(const SparseMatrix& m) {
  UnionFind uf(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    for (std::size_t i = 1; i < row.size(); ++i) uf.unite(row[0].first, row[i].first);
  }
  std::vector<std::size_t> block_of_root(m.cols(), static_cast<std::size_t>(-1));
  std::vector<MatrixBlock> blocks;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const std::size_t root = uf.find(c);
    if (block_of_root[root] == static_cast<std::size_t>(-1)) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].cols.push_back(c);
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.empty()) continue;
    blocks[block_of_root[uf.find(row[0].first)]].rows.push_back(r);
  }
  return blocks;
}

std::size_t work_budget() {
  static const std::size_t budget = [] {
    if (const char* env = std::getenv("HODGE_MAX_MATRIX_DIM")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(6000);
  }();
  return budget;
}

void check_work_budget(std::size_t rows, std::size_t cols) {
  const std::size_t limit = work_budget();
  if (cols > limit || rows > 8 * limit)
    throw BudgetExceeded("refusing dense elimination block of " + std::to_string(rows) + " x " +
                         std::to_string(cols) + " (HODGE_MAX_MATRIX_DIM=" + std::to_string(limit) + ")");
}

BlockEchelon::BlockEchelon(const SparseMatrix& m, const MatrixBlock& block) { compute(m, block); }

void BlockEchelon::compute(const SparseMatrix& m, const MatrixBlock& block) {
  const std::size_t ncols = block.cols.size();
  if (block.rows.empty()) return;
  check_work_budget(block.rows.size(), ncols);

  auto primitive_local = [&](std::size_t r) {
    RationalVector dense(ncols);
    for (const auto& [c, v] : m.row(r)) dense[local_index(block.cols, c)] = v;
    return detail::primitive_integer_row(dense);
  };

  // Modular preselection of independent generators.
  std::vector<std::size_t> selected;
  {
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> basis_pivot;
    std::vector<std::size_t> basis_start;  // first nonzero column of each basis vector
    std::vector<std::uint64_t> v(ncols);
    for (std::size_t r : block.rows) {
      if (basis.size() == ncols) break;
      std::fill(v.begin(), v.end(), 0);
      const auto ints = primitive_local(r);
      for (std::size_t j = 0; j < ncols; ++j)
        if (ints[j] != 0) v[j] = detail::mod_p(ints[j], kProbePrime);
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::uint64_t f = v[basis_pivot[b]];
        if (f == 0) continue;
        const std::uint64_t g = kProbePrime - f;
        const std::uint64_t* row = basis[b].data();
        for (std::size_t j = basis_start[b]; j < ncols; ++j) v[j] = (v[j] + g * row[j]) % kProbePrime;
      }
      std::size_t lead = 0;
      while (lead < ncols && v[lead] == 0) ++lead;
      if (lead == ncols) continue;
      const std::uint64_t inv = detail::inv_mod(v[lead], kProbePrime);
      for (auto& x : v) x = x * inv % kProbePrime;
      basis_start.push_back(lead);
      basis.push_back(v);
      basis_pivot.push_back(lead);
      selected.push_back(r);
    }
  }

  // Exact reduced form of the selected rows; then certify the others.
  for (;;) {
    std::vector<detail::IntegerRow> ints;
    ints.reserve(selected.size());
    for (std::size_t r : selected) ints.push_back(primitive_local(r));
    const auto echelon = detail::bareiss_echelon(std::move(ints), ncols);
    const auto dense = detail::reduce_echelon(echelon, ncols);

    pivots_.clear();
    reduced_.clear();
    pivot_index_.clear();
    for (std::size_t i = 0; i < dense.size(); ++i) {
      pivots_.push_back(block.cols[echelon.pivots[i]]);
      SparseVector sv;
      for (std::size_t j = 0; j < ncols; ++j)
        if (dense[i][j] != 0) sv.emplace_back(block.cols[j], dense[i][j]);
      reduced_.push_back(std::move(sv));
      pivot_index_.emplace_back(pivots_.back(), i);
    }
    std::sort(pivot_index_.begin(), pivot_index_.end());

    std::vector<std::size_t> promoted;
    std::vector<std::size_t> sorted_sel = selected;
    std::sort(sorted_sel.begin(), sorted_sel.end());
    for (std::size_t r : block.rows) {
      if (std::binary_search(sorted_sel.begin(), sorted_sel.end(), r)) continue;
      if (!reduce(m.row(r)).empty()) promoted.push_back(r);
    }
    if (promoted.empty()) break;
    selected.insert(selected.end(), promoted.begin(), promoted.end());
  }

  // Keep only rows that carry the rank (independent generators).
  if (selected.size() > pivots_.size()) {
    std::vector<detail::IntegerRow> chosen;
    std::vector<std::size_t> keep;
    for (std::size_t r : selected) {
      auto trial = chosen;
      trial.push_back(primitive_local(r));
      if (detail::bareiss_echelon(trial, ncols).pivots.size() == trial.size()) {
        chosen = std::move(trial);
        keep.push_back(r);
      }
    }
    selected = std::move(keep);
  }
  basis_rows_ = std::move(selected);
}

SparseVector BlockEchelon::reduce(const SparseVector& v) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [c, x] : v) acc[c] += x;
  for (const auto& [c, x] : v) {
    auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), std::make_pair(c, std::size_t{0}));
    if (it == pivot_index_.end() || it->first != c) continue;
    const Rational f = x;
    for (const auto& [cc, y] : reduced_[it->second]) acc[cc] -= f * y;
  }
  SparseVector out;
  for (auto& [c, x] : acc)
    if (x != 0) out.emplace_back(c, std::move(x));
  return out;
}

RationalVector BlockEchelon::lift(const SparseMatrix& m, const SparseVector& v) const {
  const std::size_t r = pivots_.size();
  if (!lift_inverse_) {
    ExactMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (const auto& [c, x] : m.row(basis_rows_[i])) {
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
        if (it != pivots_.end() && *it == c) a(i, static_cast<std::size_t>(it - pivots_.begin())) = x;
      }
    auto inv = inverse(a);
    if (!inv) throw PreconditionError("BlockEchelon::lift: pivot submatrix singular");
    lift_inverse_ = std::make_shared<const ExactMatrix>(std::move(*inv));
  }
  RationalVector at_pivots(r);
  for (const auto& [c, x] : v) {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
    if (it != pivots_.end() && *it == c) at_pivots[static_cast<std::size_t>(it - pivots_.begin())] = x;
  }
  RationalVector y(r);
  for (std::size_t k = 0; k < r; ++k) {
    if (at_pivots[k] == 0) continue;
    for (std::size_t i = 0; i < r; ++i)
      if ((*lift_inverse_)(k, i) != 0) y[i] += at_pivots[k] * (*lift_inverse_)(k, i);
  }
  return y;
}

std::size_t sparse_rank(const SparseMatrix& m) {
  std::size_t total = 0;
  for (const auto& block : connected_blocks(m)) {
    if (block.rows.empty()) continue;
    if (block.rows.size() == 1) {
      total += 1;
      continue;
    }
    total += BlockEchelon(m, block).rank();
  }
  return total;
}

std::optional<std::size_t> sparse_rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32)) throw PreconditionError("sparse_rank_mod_p: prime must fit in 32 bits");
  std::size_t total = 0;
  for (const auto& block : connected_blocks(m)) {
    if (block.rows.empty()) continue;
    const std::size_t ncols = block.cols.size();
    check_work_budget(block.rows.size(), ncols);
    std::vector<std::vector<std::uint64_t>> a;
    a.reserve(block.rows.size());
    for (std::size_t r : block.rows) {
      std::vector<std::uint64_t> row(ncols, 0);
      for (const auto& [c, v] : m.row(r)) {
        const std::uint64_t den = detail::mod_p(Integer(v.get_den()), p);
        if (den == 0) return std::nullopt;
        row[local_index(block.cols, c)] = detail::mod_p(Integer(v.get_num()), p) * detail::inv_mod(den, p) % p;
      }
      a.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
      std::size_t piv = rank;
      while (piv < a.size() && a[piv][col] == 0) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[piv], a[rank]);
      const std::uint64_t inv = detail::inv_mod(a[rank][col], p);
      for (std::size_t j = col; j < ncols; ++j) a[rank][j] = a[rank][j] * inv % p;
      const std::uint64_t* pr = a[rank].data();
      for (std::size_t i = rank + 1; i < a.size(); ++i) {
        const std::uint64_t f = a[i][col];
        if (f == 0) continue;
        const std::uint64_t g = p - f;
        std::uint64_t* row = a[i].data();
        for (std::size_t j = col; j < ncols; ++j) row[j] = (row[j] + g * pr[j]) % p;
      }
      ++rank;
    }
    total += rank;
  }
  return total;
}

}  // namespace hodge
