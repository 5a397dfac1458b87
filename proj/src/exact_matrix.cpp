#include "hodge/exact_matrix.hpp"

#include <algorithm>
#include <utility>

#include "hodge/errors.hpp"

namespace hodge {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  ExactMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw PreconditionError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector ExactMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector ExactMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector ExactMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw PreconditionError("apply: dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (v[c] != 0 && (*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product: dimension mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum: dimension mismatch");
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + Rational(-1) * b; }

ExactMatrix operator*(const Rational& s, const ExactMatrix& a) {
  ExactMatrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool ExactMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::string ExactMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).get_str();
    }
    out += "]";
  }
  return out + "]";
}

namespace detail {

IntegerRow primitive_integer_row(const RationalVector& row) {
  Integer den = 1;
  for (const auto& x : row)
    if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntegerRow out(row.size());
  Integer content = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    out[i] = row[i].get_num() * (den / row[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content > 1)
    for (auto& x : out)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  return out;
}

IntegerEchelon bareiss_echelon(std::vector<IntegerRow> m, std::size_t cols) {
  IntegerEchelon out;
  const std::size_t n = m.size();
  Integer prev = 1;
  Integer t1, t2;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    // Smallest nonzero entry keeps intermediate minors short.
    std::size_t piv = n;
    std::size_t best = 0;
    for (std::size_t i = r; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const std::size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
      if (piv == n || bits < best) {
        piv = i;
        best = bits;
      }
    }
    if (piv == n) continue;
    std::swap(m[r], m[piv]);
    const Integer& p = m[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      IntegerRow& row = m[i];
      const Integer a = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // row[j] = (p*row[j] - a*m[r][j]) / prev, exact
        mpz_mul(t1.get_mpz_t(), p.get_mpz_t(), row[j].get_mpz_t());
        if (a != 0 && m[r][j] != 0) {
          mpz_mul(t2.get_mpz_t(), a.get_mpz_t(), m[r][j].get_mpz_t());
          mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        }
        mpz_divexact(row[j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = p;
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::vector<RationalVector> reduce_echelon(const IntegerEchelon& e, std::size_t cols) {
  const std::size_t r = e.pivots.size();
  std::vector<RationalVector> rows(r, RationalVector(cols));
  for (std::size_t i = 0; i < r; ++i) {
    const Integer& lead = e.rows[i][e.pivots[i]];
    for (std::size_t j = e.pivots[i]; j < cols; ++j)
      if (e.rows[i][j] != 0) {
        rows[i][j] = Rational(e.rows[i][j], lead);
        rows[i][j].canonicalize();
      }
  }
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (rows[k][pc] == 0) continue;
      const Rational f = rows[k][pc];
      for (std::size_t j = pc; j < cols; ++j)
        if (rows[i][j] != 0) rows[k][j] -= f * rows[i][j];
    }
  }
  return rows;
}

std::uint64_t mod_p(const Integer& z, std::uint64_t p) {
  return static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

}  // namespace detail

namespace {

std::vector<detail::IntegerRow> integer_rows(const ExactMatrix& m) {
  std::vector<detail::IntegerRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(detail::primitive_integer_row(m.row(r)));
  return rows;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) { return detail::bareiss_echelon(integer_rows(m), m.cols()).pivots.size(); }

RowEchelon reduced_row_echelon(const ExactMatrix& m) {
  auto e = detail::bareiss_echelon(integer_rows(m), m.cols());
  RowEchelon out;
  out.pivots = e.pivots;
  auto rows = detail::reduce_echelon(e, m.cols());
  out.reduced = rows.empty() ? ExactMatrix(0, m.cols()) : ExactMatrix::from_rows(rows);
  return out;
}

std::vector<RationalVector> kernel_basis(const ExactMatrix& m) {
  const RowEchelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const ExactMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw PreconditionError("solve: dimension mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon e = reduced_row_echelon(aug);
  RationalVector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = reduced_row_echelon(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x == 0) continue;
      const std::uint64_t den = detail::mod_p(x.get_den(), p);
      if (den == 0) throw PreconditionError("rank_mod_p: denominator vanishes modulo p");
      a[r][c] = detail::mul_mod(detail::mod_p(x.get_num(), p), detail::inv_mod(den, p), p);
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[rank], a[piv]);
    const std::uint64_t inv = detail::inv_mod(a[rank][c], p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = detail::mul_mod(a[i][c], inv, p);
      for (std::size_t j = c; j < m.cols(); ++j)
        a[i][j] = (a[i][j] + p - detail::mul_mod(f, a[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace hodge
