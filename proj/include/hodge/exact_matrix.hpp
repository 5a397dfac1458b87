#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  ExactMatrix transpose() const;
  RationalVector apply(const RationalVector& v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& s, const ExactMatrix& a);
  bool operator==(const ExactMatrix& other) const = default;

  bool is_zero() const;
  bool is_symmetric() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  ExactMatrix reduced;  // rank x cols
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Exact rank by fraction-free (Bareiss) elimination.
std::size_t rank(const ExactMatrix& m);

RowEchelon reduced_row_echelon(const ExactMatrix& m);

/// Basis of the right kernel {v : m v = 0}; one vector per free column,
/// carrying a 1 in that column.
std::vector<RationalVector> kernel_basis(const ExactMatrix& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<RationalVector> solve(const ExactMatrix& m, const RationalVector& b);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);

/// Rank over F_p for a prime p < 2^62 (entries reduced mod p; throws if a
/// denominator vanishes mod p). A lower bound for the rational rank.
std::size_t rank_mod_p(const ExactMatrix& m, std::uint64_t p);

namespace detail {

using IntegerRow = std::vector<Integer>;

/// Clears denominators and removes the content of a rational row.
IntegerRow primitive_integer_row(const RationalVector& row);

struct IntegerEchelon {
  std::vector<IntegerRow> rows;  // rank rows in echelon form
  std::vector<std::size_t> pivots;
};

/// Fraction-free Gaussian elimination with exact divisions by the previous pivot.
IntegerEchelon bareiss_echelon(std::vector<IntegerRow> rows, std::size_t cols);

/// Back-substitutes an integer echelon form into reduced rational form.
std::vector<RationalVector> reduce_echelon(const IntegerEchelon& e, std::size_t cols);

std::uint64_t mod_p(const Integer& z, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace detail

}  // namespace hodge
