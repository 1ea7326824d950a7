#pragma once

// Exact integer/rational helpers and a small dense rational matrix with
// Gauss-Jordan row reduction.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dfsrg::exact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Non-negative integer square root if `value` is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& value);

bool is_integer(const Rational& value);

/// floor/ceil of a rational, exactly.
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowReduction {
  RationalMatrix reduced;                   // reduced row echelon form
  RationalMatrix transform;                 // transform * input == reduced
  std::vector<std::size_t> pivot_columns;   // one per nonzero row, ascending
};

/// Gauss-Jordan elimination to reduced row echelon form. The first nonzero
/// entry in each column (top-down) is used as pivot, so pivots land on the
/// leftmost possible columns and free columns are the rightmost ones.
RowReduction row_reduce(const RationalMatrix& m);

/// Exact inverse, or nullopt when the matrix is singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace dfsrg::exact
