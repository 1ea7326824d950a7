#include "dfsrg/exact.hpp"

#include <stdexcept>
#include <utility>

namespace dfsrg::exact {

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (is_integer(value)) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::optional<Integer> exact_sqrt(const Integer& value) {
  if (value < 0) return std::nullopt;
  Integer root = boost::multiprecision::sqrt(value);
  if (root * root != value) return std::nullopt;
  return root;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Integer floor(const Rational& value) {
  Integer q = numerator(value) / denominator(value);  // truncates toward zero
  if (numerator(value) < 0 && q * denominator(value) != numerator(value)) q -= 1;
  return q;
}

Integer ceil(const Rational& value) { return -floor(-value); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const Rational& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(l, j) != 0) out(i, j) += x * b(l, j);
      }
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowReduction row_reduce(const RationalMatrix& m) {
  RowReduction out{m, RationalMatrix::identity(m.rows()), {}};
  RationalMatrix& a = out.reduced;
  RationalMatrix& t = out.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(row, pivot);
    t.swap_rows(row, pivot);

    const Rational scale = 1 / a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= scale;
    for (std::size_t c = 0; c < t.cols(); ++c) t(row, c) *= scale;

    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (a(row, c) != 0) a(r, c) -= factor * a(row, c);
      }
      for (std::size_t c = 0; c < t.cols(); ++c) {
        if (t(row, c) != 0) t(r, c) -= factor * t(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  RowReduction rr = row_reduce(m);
  if (rr.pivot_columns.size() != m.rows()) return std::nullopt;
  return std::move(rr.transform);
}

}  // namespace dfsrg::exact
