#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wsdual/numeric.hpp"

namespace wsdual {

/// Dense square matrix stored row-major. Sizes here never exceed 4.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}
  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows);

  static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows);
  static SquareMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::vector<T> column(std::size_t j) const;
  std::vector<std::vector<T>> rows() const;

  SquareMatrix transposed() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<Int>;
using RationalMatrix = SquareMatrix<Rational>;

template <class T>
SquareMatrix<T>::SquareMatrix(std::initializer_list<std::initializer_list<T>> rows)
    : n_(rows.size()), data_() {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw InputError("matrix is not square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T>
SquareMatrix<T> SquareMatrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  SquareMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InputError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
SquareMatrix<T> SquareMatrix<T>::identity(std::size_t n) {
  SquareMatrix m(n, T{0});
  for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
  return m;
}

template <class T>
std::vector<T> SquareMatrix<T>::column(std::size_t j) const {
  std::vector<T> c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, j);
  return c;
}

template <class T>
std::vector<std::vector<T>> SquareMatrix<T>::rows() const {
  std::vector<std::vector<T>> out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.emplace_back(row(i).begin(), row(i).end());
  return out;
}

template <class T>
SquareMatrix<T> SquareMatrix<T>::transposed() const {
  SquareMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

/// Exact determinant by cofactor expansion along the first row.
/// The empty (0x0) matrix has determinant 1.
Int determinant(const IntMatrix& m);

/// The submatrix with the given rows and columns (both ascending index lists).
IntMatrix submatrix(const IntMatrix& m, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols);

RationalMatrix to_rational(const IntMatrix& m);

/// Exact inverse via the adjugate. Throws DataError when singular.
RationalMatrix inverse(const IntMatrix& m);

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
RationalMatrix operator+(const RationalMatrix& lhs, const RationalMatrix& rhs);

/// Solves M x = rhs exactly by Gaussian elimination. Throws DataError when M is singular.
std::vector<Rational> solve(RationalMatrix m, std::vector<Rational> rhs);

}  // namespace wsdual
