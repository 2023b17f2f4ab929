#include "wsdual/matrix.hpp"

#include <utility>

namespace wsdual {

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  if (n == 2) return checked_add(checked_mul(m(0, 0), m(1, 1)), -checked_mul(m(0, 1), m(1, 0)));

  std::vector<std::size_t> rows(n - 1);
  for (std::size_t i = 1; i < n; ++i) rows[i - 1] = i;
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> cols;
    cols.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    Int term = checked_mul(m(0, j), determinant(submatrix(m, rows, cols)));
    det = checked_add(det, (j % 2 == 0) ? term : -term);
  }
  return det;
}

IntMatrix submatrix(const IntMatrix& m, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw InputError("submatrix must be square");
  IntMatrix s(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RationalMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.size();
  const Int det = determinant(m);
  if (det == 0) throw DataError("matrix is singular (determinant 0)");
  RationalMatrix inv(n);
  if (n == 1) {
    inv(0, 0) = Rational(1, det);
    return inv;
  }
  // inv(j, i) = (-1)^(i+j) * minor(i, j) / det
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) rows.push_back(k);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> cols;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) cols.push_back(k);
      Int cofactor = determinant(submatrix(m, rows, cols));
      if ((i + j) % 2 == 1) cofactor = -cofactor;
      inv(j, i) = Rational(cofactor, det);
    }
  }
  return inv;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.size() != rhs.size()) throw InputError("matrix size mismatch in product");
  const std::size_t n = lhs.size();
  RationalMatrix out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
  return out;
}

RationalMatrix operator+(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.size() != rhs.size()) throw InputError("matrix size mismatch in sum");
  RationalMatrix out = lhs;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs.size(); ++j) out(i, j) += rhs(i, j);
  return out;
}

std::vector<Rational> solve(RationalMatrix m, std::vector<Rational> rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw InputError("right-hand side has the wrong length");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == Rational(0)) ++pivot;
    if (pivot == n) throw DataError("linear system is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
      std::swap(rhs[col], rhs[pivot]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == Rational(0)) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m(i, i);
  return rhs;
}

}  // namespace wsdual
