#include "wsdual/magic.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace wsdual {

namespace {

// Weight system (v_1..v_n; 1 + sum v) scaled to the smallest integer representative.
WeightSystem from_ratios(const std::vector<Rational>& ratios) {
  Int lcm = 1;
  for (const auto& r : ratios) lcm = std::lcm(lcm, r.denominator());
  Rational total(1);
  for (const auto& r : ratios) total += r;
  // Ratios are a_i / a_0; a negative a_0 flips every sign.
  Int sign = total < Rational(0) ? -1 : 1;
  std::vector<Int> weights;
  weights.reserve(ratios.size());
  for (const auto& r : ratios) {
    Rational scaled = r * Rational(checked_mul(lcm, sign));
    weights.push_back(scaled.numerator());
  }
  Rational degree = total * Rational(checked_mul(lcm, sign));
  if (std::any_of(weights.begin(), weights.end(), [](Int w) { return w < 0; }) ||
      degree.denominator() != 1 || degree.numerator() <= 0) {
    throw DataError("recovered weights are not a positive weight system");
  }
  // Divide by the common factor of weights and degree; this is gcd(weights)
  // whenever that gcd divides the degree.
  const Int g = std::gcd(gcd_of(weights), degree.numerator());
  for (Int& w : weights) w /= g;
  const bool has_zero = std::find(weights.begin(), weights.end(), 0) != weights.end();
  return WeightSystem(std::move(weights), degree.numerator() / g, has_zero);
}

bool same_up_to_scale(const WeightSystem& lhs, const WeightSystem& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (checked_mul(lhs.weight(i), rhs.degree()) != checked_mul(rhs.weight(i), lhs.degree())) {
      return false;
    }
  }
  return true;
}

}  // namespace

MagicSquare validate(IntMatrix entries, WeightSystem wa, WeightSystem wb) {
  const std::size_t n = entries.size();
  if (wa.size() != n || wb.size() != n) {
    throw ValidationError("dimension mismatch: matrix is " + std::to_string(n) + "x" +
                          std::to_string(n) + ", weight systems have " +
                          std::to_string(wa.size()) + " and " + std::to_string(wb.size()) +
                          " weights");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (entries(i, j) < 0) {
        throw ValidationError("negative entry " + std::to_string(entries(i, j)) + " at row " +
                              std::to_string(i + 1) + ", column " + std::to_string(j + 1));
      }
  for (std::size_t i = 0; i < n; ++i) {
    Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum = checked_add(sum, checked_mul(entries(i, j), wa.weight(j)));
    if (sum != wa.degree()) {
      throw ValidationError("row " + std::to_string(i + 1) + " weighted sum " + std::to_string(sum) +
                            " != " + std::to_string(wa.degree()));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum = checked_add(sum, checked_mul(wb.weight(i), entries(i, j)));
    if (sum != wb.degree()) {
      throw ValidationError("column " + std::to_string(j + 1) + " weighted sum " +
                            std::to_string(sum) + " != " + std::to_string(wb.degree()));
    }
  }
  return MagicSquare(std::move(entries), std::move(wa), std::move(wb));
}

std::string to_string(Coupling c) {
  switch (c) {
    case Coupling::primitive:
      return "primitive";
    case Coupling::almost_primitive:
      return "almost_primitive";
    case Coupling::plain:
      return "plain";
  }
  return "plain";
}

CouplingReport classify(const MagicSquare& ms) {
  const auto& c = ms.entries();
  const std::size_t n = c.size();
  const Int h = ms.row_weights().degree();
  const Int k = ms.column_weights().degree();
  const Int a0 = ms.row_weights().virtual_weight();
  const Int b0 = ms.column_weights().virtual_weight();

  CouplingReport r;
  r.determinant = determinant(c);
  const Int abs_det = std::abs(r.determinant);
  r.primitive = abs_det == h && h == k;
  r.almost_primitive = abs_det == checked_mul(h, b0) && abs_det == checked_mul(k, a0);
  r.classification = r.primitive          ? Coupling::primitive
                     : r.almost_primitive ? Coupling::almost_primitive
                                          : Coupling::plain;
  r.row_has_zero.assign(n, false);
  r.column_has_zero.assign(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c(i, j) == 0) {
        r.row_has_zero[i] = true;
        r.column_has_zero[j] = true;
      }
  r.strong = std::all_of(r.row_has_zero.begin(), r.row_has_zero.end(), [](bool b) { return b; }) &&
             std::all_of(r.column_has_zero.begin(), r.column_has_zero.end(), [](bool b) { return b; });
  return r;
}

IntMatrix shifted_matrix(const IntMatrix& c) {
  IntMatrix b(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) b(i, j) = c(i, j) - 1;
  return b;
}

InverseData inverse_data(const MagicSquare& ms) {
  IntMatrix b = shifted_matrix(ms.entries());
  const Int det_b = determinant(b);
  if (det_b == 0) throw DataError("B = (c_ij - 1) is singular (det B = 0)");
  RationalMatrix a = inverse(b);
  const std::size_t n = a.size();

  std::vector<Rational> row_sums(n, Rational(0));
  std::vector<Rational> column_sums(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      row_sums[i] += a(i, j);
      column_sums[j] += a(i, j);
    }

  WeightSystem wa = from_ratios(row_sums);
  WeightSystem wb = from_ratios(column_sums);
  if (!same_up_to_scale(wa, ms.row_weights())) {
    throw DataError("recovered row weights " + wa.to_string() + " do not match " +
                    ms.row_weights().to_string());
  }
  if (!same_up_to_scale(wb, ms.column_weights())) {
    throw DataError("recovered column weights " + wb.to_string() + " do not match " +
                    ms.column_weights().to_string());
  }
  return InverseData{std::move(b), det_b, std::move(a), std::move(row_sums), std::move(column_sums),
                     std::move(wa), std::move(wb)};
}

MagicSquare transpose(const MagicSquare& ms) {
  return validate(ms.entries().transposed(), ms.column_weights(), ms.row_weights());
}

}  // namespace wsdual
