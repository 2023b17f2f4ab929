#include "wsdual/zeta.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

namespace wsdual {

namespace {

std::vector<std::size_t> supported_rows(const IntMatrix& c, unsigned mask) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < c.size(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!(mask & (1u << j)) && c(i, j) != 0) inside = false;
    if (inside) rows.push_back(i);
  }
  return rows;
}

std::vector<std::size_t> members(unsigned mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (mask & (1u << j)) out.push_back(j);
  return out;
}

std::string set_to_string(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

}  // namespace

bool is_special(const MagicSquare& ms, const std::vector<std::size_t>& columns) {
  unsigned mask = 0;
  for (std::size_t j : columns) mask |= 1u << j;
  return columns.size() == ms.size() || supported_rows(ms.entries(), mask).size() == columns.size();
}

std::vector<SpecialSubset> special_subsets(const MagicSquare& ms) {
  const auto& wa = ms.row_weights();
  for (Int a : wa.weights())
    if (a <= 0) throw DataError("zeta computation requires positive weights, got " + wa.to_string());
  if (!wa.is_reduced()) throw DataError("zeta computation requires a reduced weight system, got " + wa.to_string());

  const auto& c = ms.entries();
  const std::size_t n = c.size();
  const Int h = wa.degree();
  const unsigned full = (1u << n) - 1;

  // Enumerate J by size, then lexicographically by members.
  std::vector<std::vector<unsigned>> by_size(n + 1);
  for (unsigned mask = 0; mask <= full; ++mask) by_size[std::popcount(mask)].push_back(mask);
  for (auto& masks : by_size) {
    std::sort(masks.begin(), masks.end(),
              [n](unsigned l, unsigned r) { return members(l, n) < members(r, n); });
  }

  std::vector<SpecialSubset> out;
  for (std::size_t size = 0; size <= n; ++size) {
    for (unsigned mask : by_size[size]) {
      auto cols = members(mask, n);
      auto rows = supported_rows(c, mask);
      if (mask != full && rows.size() > size) {
        throw DataError("degenerate support: " + std::to_string(rows.size()) + " rows " + set_to_string(rows) +
                        " lie inside column set " + set_to_string(cols));
      }
      if (mask != full && rows.size() < size) continue;

      SpecialSubset s;
      s.columns = cols;
      s.rows = rows;
      if (cols.empty()) {
        s.gcd_weight = h;
      } else {
        Int g = 0;
        for (std::size_t j : cols) g = std::gcd(g, wa.weight(j));
        s.gcd_weight = g;
      }
      s.minor = std::abs(determinant(submatrix(c, rows, cols)));
      if (h % s.gcd_weight != 0) {
        throw DataError("a_J = " + std::to_string(s.gcd_weight) + " does not divide h = " + std::to_string(h) +
                        " for J = " + set_to_string(cols));
      }
      s.order = h / s.gcd_weight;
      const Int numerator = checked_mul(s.gcd_weight, s.minor);
      if (numerator % h != 0) {
        throw DataError("non-integral exponent " + std::to_string(numerator) + "/" + std::to_string(h) +
                        " for J = " + set_to_string(cols));
      }
      s.exponent = (size % 2 == 1) ? numerator / h : -(numerator / h);
      out.push_back(std::move(s));
    }
  }
  return out;
}

CyclotomicProduct reduced_zeta(const MagicSquare& ms) {
  CyclotomicProduct z;
  for (const auto& s : special_subsets(ms)) z.multiply(s.order, s.exponent);
  return z;
}

CyclotomicProduct transpose_zeta_from_special(const MagicSquare& ms) {
  const auto& wb = ms.column_weights();
  const Int k = wb.degree();
  const std::size_t n = ms.size();
  CyclotomicProduct z;
  for (const auto& s : special_subsets(ms)) {
    std::vector<std::size_t> cols, rows;
    for (std::size_t j = 0; j < n; ++j)
      if (std::find(s.columns.begin(), s.columns.end(), j) == s.columns.end()) cols.push_back(j);
    for (std::size_t i = 0; i < n; ++i)
      if (std::find(s.rows.begin(), s.rows.end(), i) == s.rows.end()) rows.push_back(i);
    Int b = k;
    if (!rows.empty()) {
      b = 0;
      for (std::size_t i : rows) b = std::gcd(b, wb.weight(i));
    }
    if (k % b != 0) throw DataError("b_I' = " + std::to_string(b) + " does not divide k = " + std::to_string(k));
    const Int minor = std::abs(determinant(submatrix(ms.entries(), rows, cols)));
    const Int numerator = checked_mul(b, minor);
    if (numerator % k != 0) throw DataError("non-integral exponent in the transpose zeta function");
    const Int e = numerator / k;
    z.multiply(k / b, cols.size() % 2 == 1 ? e : -e);
  }
  return z;
}

CyclotomicProduct characteristic_polynomial(const MagicSquare& ms) {
  const Int sign = (ms.size() % 2 == 1) ? 1 : -1;
  return reduced_zeta(ms).pow(sign);
}

LatticeInvariants lattice_invariants(const MagicSquare& ms) {
  const auto subsets = special_subsets(ms);
  Int mu = 0;
  Int mu0 = 0;
  for (const auto& s : subsets) {
    const bool odd = s.columns.size() % 2 == 1;
    mu = checked_add(mu, odd ? s.minor : -s.minor);
    mu0 = checked_add(mu0, s.exponent);
  }
  if (ms.size() % 2 == 0) {
    mu = -mu;
    mu0 = -mu0;
  }
  LatticeInvariants inv{mu, mu0, std::nullopt};
  if (ms.size() == 3 && is_calabi_yau(ms.row_weights())) inv.rho = 22 - (mu - mu0);
  return inv;
}

}  // namespace wsdual
