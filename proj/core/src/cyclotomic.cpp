#include "wsdual/cyclotomic.hpp"

#include <cstdlib>

namespace wsdual {

CyclotomicProduct::CyclotomicProduct(const std::map<Int, Int>& exponents) {
  for (const auto& [order, e] : exponents) multiply(order, e);
}

void CyclotomicProduct::multiply(Int order, Int exponent) {
  if (order <= 0) throw InputError("cyclotomic factor order must be positive, got " + std::to_string(order));
  if (exponent == 0) return;
  Int& slot = exponents_[order];
  slot = checked_add(slot, exponent);
  if (slot == 0) exponents_.erase(order);
}

Int CyclotomicProduct::exponent(Int order) const {
  auto it = exponents_.find(order);
  return it == exponents_.end() ? 0 : it->second;
}

Int CyclotomicProduct::degree() const {
  Int d = 0;
  for (const auto& [order, e] : exponents_) d = checked_add(d, checked_mul(order, e));
  return d;
}

Int CyclotomicProduct::exponent_sum() const {
  Int s = 0;
  for (const auto& [order, e] : exponents_) s = checked_add(s, e);
  return s;
}

CyclotomicProduct CyclotomicProduct::inverse() const { return pow(-1); }

CyclotomicProduct CyclotomicProduct::pow(Int power) const {
  CyclotomicProduct out;
  for (const auto& [order, e] : exponents_) out.multiply(order, checked_mul(e, power));
  return out;
}

CyclotomicProduct operator*(const CyclotomicProduct& lhs, const CyclotomicProduct& rhs) {
  CyclotomicProduct out = lhs;
  for (const auto& [order, e] : rhs.exponents_) out.multiply(order, e);
  return out;
}

std::string CyclotomicProduct::to_string() const {
  auto render = [](Int order, Int e) {
    std::string f = order == 1 ? "(1-t)" : "(1-t^" + std::to_string(order) + ")";
    if (e != 1) f += "^" + std::to_string(e);
    return f;
  };
  std::string num;
  std::string den;
  for (const auto& [order, e] : exponents_) {
    if (e > 0) {
      num += render(order, e);
    } else {
      den += render(order, -e);
    }
  }
  if (num.empty()) num = "1";
  return den.empty() ? num : num + " / " + den;
}

CyclotomicProduct saito_dual(const CyclotomicProduct& p, Int h) {
  if (h <= 0) throw InputError("Saito dual needs a positive degree");
  CyclotomicProduct out;
  for (const auto& [order, e] : p.exponents()) {
    if (h % order != 0) {
      throw InputError("order " + std::to_string(order) + " does not divide h = " + std::to_string(h));
    }
    out.multiply(h / order, -e);
  }
  return out;
}

ValueAtOne evaluate_at_one(const CyclotomicProduct& p, std::optional<Int> rho) {
  if (p.exponent_sum() != 0) {
    throw DataError("exponent sum " + std::to_string(p.exponent_sum()) +
                    " != 0; the value at t = 1 is 0 or infinite");
  }
  // (1 - t^l) / (1 - t) -> l at t = 1, so the product tends to prod l^{alpha_l}.
  Rational value(1);
  for (const auto& [order, e] : p.exponents()) {
    for (Int i = 0; i < std::abs(e); ++i) {
      value = e > 0 ? value * Rational(order) : value / Rational(order);
    }
  }
  ValueAtOne out{value, std::nullopt};
  if (rho) {
    if (value.denominator() != 1) throw DataError("value at 1 is not an integer: " + wsdual::to_string(value));
    out.discriminant = ((*rho - 1) % 2 == 0) ? value.numerator() : -value.numerator();
  }
  return out;
}

std::vector<Int> expand_series(const CyclotomicProduct& p, std::size_t max_degree) {
  std::vector<Int> series(max_degree + 1, 0);
  series[0] = 1;
  const auto top = static_cast<Int>(max_degree);
  for (const auto& [order, e] : p.exponents()) {
    for (Int i = 0; i < std::abs(e); ++i) {
      if (e > 0) {
        // multiply by (1 - t^l)
        for (Int d = top; d >= order; --d) series[d] = checked_add(series[d], -series[d - order]);
      } else {
        // divide by (1 - t^l): s[d] += s[d - l], ascending
        for (Int d = order; d <= top; ++d) series[d] = checked_add(series[d], series[d - order]);
      }
    }
  }
  return series;
}

}  // namespace wsdual
