#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsdual/numeric.hpp"

namespace wsdual {

/// A formal finite product prod_l (1 - t^l)^{alpha_l} with integer exponents.
/// Zero exponents are never stored; the empty product is the constant 1.
class CyclotomicProduct {
 public:
  CyclotomicProduct() = default;
  explicit CyclotomicProduct(const std::map<Int, Int>& exponents);

  /// Multiplies by (1 - t^order)^exponent.
  void multiply(Int order, Int exponent);

  Int exponent(Int order) const;
  const std::map<Int, Int>& exponents() const noexcept { return exponents_; }
  bool is_one() const noexcept { return exponents_.empty(); }

  /// sum l * alpha_l
  Int degree() const;
  /// sum alpha_l
  Int exponent_sum() const;

  CyclotomicProduct inverse() const;
  /// Every exponent multiplied by `power`.
  CyclotomicProduct pow(Int power) const;

  /// "(1-t^2)(1-t^3)(1-t^30) / (1-t)(1-t^6)(1-t^15)", orders ascending.
  std::string to_string() const;

  friend CyclotomicProduct operator*(const CyclotomicProduct& lhs, const CyclotomicProduct& rhs);
  friend bool operator==(const CyclotomicProduct&, const CyclotomicProduct&) = default;

 private:
  std::map<Int, Int> exponents_;
};

/// psi*(t) = prod_{m | h} (1 - t^m)^{-alpha_{h/m}}.
/// Throws InputError naming the first order that does not divide h.
CyclotomicProduct saito_dual(const CyclotomicProduct& p, Int h);

struct ValueAtOne {
  Rational value;
  std::optional<Int> discriminant;
};

/// Value of the rational function at t = 1, i.e. prod l^{alpha_l}; only
/// defined when the exponents sum to zero. With `rho`, also returns
/// (-1)^(rho - 1) times the value (which must then be an integer).
ValueAtOne evaluate_at_one(const CyclotomicProduct& p, std::optional<Int> rho = std::nullopt);

/// Power series coefficients of p through t^max_degree.
std::vector<Int> expand_series(const CyclotomicProduct& p, std::size_t max_degree);

}  // namespace wsdual
