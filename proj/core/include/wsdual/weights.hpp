#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wsdual/numeric.hpp"

namespace wsdual {

/// A weight system (a_1, ..., a_n; h) with 2 <= n <= 4.
///
/// Weights are kept in the order given: matrix columns are positional, so only
/// `reduce` and `equivalent` ever reorder them. The virtual weight
/// a_0 = h - sum(a_i) is always derived, never stored.
///
/// A single zero weight is accepted only when `allows_zero_weight` is set.
class WeightSystem {
 public:
  static constexpr std::size_t kMinSize = 2;
  static constexpr std::size_t kMaxSize = 4;

  WeightSystem(std::vector<Int> weights, Int degree, bool allows_zero_weight = false);

  std::span<const Int> weights() const noexcept { return weights_; }
  Int weight(std::size_t i) const { return weights_.at(i); }
  Int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return weights_.size(); }

  /// a_0 = h - sum(a_i).
  Int virtual_weight() const noexcept;

  bool allows_zero_weight() const noexcept { return allows_zero_weight_; }
  bool has_zero_weight() const noexcept;

  /// gcd(a_1, ..., a_n) == 1.
  bool is_reduced() const noexcept;
  /// Reduced and ascending.
  bool is_canonical() const noexcept;

  /// "a1,a2,...,an;h"
  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<Int> weights_;
  Int degree_;
  bool allows_zero_weight_;
};

/// The canonical representative of an equivalence class together with the
/// transformation applied: canonical.weight(i) = original.weight(permutation[i]) / divisor.
struct Reduction {
  WeightSystem canonical;
  std::vector<std::size_t> permutation;
  Int divisor = 1;
};

/// Parses `INT ("," INT)* ";" INT` without reordering or scaling.
WeightSystem parse_weight_system(std::string_view text, bool allow_zero_weight = false);

/// Reduced ascending representative of `w`.
Reduction reduce(const WeightSystem& w);

/// Divides the weights and degree by gcd(a_1..a_n) without reordering.
WeightSystem scale_to_reduced(const WeightSystem& w);

/// parse_weight_system followed by reduce.
Reduction parse_and_reduce(std::string_view text, bool allow_zero_weight = false);

/// True iff some permutation and rational scale map one system onto the other.
/// Systems with a zero weight are only compared up to permutation.
bool equivalent(const WeightSystem& lhs, const WeightSystem& rhs);

/// a_0 > 0 and a_0 | h.
bool is_calabi_yau(const WeightSystem& w) noexcept;

}  // namespace wsdual
