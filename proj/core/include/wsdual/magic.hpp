#pragma once

#include <string>
#include <vector>

#include "wsdual/matrix.hpp"
#include "wsdual/weights.hpp"

namespace wsdual {

/// A weighted magic square C of weight (W_a, W_b): every row satisfies
/// sum_j c_ij a_j = h and every column satisfies sum_i b_i c_ij = k.
///
/// Instances only come out of `validate` (or operations built on it), so
/// holding a MagicSquare means both relations have been checked exactly.
class MagicSquare {
 public:
  const IntMatrix& entries() const noexcept { return entries_; }
  const WeightSystem& row_weights() const noexcept { return wa_; }
  const WeightSystem& column_weights() const noexcept { return wb_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const MagicSquare&, const MagicSquare&) = default;

 private:
  friend MagicSquare validate(IntMatrix entries, WeightSystem wa, WeightSystem wb);
  MagicSquare(IntMatrix entries, WeightSystem wa, WeightSystem wb)
      : entries_(std::move(entries)), wa_(std::move(wa)), wb_(std::move(wb)) {}

  IntMatrix entries_;
  WeightSystem wa_;
  WeightSystem wb_;
};

/// Raised by `validate`; `what()` names the offending row or column.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

MagicSquare validate(IntMatrix entries, WeightSystem wa, WeightSystem wb);

enum class Coupling { primitive, almost_primitive, plain };

std::string to_string(Coupling c);

struct CouplingReport {
  Int determinant = 0;
  Coupling classification = Coupling::plain;
  /// |det C| = h = k
  bool primitive = false;
  /// |det C| = h * b_0 = k * a_0
  bool almost_primitive = false;
  /// Every row and every column contains a zero.
  bool strong = false;
  std::vector<bool> row_has_zero;
  std::vector<bool> column_has_zero;
};

CouplingReport classify(const MagicSquare& ms);

/// Companions of C from the (c_ij - 1) construction.
struct InverseData {
  IntMatrix b;          ///< B = (c_ij - 1)
  Int det_b = 0;
  RationalMatrix a;     ///< A = B^-1
  std::vector<Rational> row_sums;     ///< A 1 = (a_i / a_0)
  std::vector<Rational> column_sums;  ///< 1^t A = (b_j / b_0)
  WeightSystem recovered_wa;          ///< weights in column order, gcd 1
  WeightSystem recovered_wb;
};

/// Builds B, A and recovers both weight systems from A.
/// Throws DataError if B is singular or the recovered systems disagree with
/// the bound ones.
InverseData inverse_data(const MagicSquare& ms);

/// B = (c_ij - 1).
IntMatrix shifted_matrix(const IntMatrix& c);

/// Entries transposed, weight systems swapped.
MagicSquare transpose(const MagicSquare& ms);

}  // namespace wsdual
