#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wsdual/cyclotomic.hpp"
#include "wsdual/magic.hpp"

namespace wsdual {

/// One special column set J of a magic square together with the data its
/// factor (1 - t^{h/a_J})^{exponent} in the reduced zeta function needs.
struct SpecialSubset {
  std::vector<std::size_t> columns;  ///< J, 0-based ascending
  std::vector<std::size_t> rows;     ///< I: rows supported inside J
  Int gcd_weight = 0;                ///< a_J (a_empty = h)
  Int minor = 1;                     ///< |det C_IJ| (C_empty = (1))
  Int order = 1;                     ///< h / a_J
  Int exponent = 0;                  ///< (-1)^{|J|+1} a_J |det C_IJ| / h
};

/// Special subsets ordered by size, then lexicographically.
///
/// J is special iff exactly |J| rows have their support inside J; the empty
/// set and the full set always are. Throws DataError when more than |J| rows
/// fit inside a proper J (the factor would depend on a choice of I), when a_J
/// does not divide h, or when an exponent is not an integer. Requires wa to
/// have positive weights with gcd 1.
std::vector<SpecialSubset> special_subsets(const MagicSquare& ms);

/// Reduced zeta function of the monodromy of f = sum_i x^{C_i}.
CyclotomicProduct reduced_zeta(const MagicSquare& ms);

/// Reduced zeta function of C^t read off the special subsets of C, using the
/// complements J' and I'. The column weights b live on the rows of C, so the
/// gcd runs over I' (b_empty = k).
CyclotomicProduct transpose_zeta_from_special(const MagicSquare& ms);

/// phi_C = zeta_C^{(-1)^{n-1}}.
CyclotomicProduct characteristic_polynomial(const MagicSquare& ms);

struct LatticeInvariants {
  Int mu = 0;    ///< Milnor number when f has an isolated singularity
  Int mu0 = 0;   ///< dimension of the radical of the Milnor lattice
  std::optional<Int> rho;  ///< 22 - (mu - mu0), for n = 3 and a Calabi-Yau wa
};

LatticeInvariants lattice_invariants(const MagicSquare& ms);

/// True iff `columns` is special for ms (same criterion as special_subsets,
/// without the ambiguity check).
bool is_special(const MagicSquare& ms, const std::vector<std::size_t>& columns);

}  // namespace wsdual
