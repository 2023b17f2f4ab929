#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wsdual/magic.hpp"

namespace wsdual {

enum class CouplingFilter { any, almost_primitive, primitive };

CouplingFilter parse_coupling_filter(std::string_view text);

struct SearchQuery {
  WeightSystem wa;
  WeightSystem wb;
  CouplingFilter filter = CouplingFilter::any;
  bool strong_only = false;
  std::size_t cap = 1'000'000;
};

struct SearchResult {
  std::vector<MagicSquare> squares;
  /// Set when the cap was reached; `squares` then holds the first `cap` results.
  bool truncated = false;
};

/// All non-negative integer c with sum_j c_j a_j = h, lexicographically descending.
std::vector<std::vector<Int>> enumerate_rows(const WeightSystem& wa);

/// Every weighted magic square of weight (wa, wb) passing the filters.
///
/// Rows are reported sorted lexicographically descending. Because the column
/// relation pairs b_i with row i, the weights of wb are permuted along with the
/// rows: each result binds wb in the order that matches its canonical rows.
/// Results are ordered by rows (descending) and then by bound wb (ascending).
SearchResult find_magic_squares(const SearchQuery& q);

/// The canonical form used by the search: rows sorted descending with the
/// column weights permuted to follow their rows.
MagicSquare canonical_form(const MagicSquare& ms);

bool matches(const CouplingReport& report, CouplingFilter filter, bool strong_only) noexcept;

}  // namespace wsdual
