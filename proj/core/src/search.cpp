#include "wsdual/search.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace wsdual {

namespace {

void require_positive(const WeightSystem& w, const char* which) {
  for (Int a : w.weights()) {
    if (a <= 0) throw InputError(std::string("search requires positive weights in ") + which + " " + w.to_string());
  }
}

void rows_from(const WeightSystem& wa, std::size_t j, Int remaining, std::vector<Int>& current,
               std::vector<std::vector<Int>>& out) {
  const std::size_t n = wa.size();
  if (j + 1 == n) {
    if (remaining % wa.weight(j) == 0) {
      current[j] = remaining / wa.weight(j);
      out.push_back(current);
    }
    return;
  }
  for (Int c = remaining / wa.weight(j); c >= 0; --c) {
    current[j] = c;
    rows_from(wa, j + 1, remaining - c * wa.weight(j), current, out);
  }
}

struct Searcher {
  const std::vector<std::vector<Int>>& rows;
  std::vector<Int> bound;  // wb weights in row order
  Int k;
  std::size_t n;
  std::vector<std::size_t> chosen;
  std::vector<Int> column_sums;
  std::vector<std::vector<std::size_t>>& hits;

  // Row indices are non-decreasing, so rows come out lexicographically descending.
  void extend(std::size_t depth, std::size_t first) {
    if (depth == n) {
      if (std::all_of(column_sums.begin(), column_sums.end(), [&](Int s) { return s == k; })) {
        hits.push_back(chosen);
      }
      return;
    }
    for (std::size_t r = first; r < rows.size(); ++r) {
      bool fits = true;
      for (std::size_t j = 0; j < n; ++j) {
        column_sums[j] += bound[depth] * rows[r][j];
        if (column_sums[j] > k) fits = false;
      }
      if (fits) {
        chosen[depth] = r;
        extend(depth + 1, r);
      }
      for (std::size_t j = 0; j < n; ++j) column_sums[j] -= bound[depth] * rows[r][j];
    }
  }
};

}  // namespace

CouplingFilter parse_coupling_filter(std::string_view text) {
  if (text == "any") return CouplingFilter::any;
  if (text == "almost" || text == "almost_primitive") return CouplingFilter::almost_primitive;
  if (text == "primitive") return CouplingFilter::primitive;
  throw InputError("unknown filter '" + std::string(text) + "' (expected any|almost|primitive)");
}

std::vector<std::vector<Int>> enumerate_rows(const WeightSystem& wa) {
  require_positive(wa, "wa");
  std::vector<std::vector<Int>> out;
  std::vector<Int> current(wa.size(), 0);
  rows_from(wa, 0, wa.degree(), current, out);
  return out;
}

bool matches(const CouplingReport& report, CouplingFilter filter, bool strong_only) noexcept {
  if (strong_only && !report.strong) return false;
  switch (filter) {
    case CouplingFilter::any:
      return true;
    case CouplingFilter::almost_primitive:
      return report.almost_primitive;
    case CouplingFilter::primitive:
      return report.primitive;
  }
  return false;
}

MagicSquare canonical_form(const MagicSquare& ms) {
  const std::size_t n = ms.size();
  const auto rows = ms.entries().rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& wb = ms.column_weights();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return std::tie(rows[j], wb.weights()[i]) < std::tie(rows[i], wb.weights()[j]);
  });
  std::vector<std::vector<Int>> sorted_rows;
  std::vector<Int> bound;
  for (std::size_t i : order) {
    sorted_rows.push_back(rows[i]);
    bound.push_back(wb.weight(i));
  }
  return validate(IntMatrix::from_rows(sorted_rows), ms.row_weights(),
                  WeightSystem(std::move(bound), wb.degree(), wb.allows_zero_weight()));
}

SearchResult find_magic_squares(const SearchQuery& q) {
  require_positive(q.wa, "wa");
  require_positive(q.wb, "wb");
  const std::size_t n = q.wa.size();
  if (q.wb.size() != n) throw InputError("wa and wb must have the same number of weights");

  const auto rows = enumerate_rows(q.wa);

  std::vector<Int> bound(q.wb.weights().begin(), q.wb.weights().end());
  std::sort(bound.begin(), bound.end());

  // (row indices, bound wb); distinct permutations of wb are tried in ascending order.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<Int>>> found;
  do {
    std::vector<std::vector<std::size_t>> hits;
    Searcher s{rows, bound, q.wb.degree(), n, std::vector<std::size_t>(n, 0), std::vector<Int>(n, 0), hits};
    s.extend(0, 0);
    for (auto& h : hits) {
      // Repeated rows: only the ascending assignment of their weights is canonical.
      bool canonical = true;
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (h[i] == h[i + 1] && bound[i] > bound[i + 1]) canonical = false;
      if (canonical) found.emplace_back(std::move(h), bound);
    }
  } while (std::next_permutation(bound.begin(), bound.end()));

  // Ascending row indices == descending rows; ties broken by bound wb ascending.
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  SearchResult result;
  for (const auto& [indices, wb_bound] : found) {
    std::vector<std::vector<Int>> m;
    for (std::size_t r : indices) m.push_back(rows[r]);
    MagicSquare ms = validate(IntMatrix::from_rows(m), q.wa, WeightSystem(wb_bound, q.wb.degree()));
    if (!matches(classify(ms), q.filter, q.strong_only)) continue;
    if (result.squares.size() == q.cap) {
      result.truncated = true;
      break;
    }
    result.squares.push_back(std::move(ms));
  }
  return result;
}

}  // namespace wsdual
