#include "wsdual/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace wsdual {

namespace {

constexpr std::string_view kLetters = "xyzt";

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

Int read_number(const std::string& s, std::size_t& pos, std::string_view context) {
  std::size_t begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (begin == pos) throw InputError("expected a number in '" + std::string(context) + "'");
  Int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + begin, s.data() + pos, value);
  if (ec != std::errc{}) throw InputError("number out of range in '" + std::string(context) + "'");
  return value;
}

std::vector<Int> parse_one(const std::string& mono, std::size_t n, bool indexed) {
  std::vector<Int> row(n, 0);
  if (mono == "1") return row;
  if (mono.empty()) throw InputError("empty monomial");
  std::size_t pos = 0;
  while (pos < mono.size()) {
    char c = mono[pos];
    std::size_t var;
    if (indexed) {
      if (c != 'x') throw InputError("expected x1..x" + std::to_string(n) + " in '" + mono + "'");
      ++pos;
      Int idx = read_number(mono, pos, mono);
      if (idx < 1 || static_cast<std::size_t>(idx) > n) {
        throw InputError("variable x" + std::to_string(idx) + " out of range in '" + mono + "'");
      }
      var = static_cast<std::size_t>(idx - 1);
    } else {
      auto at = kLetters.find(c);
      if (at == std::string_view::npos || at >= n) {
        throw InputError(std::string("unexpected variable '") + c + "' in '" + mono + "' for " +
                         std::to_string(n) + " variables");
      }
      var = at;
      ++pos;
    }
    Int exponent = 1;
    if (pos < mono.size() && mono[pos] == '^') {
      ++pos;
      if (pos < mono.size() && mono[pos] == '{') {
        ++pos;
        exponent = read_number(mono, pos, mono);
        if (pos >= mono.size() || mono[pos] != '}') throw InputError("unclosed brace in '" + mono + "'");
        ++pos;
      } else {
        exponent = read_number(mono, pos, mono);
      }
    }
    row[var] = checked_add(row[var], exponent);
  }
  return row;
}

}  // namespace

IntMatrix parse_monomials(std::string_view text) {
  const std::string compact = strip_spaces(text);
  const auto monomials = split(compact, ',');
  const std::size_t n = monomials.size();
  if (n < 2 || n > 4) {
    throw InputError("expected 2 to 4 monomials, got " + std::to_string(n) + " in '" +
                     std::string(text) + "'");
  }
  bool indexed = false;
  for (std::size_t i = 0; i + 1 < compact.size(); ++i) {
    if (compact[i] == 'x' && std::isdigit(static_cast<unsigned char>(compact[i + 1]))) indexed = true;
  }
  std::vector<std::vector<Int>> rows;
  rows.reserve(n);
  for (const auto& mono : monomials) rows.push_back(parse_one(mono, n, indexed));
  return IntMatrix::from_rows(rows);
}

std::string format_monomials(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += ", ";
    std::string mono;
    for (std::size_t j = 0; j < n; ++j) {
      Int e = m(i, j);
      if (e == 0) continue;
      if (n <= kLetters.size()) {
        mono += kLetters[j];
      } else {
        mono += "x" + std::to_string(j + 1);
      }
      if (e == 1) continue;
      if (e < 10) {
        mono += "^" + std::to_string(e);
      } else {
        mono += "^{" + std::to_string(e) + "}";
      }
    }
    out += mono.empty() ? "1" : mono;
  }
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  if (std::any_of(text.begin(), text.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); })) {
    return parse_monomials(text);
  }
  const std::string compact = strip_spaces(text);
  std::vector<std::vector<Int>> rows;
  for (const auto& row_text : split(compact, ';')) {
    std::vector<Int> row;
    for (const auto& cell : split(row_text, ',')) {
      std::size_t pos = 0;
      bool negative = !cell.empty() && cell[0] == '-';
      if (negative) ++pos;
      Int v = read_number(cell, pos, text);
      if (pos != cell.size()) throw InputError("bad matrix entry '" + cell + "'");
      row.push_back(negative ? -v : v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() < 2 || rows.size() > 4) {
    throw InputError("matrix must have 2 to 4 rows, got " + std::to_string(rows.size()));
  }
  return IntMatrix::from_rows(rows);
}

std::string format_rows(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(m(i, j));
    }
  }
  return out;
}

}  // namespace wsdual
