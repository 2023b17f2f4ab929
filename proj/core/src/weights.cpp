#include "wsdual/weights.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace wsdual {

namespace {

Int parse_int(std::string_view token, std::string_view whole) {
  auto first = token.find_first_not_of(" \t");
  auto last = token.find_last_not_of(" \t");
  if (first == std::string_view::npos) {
    throw InputError("empty number in weight system '" + std::string(whole) + "'");
  }
  token = token.substr(first, last - first + 1);
  Int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("bad integer '" + std::string(token) + "' in weight system '" +
                     std::string(whole) + "'");
  }
  return value;
}

}  // namespace

WeightSystem::WeightSystem(std::vector<Int> weights, Int degree, bool allows_zero_weight)
    : weights_(std::move(weights)), degree_(degree), allows_zero_weight_(allows_zero_weight) {
  if (weights_.size() < kMinSize || weights_.size() > kMaxSize) {
    throw InputError("weight system must have between 2 and 4 weights, got " +
                     std::to_string(weights_.size()));
  }
  if (degree_ <= 0) throw InputError("degree must be positive, got " + std::to_string(degree_));
  std::size_t zeros = 0;
  for (Int a : weights_) {
    if (a < 0) throw InputError("weights must be non-negative, got " + std::to_string(a));
    if (a == 0) ++zeros;
  }
  if (zeros == weights_.size()) throw InputError("all weights are zero");
  if (zeros > 1) throw InputError("at most one weight may be zero");
  if (zeros == 1 && !allows_zero_weight_) {
    throw InputError("zero weight in " + to_string() + " requires the zero-weight flag");
  }
}

Int WeightSystem::virtual_weight() const noexcept {
  return degree_ - std::accumulate(weights_.begin(), weights_.end(), Int{0});
}

bool WeightSystem::has_zero_weight() const noexcept {
  return std::find(weights_.begin(), weights_.end(), 0) != weights_.end();
}

bool WeightSystem::is_reduced() const noexcept { return gcd_of(weights_) == 1; }

bool WeightSystem::is_canonical() const noexcept {
  return is_reduced() && std::is_sorted(weights_.begin(), weights_.end());
}

std::string WeightSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out + ';' + std::to_string(degree_);
}

WeightSystem parse_weight_system(std::string_view text, bool allow_zero_weight) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw InputError("weight system '" + std::string(text) + "' must have the form a1,...,an;h");
  }
  std::vector<Int> weights;
  std::string_view list = text.substr(0, semi);
  while (true) {
    auto comma = list.find(',');
    weights.push_back(parse_int(list.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  Int degree = parse_int(text.substr(semi + 1), text);
  return WeightSystem(std::move(weights), degree, allow_zero_weight);
}

WeightSystem scale_to_reduced(const WeightSystem& w) {
  Int g = gcd_of(w.weights());
  if (w.degree() % g != 0) {
    throw InputError("weight gcd " + std::to_string(g) + " does not divide the degree of " +
                     w.to_string());
  }
  std::vector<Int> weights(w.weights().begin(), w.weights().end());
  for (Int& a : weights) a /= g;
  return WeightSystem(std::move(weights), w.degree() / g, w.allows_zero_weight());
}

Reduction reduce(const WeightSystem& w) {
  WeightSystem scaled = scale_to_reduced(w);
  std::vector<std::size_t> perm(w.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t i, std::size_t j) { return scaled.weight(i) < scaled.weight(j); });
  std::vector<Int> sorted;
  sorted.reserve(perm.size());
  for (std::size_t i : perm) sorted.push_back(scaled.weight(i));
  return Reduction{WeightSystem(std::move(sorted), scaled.degree(), w.allows_zero_weight()),
                   std::move(perm), gcd_of(w.weights())};
}

Reduction parse_and_reduce(std::string_view text, bool allow_zero_weight) {
  return reduce(parse_weight_system(text, allow_zero_weight));
}

bool equivalent(const WeightSystem& lhs, const WeightSystem& rhs) {
  if (lhs.size() != rhs.size()) return false;
  if (lhs.has_zero_weight() || rhs.has_zero_weight()) {
    std::vector<Int> l(lhs.weights().begin(), lhs.weights().end());
    std::vector<Int> r(rhs.weights().begin(), rhs.weights().end());
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    return l == r && lhs.degree() == rhs.degree();
  }
  // Compare the sorted systems as proportional vectors: h' * a_i == h * a'_i.
  std::vector<Int> l(lhs.weights().begin(), lhs.weights().end());
  std::vector<Int> r(rhs.weights().begin(), rhs.weights().end());
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (checked_mul(l[i], rhs.degree()) != checked_mul(r[i], lhs.degree())) return false;
  }
  return true;
}

bool is_calabi_yau(const WeightSystem& w) noexcept {
  Int a0 = w.virtual_weight();
  return a0 > 0 && w.degree() % a0 == 0;
}

}  // namespace wsdual
