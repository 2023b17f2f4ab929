#include "wsdual/polytope.hpp"

#include <algorithm>

namespace wsdual {

namespace {

Rational dot(const RationalPoint& x, const RationalPoint& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

RationalSimplex::RationalSimplex(std::vector<RationalPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("simplex needs at least one vertex");
  const std::size_t dim = vertices_.front().size();
  for (const auto& v : vertices_)
    if (v.size() != dim) throw InputError("simplex vertices have mixed dimensions");
  if (vertices_.size() != dim && vertices_.size() != dim + 1) {
    throw InputError("a simplex in dimension " + std::to_string(dim) + " needs " + std::to_string(dim) +
                     " or " + std::to_string(dim + 1) + " vertices");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (vertices_[i] == vertices_[j]) throw InputError("simplex vertices must be distinct");
}

bool RationalSimplex::same_vertices(const RationalSimplex& other) const {
  if (vertices_.size() != other.vertices_.size()) return false;
  return std::all_of(vertices_.begin(), vertices_.end(), [&](const RationalPoint& v) {
    return std::find(other.vertices_.begin(), other.vertices_.end(), v) != other.vertices_.end();
  });
}

std::string RationalSimplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ", ";
    out += "(";
    for (std::size_t j = 0; j < vertices_[i].size(); ++j) {
      if (j) out += ",";
      out += wsdual::to_string(vertices_[i][j]);
    }
    out += ")";
  }
  return out + "}";
}

RationalSimplex extended_diagram(const WeightSystem& wa) {
  if (wa.has_zero_weight()) throw InputError("extended diagram needs positive weights, got " + wa.to_string());
  if (wa.virtual_weight() == 0) throw InputError("extended diagram needs a_0 != 0");
  const std::size_t n = wa.size();
  std::vector<RationalPoint> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    RationalPoint v(n, Rational(-1));
    v[i] += Rational(wa.degree(), wa.weight(i));
    vertices.push_back(std::move(v));
  }
  vertices.emplace_back(n, Rational(-1));
  return RationalSimplex(std::move(vertices));
}

std::vector<Rational> barycentric_of_origin(const RationalSimplex& s) {
  const std::size_t n = s.dimension();
  if (s.vertices().size() != n + 1) throw InputError("barycentric coordinates need an n-simplex");
  // Unknowns lambda_0..lambda_n: sum lambda_i v_i = 0, sum lambda_i = 1.
  RationalMatrix m(n + 1, Rational(0));
  std::vector<Rational> rhs(n + 1, Rational(0));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= n; ++i) m(row, i) = s.vertices()[i][row];
  for (std::size_t i = 0; i <= n; ++i) m(n, i) = Rational(1);
  rhs[n] = Rational(1);
  try {
    return solve(std::move(m), std::move(rhs));
  } catch (const DataError&) {
    throw InputError("degenerate simplex");
  }
}

RationalSimplex polar_dual(const RationalSimplex& s) {
  const std::size_t n = s.dimension();
  if (s.vertices().size() != n + 1) throw InputError("polar dual needs a full-dimensional simplex");
  const auto bary = barycentric_of_origin(s);
  if (std::any_of(bary.begin(), bary.end(), [](const Rational& l) { return l <= Rational(0); })) {
    throw InputError("origin is not in the interior of the simplex");
  }
  std::vector<RationalPoint> dual;
  for (std::size_t i = 0; i <= n; ++i) {
    RationalMatrix m(n);
    std::size_t row = 0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < n; ++k) m(row, k) = s.vertices()[j][k];
      ++row;
    }
    dual.push_back(solve(std::move(m), std::vector<Rational>(n, Rational(-1))));
  }
  for (const auto& v : s.vertices())
    for (const auto& y : dual)
      if (dot(v, y) < Rational(-1)) throw DataError("polar dual check failed: <v, y> < -1");
  return RationalSimplex(std::move(dual));
}

bool verify_duality_identity(const MagicSquare& ms) {
  const auto data = inverse_data(ms);
  const std::size_t n = ms.size();
  const RationalMatrix ones(n, Rational(1));
  const RationalMatrix lhs = data.a * to_rational(ms.entries());
  const RationalMatrix rhs = RationalMatrix::identity(n) + data.a * ones;
  if (!(lhs == rhs)) return false;
  // Entry-wise form: delta_ij + a_i / a_0.
  const Int a0 = ms.row_weights().virtual_weight();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational expected = Rational(ms.row_weights().weight(i), a0) + Rational(i == j ? 1 : 0);
      if (lhs(i, j) != expected) return false;
    }
  return true;
}

}  // namespace wsdual
