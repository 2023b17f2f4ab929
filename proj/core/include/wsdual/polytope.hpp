#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wsdual/magic.hpp"

namespace wsdual {

using RationalPoint = std::vector<Rational>;

/// A simplex given by its vertices, with exact rational coordinates.
class RationalSimplex {
 public:
  explicit RationalSimplex(std::vector<RationalPoint> vertices);

  const std::vector<RationalPoint>& vertices() const noexcept { return vertices_; }
  std::size_t dimension() const noexcept { return vertices_.empty() ? 0 : vertices_.front().size(); }

  /// Vertex lists compare as sets.
  bool same_vertices(const RationalSimplex& other) const;

  /// "{(2,-1), (-1,1), (-1,-1)}"
  std::string to_string() const;

 private:
  std::vector<RationalPoint> vertices_;
};

/// Vertices (-1 + h/a_1, -1, ..., -1), ..., (-1, ..., -1 + h/a_n), (-1, ..., -1).
RationalSimplex extended_diagram(const WeightSystem& wa);

/// Polar dual of a full-dimensional simplex containing the origin in its
/// interior. Dual vertex i is the one opposite primal vertex i: it solves
/// <v_j, y> = -1 for every j != i.
RationalSimplex polar_dual(const RationalSimplex& s);

/// Barycentric coordinates of the origin with respect to the n + 1 vertices.
std::vector<Rational> barycentric_of_origin(const RationalSimplex& s);

/// A C = E + A 1, with A = (C - 1)^-1 and 1 the all-ones matrix: the columns of C,
/// read in the basis of the rows of A, span the polar dual's edge simplex.
bool verify_duality_identity(const MagicSquare& ms);

}  // namespace wsdual
