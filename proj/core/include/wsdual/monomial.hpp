#pragma once

#include <string>
#include <string_view>

#include "wsdual/matrix.hpp"

namespace wsdual {

/// Parses a comma-separated list of n monomials into an n x n exponent matrix;
/// monomial i becomes row i.
///
/// Variables are x,y (n = 2), x,y,z (n = 3), x,y,z,t (n = 4), or x1..xn.
/// Exponents are written x^5 or x^{21}; a bare variable has exponent 1 and
/// the monomial "1" is the zero row.
IntMatrix parse_monomials(std::string_view text);

/// Inverse of parse_monomials, in the tables' notation: "x^{21}z, y^3, z^2".
std::string format_monomials(const IntMatrix& m);

/// Accepts either monomial notation or semicolon-separated integer rows
/// ("5,0,1;1,3,0;0,0,2").
IntMatrix parse_matrix(std::string_view text);

/// "5,0,1;1,3,0;0,0,2"
std::string format_rows(const IntMatrix& m);

}  // namespace wsdual
