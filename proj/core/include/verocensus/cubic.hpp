#pragma once

#include <array>
#include <string>

#include "verocensus/conics.hpp"
#include "verocensus/gf.hpp"
#include "verocensus/pglinalg.hpp"

namespace vrc {

/// Homogeneous cubic in GF(q)[A,B,C,D], dense over the 20 degree-3
/// monomials in graded-lex order with A > B > C > D:
/// A^3, A^2B, A^2C, A^2D, AB^2, ABC, ABD, AC^2, ACD, AD^2,
/// B^3, B^2C, B^2D, BC^2, BCD, BD^2, C^3, C^2D, CD^2, D^3.
struct CubicSurface {
  std::array<Fel, 20> coef{};

  bool operator==(const CubicSurface& o) const { return coef == o.coef; }
};

/// Exponent tuples of the monomial order above.
const std::array<std::array<int, 4>, 20>& cubic_monomials();

/// The discriminant of A*f1 + B*f2 + C*f3 + D*f4 expanded symbolically.
/// The generators must be linearly independent.  In even characteristic
/// the 4*a00*a11*a22 contribution vanishes identically.
CubicSurface discriminant_cubic(const std::array<TernaryForm, 4>& gens,
                                const FieldCtx& f);

Fel eval_cubic(const CubicSurface& x, Fel a, Fel b, Fel c, Fel d,
               const FieldCtx& f);

/// Exhaustive count of rational points in PG(3,q).
long long count_points(const CubicSurface& x, const FieldCtx& f);

/// For a line L of PG(5,q): builds the web of conics dual to L, its
/// cubic surface, and verifies #points = q^2 + i*q + 1 where i is the
/// number of rank <= 2 points of L, with i in {0,1,2,3,q+1}.
bool secant_link_check(const Subspace& line, const FieldCtx& f);

/// Generators of the web dual to a line: a basis of the forms whose
/// delta-hyperplanes contain it.
std::array<TernaryForm, 4> web_of_line(const Subspace& line, const FieldCtx& f);

/// JSON array of the 20 coefficients in the fixed monomial order.
std::string cubic_to_json(const CubicSurface& x);

}  // namespace vrc
