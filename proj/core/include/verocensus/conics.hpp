#pragma once

#include <array>
#include <string>
#include <vector>

#include "verocensus/gf.hpp"
#include "verocensus/pglinalg.hpp"

namespace vrc {

/// Quadratic form a00*X0^2 + a01*X0X1 + a02*X0X2 + a11*X1^2 + a12*X1X2
/// + a22*X2^2 on PG(2,q), identified up to scalar.  The coefficient
/// order (a00,a01,a02,a11,a12,a22) is the pairing used everywhere a form
/// is matched with a point or hyperplane of PG(5,q).
struct TernaryForm {
  std::array<Fel, 6> c{};

  bool operator==(const TernaryForm& o) const { return c == o.c; }
  bool is_zero() const;
};

enum class ConicType { DoubleLine, RealPair, ImaginaryPair, NonSingular };

constexpr int kNumConicTypes = 4;
std::string to_string(ConicType t);

/// 4*a00*a11*a22 + a01*a02*a12 - a00*a12^2 - a11*a02^2 - a22*a01^2.
/// In even characteristic the first term vanishes identically.
Fel discriminant(const TernaryForm& g, const FieldCtx& f);

Fel eval_form(const TernaryForm& g, const Vec& pt, const FieldCtx& f);

/// All points of PG(2,q) where the form vanishes.
std::vector<Vec> zero_locus(const TernaryForm& g, const FieldCtx& f);

/// Geometric 4-way classification from the zero locus Z:
///   |Z| = 2q+1                -> RealPair
///   |Z| = 1                   -> ImaginaryPair
///   |Z| = q+1, collinear      -> DoubleLine
///   |Z| = q+1, not collinear  -> NonSingular
/// Any other cardinality throws (it would mean a broken invariant).
ConicType classify_conic(const TernaryForm& g, const FieldCtx& f);

/// Scales so the first nonzero coefficient is 1.
TernaryForm canonical_form(TernaryForm g, const FieldCtx& f);

/// The delta pairing: a point of the dual PG(5,q) and a ternary form
/// share the same coordinate 6-tuple.
TernaryForm point_to_form(const Vec& dual_point);
Vec form_to_vec(const TernaryForm& g);

/// Six comma-separated element literals in the fixed coefficient order.
TernaryForm parse_form(const std::string& text, const FieldCtx& f);
std::string form_to_string(const TernaryForm& g);

}  // namespace vrc
