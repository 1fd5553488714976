#pragma once

#include <array>
#include <string>
#include <vector>

#include "verocensus/conics.hpp"
#include "verocensus/gf.hpp"
#include "verocensus/pglinalg.hpp"

namespace vrc {

// A point of PG(5,q) with coordinates (y0,...,y5) is read as the
// symmetric 3x3 matrix
//     [ y0 y1 y2 ]
//     [ y1 y3 y4 ]
//     [ y2 y4 y5 ]
// and its rank is the rank of that matrix.  The rank-1 points form the
// Veronese surface.  K below always means the lift of PGL(3,q) acting by
// congruence M -> A M A^T.

/// K-orbits of points.  P2e/P2i exist for odd q, P2n/P2s for even q.
enum class PointOrbit { P1, P2e, P2i, P3, P2n, P2s };

/// K-orbits of hyperplanes, in the fixed reporting order.
enum class HypOrbit { H1, H2r, H2i, H3 };

std::string to_string(PointOrbit o);
std::string to_string(HypOrbit o);

/// The four point-orbit labels in reporting order for the given parity:
/// odd [P1, P2e, P2i, P3], even [P1, P2n, P2s, P3].
std::array<PointOrbit, 4> point_orbit_labels(bool even);
int point_orbit_index(PointOrbit o, bool even);

constexpr std::array<HypOrbit, 4> kHypOrbits{HypOrbit::H1, HypOrbit::H2r,
                                             HypOrbit::H2i, HypOrbit::H3};

/// Conic types and hyperplane orbits correspond 1:1 through delta.
HypOrbit hyp_orbit_of_conic_type(ConicType t);

/// (u0,u1,u2) -> (u0^2, u0u1, u0u2, u1^2, u1u2, u2^2).
Vec veronese_map(const Vec& p, const FieldCtx& f);

/// Preimage of a rank-1 point under the Veronese map.
Vec veronese_preimage(const Vec& y, const FieldCtx& f);

Mat sym_matrix_of(const Vec& y);
Vec sym_matrix_to_vec(const Mat& m);

int point_rank(const Vec& y, const FieldCtx& f);

/// Negated principal 2x2 minors (-m11, -m22, -m33) of the symmetric
/// matrix of y; the exterior/interior test for odd q reads off these.
std::array<Fel, 3> neg_principal_minors(const Vec& y, const FieldCtx& f);

PointOrbit classify_point(const Vec& y, const FieldCtx& f);

/// Closed-form orbit sizes in reporting order.
std::array<long long, 4> orbit_sizes_points(const FieldCtx& f);
std::array<long long, 4> orbit_sizes_hyperplanes(const FieldCtx& f);

/// The unique conic plane through a rank-2 point: the line l of PG(2,q)
/// with the point in span(nu(l)), plus that span.  Brute force over the
/// q^2+q+1 lines; throws unless exactly one candidate matches.
struct ConicPlane {
  Subspace pg2_line;  // line of PG(2,q), a dim-1 subspace on 3 coords
  Subspace plane;     // its conic plane in PG(5,q)
};
ConicPlane conic_plane_of(const Vec& y, const FieldCtx& f);

/// Dual coordinates of the line of PG(2,q) (the linear form vanishing
/// on it).
Vec pg2_line_dual(const Subspace& pg2_line, const FieldCtx& f);

/// Square of a linear form l0X0+l1X1+l2X2 as a TernaryForm.
TernaryForm square_of_linear(const Vec& l, const FieldCtx& f);

/// delta: conic with coefficients (a00,...,a22) -> hyperplane
/// Z(a00 Y0 + ... + a22 Y5).  Bijective between conics and hyperplanes.
Subspace delta(const TernaryForm& g, const FieldCtx& f);

/// Dual coordinate vector of a hyperplane given as a Subspace.
Vec hyperplane_dual_coords(const Subspace& h, const FieldCtx& f);

/// Hyperplane from its dual coordinate vector.
Subspace hyperplane_from_dual(const Vec& a, const FieldCtx& f);

/// Orbit of a hyperplane = conic type of its delta-preimage.
HypOrbit classify_hyperplane_dual(const Vec& dual_coords, const FieldCtx& f);
HypOrbit classify_hyperplane(const Subspace& h, const FieldCtx& f);

/// The nucleus plane Z(Y0,Y3,Y5) (even q): zero-main-diagonal matrices.
Subspace nucleus_plane(const FieldCtx& f);

}  // namespace vrc
