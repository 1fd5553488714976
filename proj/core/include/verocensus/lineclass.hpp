#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "verocensus/gf.hpp"
#include "verocensus/pglinalg.hpp"
#include "verocensus/veronese.hpp"

namespace vrc {

/// The K-orbits of lines of PG(5,q).  Fifteen are valid per parity:
/// o8_2, o13_2, o14_2, o15_2 exist only for odd q; o8_3, o12_3, o13_3,
/// o16_3 only for even q; the rest for both.
enum class LineOrbit {
  o5, o6, o8_1, o8_2, o8_3, o9, o10, o12_1, o12_3, o13_1, o13_2, o13_3,
  o14_1, o14_2, o15_1, o15_2, o16_1, o16_3, o17
};

std::string to_string(LineOrbit o);
LineOrbit line_orbit_from_string(const std::string& name);

/// The 15 valid labels for the parity, in the fixed reporting order.
const std::vector<LineOrbit>& line_orbit_labels(bool even);
bool line_orbit_valid(LineOrbit o, bool even);
int line_orbit_index(LineOrbit o, bool even);

/// Parameters for the representative lines and solids.  Each (u,v) pair
/// makes v*l^2 + u*v*l - 1 root-free over GF(q) with v != 0; for odd q,
/// -v1 is a nonzero square, -v2 and delta are non-squares; the cubic
/// l^3 + gamma*l^2 - beta*l + alpha is root-free.  The three (u,v)
/// pairs are searched independently (a single shared u does not exist
/// for every q; q = 3 has none).
struct RepParams {
  Fel u0 = 0, v0 = 0;
  Fel u1 = 0, v1 = 0;
  Fel u2 = 0, v2 = 0;  // odd q only
  Fel alpha = 0, beta = 0, gamma = 0;
  Fel delta = 0;  // odd q only
};

/// Deterministic first-hit search in element encoding order.
RepParams find_rep_params(const FieldCtx& f);

/// The representative line of an orbit (canonical Subspace).
/// Throws for a label invalid at this parity.
Subspace representative_line(LineOrbit o, const RepParams& rp,
                             const FieldCtx& f);

/// The solid of points trace-orthogonal to a line (q odd): for each
/// generator g, the points y with Tr(M_y M_g) = 0.  This polarity sends
/// a line to a solid whose point-orbit distribution equals the line's
/// hyperplane-orbit distribution, cell for cell.
Subspace polar_solid_of_line(const Subspace& line, const FieldCtx& f);

/// The representative solid of the same-named orbit, q odd: the polar
/// of the representative line.
Subspace representative_solid(LineOrbit o, const RepParams& rp,
                              const FieldCtx& f);

/// The tabulated matrix family for the same orbit, q odd.  For most
/// labels this coincides with the polar representative up to K; the two
/// parameterized families o15_1 and o17 drift into other orbits for
/// some q (q = 5 among them), so representative_solid is authoritative.
Subspace tabulated_solid(LineOrbit o, const RepParams& rp, const FieldCtx& f);

/// Point-orbit distribution OD0 of a line: counts of its q+1 points per
/// point orbit, in reporting order.
std::array<long long, 4> point_od(const Subspace& line, const FieldCtx& f);

/// OD0 of any subspace (used for solids as well).
std::array<long long, 4> point_od_subspace(const Subspace& s,
                                           const FieldCtx& f);

/// The tabulated OD0 of an orbit as a function of q.
std::array<long long, 4> od0_formula(LineOrbit o, long long q);

/// Full 15-way classification.  OD0 separates the orbits except for
/// {o15_1, o16_1} (odd) and {o15_1, o16_3} (even), split by whether the
/// H1-hyperplane over the conic plane of the unique rank-2 point
/// contains the line; and, only at q = 2, {o10, o14_1}, split by
/// whether the line's matrices share a kernel vector.
LineOrbit classify_line(const Subspace& line, const FieldCtx& f);

/// Exhaustive classification of every line of PG(5,q).
std::map<LineOrbit, long long> orbit_sizes_lines(const FieldCtx& f);

}  // namespace vrc
