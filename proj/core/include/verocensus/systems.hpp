#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "verocensus/conics.hpp"
#include "verocensus/cubic.hpp"
#include "verocensus/gf.hpp"
#include "verocensus/lineclass.hpp"
#include "verocensus/pglinalg.hpp"
#include "verocensus/veronese.hpp"

namespace vrc {

/// A non-trivial linear system of conics: a projective subspace of the
/// form space, dimension 1 (pencil) up to 4 (squab).
struct LinearSystem {
  std::vector<TernaryForm> gens;  // linearly independent
  Subspace dual_subspace;         // their span on dual coordinates
  int dim = 0;                    // projective dimension
};

/// Builds a system from generators.  Dependent generator lists are
/// rejected rather than reduced, and so are trivial systems.
LinearSystem make_system(const std::vector<TernaryForm>& gens,
                         const FieldCtx& f);

/// All (q^(dim+1)-1)/(q-1) member forms of a system spanned by the rows
/// of a dual-coordinate subspace.
std::vector<TernaryForm> members(const Subspace& dual_span, const FieldCtx& f);

/// Hyperplane-orbit distribution of a point: one count per hyperplane
/// orbit through it, order [H1, H2r, H2i, H3].  Equals the per-type
/// conic census of the squab dual to the point.
std::array<long long, 4> od4_of_point(const Vec& y, const FieldCtx& f);

/// Hyperplane-orbit distribution of a line (= conic census of its web).
std::array<long long, 4> od4_of_line(const Subspace& line, const FieldCtx& f);

/// Conic-type census over an explicit dual subspace of forms.
std::array<long long, 4> od4_of_dual_span(const Subspace& dual_span,
                                          const FieldCtx& f);

struct SquabInvariants {
  int rank = 0;
  long long double_lines = 0;  // h1
  long long nonsingular = 0;   // h3
  bool nonsingular_clause = false;  // h3 == q^4 - q^2 unless rank 3 (then q^4)
  bool double_line_clause = false;  // h1 == q + 1 unless rank 2
};
SquabInvariants squab_invariants(const Vec& y, const FieldCtx& f);

struct WebProfile {
  LineOrbit label;
  std::array<long long, 4> od0;
  std::array<long long, 4> od4;
  long long cubic_points = 0;
  long long secant_points = 0;  // rank <= 2 points on the dual line
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_pass() const;
};

/// Full profile of the web spanned by four independent forms.
WebProfile web_profile(const std::array<TernaryForm, 4>& gens,
                       const FieldCtx& f);

std::string web_profile_to_json(const WebProfile& w, const FieldCtx& f);

/// The representative web of a line orbit (the tabulated generator
/// 4-tuple; parameters fill the parameterized rows).
std::array<TernaryForm, 4> representative_web(LineOrbit o, const RepParams& rp,
                                              const FieldCtx& f);

/// Line-orbit distribution of a hyperplane: counts of the 15 line
/// orbits over every line inside it, parity reporting order.
std::vector<long long> od1_of_hyperplane(const Vec& dual_coords,
                                         const FieldCtx& f);

/// First hyperplane of each orbit in the dual enumeration order.
Vec representative_hyperplane(HypOrbit h, const FieldCtx& f);

/// Incidence identity |o_i| * h_j(o_i) == |H_j| * (lines of type o_i in
/// a fixed member of H_j); all four quantities computed independently.
bool flag_count_check(LineOrbit o, HypOrbit hj, const FieldCtx& f);

}  // namespace vrc
