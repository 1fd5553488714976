#include "verocensus/systems.hpp"

#include <stdexcept>

#include <json.hpp>

namespace vrc {

LinearSystem make_system(const std::vector<TernaryForm>& gens,
                         const FieldCtx& f) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  std::vector<Vec> rows;
  rows.reserve(gens.size());
  for (const TernaryForm& g : gens) rows.push_back(form_to_vec(g));
  const Subspace s = subspace_from_rows(rows, f, /*require_independent=*/true);
  if (s.dim() >= 5)
    throw std::invalid_argument("trivial system: generators span everything");
  return LinearSystem{gens, s, s.dim()};
}

std::vector<TernaryForm> members(const Subspace& dual_span,
                                 const FieldCtx& f) {
  std::vector<TernaryForm> out;
  for (const Vec& v : points_of(dual_span, f)) out.push_back(point_to_form(v));
  return out;
}

namespace {

std::array<long long, 4> census_of_members(const Subspace& dual_span,
                                           const FieldCtx& f) {
  std::array<long long, 4> od{0, 0, 0, 0};
  for (const Vec& v : points_of(dual_span, f)) {
    const ConicType t = classify_conic(point_to_form(v), f);
    ++od[static_cast<int>(hyp_orbit_of_conic_type(t))];
  }
  return od;
}

Subspace annihilator(const Mat& rows, const FieldCtx& f) {
  const Mat ns = nullspace(rows, f);
  std::vector<Vec> basis;
  for (int r = 0; r < ns.rows; ++r) {
    Vec v(ns.cols);
    for (int c = 0; c < ns.cols; ++c) v[c] = ns.at(r, c);
    basis.push_back(v);
  }
  return subspace_from_rows(basis, f);
}

}  // namespace

std::array<long long, 4> od4_of_dual_span(const Subspace& dual_span,
                                          const FieldCtx& f) {
  return census_of_members(dual_span, f);
}

std::array<long long, 4> od4_of_point(const Vec& y, const FieldCtx& f) {
  if (y.size() != 6 || is_zero_vec(y))
    throw std::invalid_argument("expect a nonzero point of PG(5,q)");
  Mat row(0, 6);
  row.append_row(y);
  return census_of_members(annihilator(row, f), f);
}

std::array<long long, 4> od4_of_line(const Subspace& line, const FieldCtx& f) {
  if (line.dim() != 1 || line.ambient_dim() != 5)
    throw std::invalid_argument("expect a line of PG(5,q)");
  return census_of_members(annihilator(line.basis, f), f);
}

SquabInvariants squab_invariants(const Vec& y, const FieldCtx& f) {
  const long long q = f.q();
  SquabInvariants s;
  s.rank = point_rank(y, f);
  const auto od4 = od4_of_point(y, f);
  s.double_lines = od4[0];
  s.nonsingular = od4[3];
  const long long q4 = q * q * q * q;
  s.nonsingular_clause =
      s.nonsingular == (s.rank == 3 ? q4 : q4 - q * q);
  s.double_line_clause = (s.rank == 2) || s.double_lines == q + 1;
  return s;
}

bool WebProfile::all_checks_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

WebProfile web_profile(const std::array<TernaryForm, 4>& gens,
                       const FieldCtx& f) {
  const long long q = f.q();
  std::vector<Vec> rows;
  for (const TernaryForm& g : gens) rows.push_back(form_to_vec(g));
  const Subspace dual_span =
      subspace_from_rows(rows, f, /*require_independent=*/true);
  const Subspace line = annihilator(dual_span.basis, f);

  WebProfile w;
  w.label = classify_line(line, f);
  w.od0 = point_od(line, f);
  w.od4 = census_of_members(dual_span, f);
  w.cubic_points = count_points(discriminant_cubic(gens, f), f);
  w.secant_points = w.od0[0] + w.od0[1] + w.od0[2];

  const long long od4_sum = w.od4[0] + w.od4[1] + w.od4[2] + w.od4[3];
  w.checks.emplace_back("od4_sums_to_web_size",
                        od4_sum == q * q * q + q * q + q + 1);
  w.checks.emplace_back("cubic_counts_singular_members",
                        w.cubic_points == w.od4[0] + w.od4[1] + w.od4[2]);
  w.checks.emplace_back(
      "cubic_secant_link",
      w.cubic_points == q * q + w.secant_points * q + 1);
  w.checks.emplace_back("od0_matches_label",
                        od0_formula(w.label, q) == w.od0);
  return w;
}

std::string web_profile_to_json(const WebProfile& w, const FieldCtx& f) {
  nlohmann::json j;
  j["q"] = f.q();
  j["parity"] = f.even() ? "even" : "odd";
  j["object"] = "web";
  j["label"] = to_string(w.label);
  j["od0"] = w.od0;
  j["od4"] = w.od4;
  j["cubic_points"] = w.cubic_points;
  j["secant_points"] = w.secant_points;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& [name, ok] : w.checks)
    checks.push_back({{"name", name}, {"pass", ok}});
  j["checks"] = checks;
  return j.dump(2);
}

std::array<TernaryForm, 4> representative_web(LineOrbit o, const RepParams& rp,
                                              const FieldCtx& f) {
  if (!line_orbit_valid(o, f.even()))
    throw std::invalid_argument(to_string(o) + " undefined for q = " +
                                std::to_string(f.q()));
  const Fel m1 = f.neg(1);
  auto form = [](std::array<Fel, 6> c) {
    TernaryForm g;
    g.c = c;
    return g;
  };
  const TernaryForm X0X1 = form({0, 1, 0, 0, 0, 0});
  const TernaryForm X0X2 = form({0, 0, 1, 0, 0, 0});
  const TernaryForm X1X2 = form({0, 0, 0, 0, 1, 0});
  const TernaryForm X0sq = form({1, 0, 0, 0, 0, 0});
  const TernaryForm X1sq = form({0, 0, 0, 1, 0, 0});
  const TernaryForm X2sq = form({0, 0, 0, 0, 0, 1});
  switch (o) {
    case LineOrbit::o5:
      return {X0X1, X0X2, X1X2, X2sq};
    case LineOrbit::o6:
      return {X0X2, X1sq, X1X2, X2sq};
    case LineOrbit::o8_1:  // (X0X1, X0X2, X1X2, X1^2+X2^2)
      return {X0X1, X0X2, X1X2, form({0, 0, 0, 1, 0, 1})};
    case LineOrbit::o8_2:  // (X0X1, X0X2, X1X2, delta*X1^2+X2^2)
      return {X0X1, X0X2, X1X2, form({0, 0, 0, rp.delta, 0, 1})};
    case LineOrbit::o8_3:
      return {X0X1, X0X2, X1sq, X2sq};
    case LineOrbit::o9:  // (X0X1, X0X2-X1^2, X1X2, X2^2)
      return {X0X1, form({0, 0, 1, m1, 0, 0}), X1X2, X2sq};
    case LineOrbit::o10:  // (v0^-1 X0^2 + u0 X0X1 - X1^2, X0X2, X1X2, X2^2)
      return {form({f.inv(rp.v0), rp.u0, 0, m1, 0, 0}), X0X2, X1X2, X2sq};
    case LineOrbit::o12_1:
      return {X0sq, X0X2, X1sq, X2sq};
    case LineOrbit::o12_3:  // (X0^2, X0X2, X0X1+X1X2+X1^2, X2^2)
      return {X0sq, X0X2, form({0, 1, 0, 1, 1, 0}), X2sq};
    case LineOrbit::o13_1:  // (X0^2, X0X2, X1^2+X2^2, X1X2)
      return {X0sq, X0X2, form({0, 0, 0, 1, 0, 1}), X1X2};
    case LineOrbit::o13_2:
      return {X0sq, X0X2, form({0, 0, 0, rp.delta, 0, 1}), X1X2};
    case LineOrbit::o13_3:  // (X0^2, X0X2, X0X1+X1^2+X2^2, X1X2)
      return {X0sq, X0X2, form({0, 1, 0, 1, 0, 1}), X1X2};
    case LineOrbit::o14_1:  // (X0X1, X0X2, X0^2+X1^2+X2^2, X1X2)
      return {X0X1, X0X2, form({1, 0, 0, 1, 0, 1}), X1X2};
    case LineOrbit::o14_2:  // (X0X1, X0X2, delta*X0^2+X1^2+delta*X2^2, X1X2)
      return {X0X1, X0X2, form({rp.delta, 0, 0, 1, 0, rp.delta}), X1X2};
    case LineOrbit::o15_1:
      // (X0X2, X1X2, X0X1-X2^2, v1^-1 X0^2 + u1 X0X1 - X1^2)
      return {X0X2, X1X2, form({0, 1, 0, 0, 0, m1}),
              form({f.inv(rp.v1), rp.u1, 0, m1, 0, 0})};
    case LineOrbit::o15_2:
      return {X0X2, X1X2, form({0, 1, 0, 0, 0, m1}),
              form({f.inv(rp.v2), rp.u2, 0, m1, 0, 0})};
    case LineOrbit::o16_1:  // (X0^2, X0X1, X0X2-X1^2, X2^2)
      return {X0sq, X0X1, form({0, 0, 1, m1, 0, 0}), X2sq};
    case LineOrbit::o16_3:  // (X0^2, X0X1, X0X2+X1^2, X1X2+X2^2)
      return {X0sq, X0X1, form({0, 0, 1, 1, 0, 0}), form({0, 0, 0, 0, 1, 1})};
    case LineOrbit::o17:
      // (X0X2, X0X1-X2^2, alpha X0^2 - X1X2, beta X0X1 - X1^2 - gamma X1X2)
      return {X0X2, form({0, 1, 0, 0, 0, m1}),
              form({rp.alpha, 0, 0, 0, m1, 0}),
              form({0, rp.beta, 0, m1, f.neg(rp.gamma), 0})};
  }
  throw std::logic_error("bad line orbit");
}

std::vector<long long> od1_of_hyperplane(const Vec& dual_coords,
                                         const FieldCtx& f) {
  const Subspace h = hyperplane_from_dual(dual_coords, f);
  const auto& labels = line_orbit_labels(f.even());
  std::vector<long long> od(labels.size(), 0);
  for_each_line(h, f, [&](const Subspace& l) {
    ++od[line_orbit_index(classify_line(l, f), f.even())];
  });
  return od;
}

Vec representative_hyperplane(HypOrbit h, const FieldCtx& f) {
  Vec found;
  for (const Vec& a : enumerate_points(5, f)) {
    if (classify_hyperplane_dual(a, f) == h) {
      found = a;
      break;
    }
  }
  if (found.empty()) throw std::logic_error("no hyperplane of that orbit");
  return found;
}

bool flag_count_check(LineOrbit o, HypOrbit hj, const FieldCtx& f) {
  const RepParams rp = find_rep_params(f);
  const Subspace rep = representative_line(o, rp, f);
  const long long h_j = od4_of_line(rep, f)[static_cast<int>(hj)];
  const long long orbit_size = orbit_sizes_lines(f).at(o);
  const long long hyp_size =
      orbit_sizes_hyperplanes(f)[static_cast<int>(hj)];
  const Vec hrep = representative_hyperplane(hj, f);
  const long long per_hyperplane =
      od1_of_hyperplane(hrep, f)[line_orbit_index(o, f.even())];
  return orbit_size * h_j == hyp_size * per_hyperplane;
}

}  // namespace vrc
