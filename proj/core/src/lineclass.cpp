#include "verocensus/lineclass.hpp"

#include <stdexcept>

namespace vrc {
namespace {

struct LabelName {
  LineOrbit o;
  const char* name;
};

constexpr LabelName kNames[] = {
    {LineOrbit::o5, "o5"},       {LineOrbit::o6, "o6"},
    {LineOrbit::o8_1, "o8_1"},   {LineOrbit::o8_2, "o8_2"},
    {LineOrbit::o8_3, "o8_3"},   {LineOrbit::o9, "o9"},
    {LineOrbit::o10, "o10"},     {LineOrbit::o12_1, "o12_1"},
    {LineOrbit::o12_3, "o12_3"}, {LineOrbit::o13_1, "o13_1"},
    {LineOrbit::o13_2, "o13_2"}, {LineOrbit::o13_3, "o13_3"},
    {LineOrbit::o14_1, "o14_1"}, {LineOrbit::o14_2, "o14_2"},
    {LineOrbit::o15_1, "o15_1"}, {LineOrbit::o15_2, "o15_2"},
    {LineOrbit::o16_1, "o16_1"}, {LineOrbit::o16_3, "o16_3"},
    {LineOrbit::o17, "o17"}};

// Root-free nonzero v: v*l^2 + u*v*l - 1 != 0 for every l.
bool anisotropic_pair(const FieldCtx& f, Fel u, Fel v) {
  if (v == 0) return false;
  for (Fel l = 0; l < f.q(); ++l) {
    const Fel t = f.sub(f.add(f.mul(v, f.mul(l, l)), f.mul(f.mul(u, v), l)),
                        Fel{1});
    if (t == 0) return false;
  }
  return true;
}

bool cubic_root_free(const FieldCtx& f, Fel a, Fel b, Fel g) {
  for (Fel l = 0; l < f.q(); ++l) {
    const Fel l2 = f.mul(l, l);
    Fel t = f.mul(l, l2);
    t = f.add(t, f.mul(g, l2));
    t = f.sub(t, f.mul(b, l));
    t = f.add(t, a);
    if (t == 0) return false;
  }
  return true;
}

enum class SignCond { Any, NegIsSquare, NegIsNonSquare };

std::pair<Fel, Fel> find_uv(const FieldCtx& f, SignCond cond) {
  for (Fel u = 0; u < f.q(); ++u)
    for (Fel v = 1; v < f.q(); ++v) {
      if (cond == SignCond::NegIsSquare && !f.is_square(f.neg(v))) continue;
      if (cond == SignCond::NegIsNonSquare && f.is_square(f.neg(v))) continue;
      if (anisotropic_pair(f, u, v)) return {u, v};
    }
  throw std::logic_error("no (u,v) pair found; field tables are broken");
}

Vec e6(int i, Fel x = 1) {
  Vec v(6, 0);
  v[i] = x;
  return v;
}

}  // namespace

std::string to_string(LineOrbit o) {
  for (const auto& n : kNames)
    if (n.o == o) return n.name;
  return "?";
}

LineOrbit line_orbit_from_string(const std::string& name) {
  for (const auto& n : kNames)
    if (name == n.name) return n.o;
  throw std::invalid_argument("unknown line orbit " + name);
}

const std::vector<LineOrbit>& line_orbit_labels(bool even) {
  static const std::vector<LineOrbit> odd{
      LineOrbit::o5,    LineOrbit::o6,    LineOrbit::o8_1, LineOrbit::o8_2,
      LineOrbit::o9,    LineOrbit::o10,   LineOrbit::o12_1, LineOrbit::o13_1,
      LineOrbit::o13_2, LineOrbit::o14_1, LineOrbit::o14_2, LineOrbit::o15_1,
      LineOrbit::o15_2, LineOrbit::o16_1, LineOrbit::o17};
  static const std::vector<LineOrbit> evn{
      LineOrbit::o5,    LineOrbit::o6,    LineOrbit::o8_1, LineOrbit::o8_3,
      LineOrbit::o9,    LineOrbit::o10,   LineOrbit::o12_1, LineOrbit::o12_3,
      LineOrbit::o13_1, LineOrbit::o13_3, LineOrbit::o14_1, LineOrbit::o15_1,
      LineOrbit::o16_1, LineOrbit::o16_3, LineOrbit::o17};
  return even ? evn : odd;
}

bool line_orbit_valid(LineOrbit o, bool even) {
  for (const LineOrbit l : line_orbit_labels(even))
    if (l == o) return true;
  return false;
}

int line_orbit_index(LineOrbit o, bool even) {
  const auto& labels = line_orbit_labels(even);
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == o) return static_cast<int>(i);
  throw std::invalid_argument(to_string(o) + " is not valid for this parity");
}

RepParams find_rep_params(const FieldCtx& f) {
  RepParams rp;
  std::tie(rp.u0, rp.v0) = find_uv(f, SignCond::Any);
  if (f.even()) {
    std::tie(rp.u1, rp.v1) = find_uv(f, SignCond::Any);
  } else {
    std::tie(rp.u1, rp.v1) = find_uv(f, SignCond::NegIsSquare);
    std::tie(rp.u2, rp.v2) = find_uv(f, SignCond::NegIsNonSquare);
    for (Fel d = 1; d < f.q(); ++d)
      if (!f.is_square(d)) {
        rp.delta = d;
        break;
      }
  }
  for (Fel a = 0; a < f.q() && rp.alpha == 0; ++a)
    for (Fel b = 0; b < f.q() && rp.alpha == 0; ++b)
      for (Fel g = 0; g < f.q(); ++g)
        if (cubic_root_free(f, a, b, g)) {
          rp.alpha = a;
          rp.beta = b;
          rp.gamma = g;
          break;
        }
  if (rp.alpha == 0)
    throw std::logic_error("no root-free cubic found; field tables broken");
  return rp;
}

Subspace representative_line(LineOrbit o, const RepParams& rp,
                             const FieldCtx& f) {
  if (!line_orbit_valid(o, f.even()))
    throw std::invalid_argument(to_string(o) + " undefined for q = " +
                                std::to_string(f.q()));
  const Fel m1 = f.neg(1);
  Vec gx, gy;
  switch (o) {
    case LineOrbit::o5:  // diag(x, y, 0)
      gx = e6(0); gy = e6(3);
      break;
    case LineOrbit::o6:  // [x y . / y . . / . . .]
      gx = e6(0); gy = e6(1);
      break;
    case LineOrbit::o8_1:  // diag(x, y, -y)
      gx = e6(0); gy = {0, 0, 0, 1, 0, m1};
      break;
    case LineOrbit::o8_2:  // diag(x, y, -delta*y)
      gx = e6(0); gy = {0, 0, 0, 1, 0, f.neg(rp.delta)};
      break;
    case LineOrbit::o8_3:  // [x . . / . . y / . y .]
      gx = e6(0); gy = e6(4);
      break;
    case LineOrbit::o9:  // [x . y / . y . / y . .]
      gx = e6(0); gy = {0, 0, 1, 1, 0, 0};
      break;
    case LineOrbit::o10:  // [v0x y . / y x+u0y . / . . .]
      gx = {rp.v0, 0, 0, 1, 0, 0}; gy = {0, 1, 0, rp.u0, 0, 0};
      break;
    case LineOrbit::o12_1:  // [. x . / x . y / . y .]
      gx = e6(1); gy = e6(4);
      break;
    case LineOrbit::o12_3:  // [. x . / x x+y y / . y .]
      gx = {0, 1, 0, 1, 0, 0}; gy = {0, 0, 0, 1, 1, 0};
      break;
    case LineOrbit::o13_1:  // [. x . / x y . / . . -y]
      gx = e6(1); gy = {0, 0, 0, 1, 0, m1};
      break;
    case LineOrbit::o13_2:  // [. x . / x y . / . . -delta*y]
      gx = e6(1); gy = {0, 0, 0, 1, 0, f.neg(rp.delta)};
      break;
    case LineOrbit::o13_3:  // [. x . / x x+y . / . . y]
      gx = {0, 1, 0, 1, 0, 0}; gy = {0, 0, 0, 1, 0, 1};
      break;
    case LineOrbit::o14_1:  // diag(x, -(x+y), y)
      gx = {1, 0, 0, m1, 0, 0}; gy = {0, 0, 0, m1, 0, 1};
      break;
    case LineOrbit::o14_2:  // diag(x, -delta*(x+y), y)
      gx = {1, 0, 0, f.neg(rp.delta), 0, 0};
      gy = {0, 0, 0, f.neg(rp.delta), 0, 1};
      break;
    case LineOrbit::o15_1:  // [v1y x . / x u1x+y . / . . x]
      gx = {0, 1, 0, rp.u1, 0, 1}; gy = {rp.v1, 0, 0, 1, 0, 0};
      break;
    case LineOrbit::o15_2:
      gx = {0, 1, 0, rp.u2, 0, 1}; gy = {rp.v2, 0, 0, 1, 0, 0};
      break;
    case LineOrbit::o16_1:  // [. . x / . x y / x y .]
      gx = {0, 0, 1, 1, 0, 0}; gy = e6(4);
      break;
    case LineOrbit::o16_3:  // [. . x / . x y / x y y]
      gx = {0, 0, 1, 1, 0, 0}; gy = {0, 0, 0, 0, 1, 1};
      break;
    case LineOrbit::o17:  // [a^-1 x y . / y by-gx x / . x y]
      gx = {f.inv(rp.alpha), 0, 0, f.neg(rp.gamma), 1, 0};
      gy = {0, 1, 0, rp.beta, 0, 1};
      break;
  }
  return subspace_from_rows({gx, gy}, f, /*require_independent=*/true);
}

Subspace polar_solid_of_line(const Subspace& line, const FieldCtx& f) {
  if (f.even())
    throw std::invalid_argument("the trace polarity needs odd q");
  if (line.dim() != 1 || line.ambient_dim() != 5)
    throw std::invalid_argument("expect a line of PG(5,q)");
  // Tr(M_y M_g) doubles the off-diagonal products.
  const Fel two = f.from_int(2);
  Mat rows(0, 6);
  for (int r = 0; r < 2; ++r) {
    Vec w(6);
    for (int c = 0; c < 6; ++c) w[c] = line.basis.at(r, c);
    w[1] = f.mul(two, w[1]);
    w[2] = f.mul(two, w[2]);
    w[4] = f.mul(two, w[4]);
    rows.append_row(w);
  }
  const Mat ns = nullspace(rows, f);
  std::vector<Vec> basis;
  for (int r = 0; r < ns.rows; ++r) {
    Vec v(6);
    for (int c = 0; c < 6; ++c) v[c] = ns.at(r, c);
    basis.push_back(v);
  }
  return subspace_from_rows(basis, f);
}

Subspace representative_solid(LineOrbit o, const RepParams& rp,
                              const FieldCtx& f) {
  return polar_solid_of_line(representative_line(o, rp, f), f);
}

Subspace tabulated_solid(LineOrbit o, const RepParams& rp,
                         const FieldCtx& f) {
  if (f.even())
    throw std::invalid_argument("solid representatives are tabulated for odd q");
  if (!line_orbit_valid(o, /*even=*/false))
    throw std::invalid_argument(to_string(o) + " undefined for odd q");
  const Fel m1 = f.neg(1);
  std::vector<Vec> g;
  switch (o) {
    case LineOrbit::o5:  // [. x y / x . z / y z t]
      g = {e6(1), e6(2), e6(4), e6(5)};
      break;
    case LineOrbit::o6:  // [. . x / . y z / x z t]
      g = {e6(2), e6(3), e6(4), e6(5)};
      break;
    case LineOrbit::o8_1:  // [. x y / x z t / y t z]
      g = {e6(1), e6(2), {0, 0, 0, 1, 0, 1}, e6(4)};
      break;
    case LineOrbit::o8_2:  // [. x y / x delta*z t / y t z]
      g = {e6(1), e6(2), {0, 0, 0, rp.delta, 0, 1}, e6(4)};
      break;
    case LineOrbit::o9:  // [. x y / x -y z / y z t]
      g = {e6(1), {0, 0, 1, m1, 0, 0}, e6(4), e6(5)};
      break;
    case LineOrbit::o10:  // [x u0v0x y / u0v0x -v0x z / y z t]
      g = {{1, f.mul(rp.u0, rp.v0), 0, f.neg(rp.v0), 0, 0}, e6(2), e6(4),
           e6(5)};
      break;
    case LineOrbit::o12_1:  // [x . y / . z . / y . t]
      g = {e6(0), e6(2), e6(3), e6(5)};
      break;
    case LineOrbit::o13_1:  // [x . y / . z t / y t z]
      g = {e6(0), e6(2), {0, 0, 0, 1, 0, 1}, e6(4)};
      break;
    case LineOrbit::o13_2:  // [x . y / . delta*z t / y t z]
      g = {e6(0), e6(2), {0, 0, 0, rp.delta, 0, 1}, e6(4)};
      break;
    case LineOrbit::o14_1:  // [x y z / y x t / z t x]
      g = {{1, 0, 0, 1, 0, 1}, e6(1), e6(2), e6(4)};
      break;
    case LineOrbit::o14_2:  // [delta*x y z / y x t / z t delta*x]
      g = {{rp.delta, 0, 0, 1, 0, rp.delta}, e6(1), e6(2), e6(4)};
      break;
    case LineOrbit::o15_1:  // [x y z / y -v1x t / z t -y+u1v1x]
      g = {{1, 0, 0, f.neg(rp.v1), 0, f.mul(rp.u1, rp.v1)},
           {0, 1, 0, 0, 0, m1},
           e6(2),
           e6(4)};
      break;
    case LineOrbit::o15_2:
      g = {{1, 0, 0, f.neg(rp.v2), 0, f.mul(rp.u2, rp.v2)},
           {0, 1, 0, 0, 0, m1},
           e6(2),
           e6(4)};
      break;
    case LineOrbit::o16_1:  // [x y z / y -z . / z . t]
      g = {e6(0), e6(1), {0, 0, 1, m1, 0, 0}, e6(5)};
      break;
    case LineOrbit::o17:  // [ag*z-a*t x y / x z t / y t -x-b*z]
      g = {{0, 1, 0, 0, 0, m1},
           e6(2),
           {f.mul(rp.alpha, rp.gamma), 0, 0, 1, 0, f.neg(rp.beta)},
           {f.neg(rp.alpha), 0, 0, 0, 1, 0}};
      break;
    default:
      throw std::invalid_argument("no tabulated solid for " + to_string(o));
  }
  return subspace_from_rows(g, f, /*require_independent=*/true);
}

std::array<long long, 4> point_od_subspace(const Subspace& s,
                                           const FieldCtx& f) {
  std::array<long long, 4> od{0, 0, 0, 0};
  for (const Vec& p : points_of(s, f))
    ++od[point_orbit_index(classify_point(p, f), f.even())];
  return od;
}

std::array<long long, 4> point_od(const Subspace& line, const FieldCtx& f) {
  if (line.dim() != 1) throw std::invalid_argument("expect a line");
  return point_od_subspace(line, f);
}

std::array<long long, 4> od0_formula(LineOrbit o, long long q) {
  const bool even = (q % 2 == 0);
  switch (o) {
    case LineOrbit::o5:
      return even ? std::array<long long, 4>{2, 0, q - 1, 0}
                  : std::array<long long, 4>{2, (q - 1) / 2, (q - 1) / 2, 0};
    case LineOrbit::o6:
      return even ? std::array<long long, 4>{1, 1, q - 1, 0}
                  : std::array<long long, 4>{1, q, 0, 0};
    case LineOrbit::o8_1:
      return even ? std::array<long long, 4>{1, 0, 1, q - 1}
                  : std::array<long long, 4>{1, 1, 0, q - 1};
    case LineOrbit::o8_2:
      return {1, 0, 1, q - 1};
    case LineOrbit::o8_3:
      return {1, 1, 0, q - 1};
    case LineOrbit::o9:
      return {1, 0, 0, q};
    case LineOrbit::o10:
      return even ? std::array<long long, 4>{0, 0, q + 1, 0}
                  : std::array<long long, 4>{0, (q + 1) / 2, (q + 1) / 2, 0};
    case LineOrbit::o12_1:
      return {0, q + 1, 0, 0};
    case LineOrbit::o12_3:
      return {0, 1, q, 0};
    case LineOrbit::o13_1:
      return even ? std::array<long long, 4>{0, 1, 1, q - 1}
                  : std::array<long long, 4>{0, 2, 0, q - 1};
    case LineOrbit::o13_2:
      return {0, 1, 1, q - 1};
    case LineOrbit::o13_3:
      return {0, 0, 2, q - 1};
    case LineOrbit::o14_1:
      return even ? std::array<long long, 4>{0, 0, 3, q - 2}
                  : std::array<long long, 4>{0, 3, 0, q - 2};
    case LineOrbit::o14_2:
      return {0, 1, 2, q - 2};
    case LineOrbit::o15_1:
      return even ? std::array<long long, 4>{0, 0, 1, q}
                  : std::array<long long, 4>{0, 1, 0, q};
    case LineOrbit::o15_2:
      return {0, 0, 1, q};
    case LineOrbit::o16_1:
      return {0, 1, 0, q};
    case LineOrbit::o16_3:
      return {0, 0, 1, q};
    case LineOrbit::o17:
      return {0, 0, 0, q + 1};
  }
  throw std::logic_error("bad line orbit");
}

namespace {

// The one rank-2 point of a line whose OD0 has a single rank-2 entry.
Vec unique_rank2_point(const Subspace& line, const FieldCtx& f) {
  for (const Vec& p : points_of(line, f))
    if (point_rank(p, f) == 2) return p;
  throw std::logic_error("no rank-2 point on the line");
}

// Containment of the line in the H1-hyperplane lying over the conic
// plane of its unique rank-2 point.
bool h1_over_conic_plane_contains(const Subspace& line, const FieldCtx& f) {
  const Vec p = unique_rank2_point(line, f);
  const ConicPlane cp = conic_plane_of(p, f);
  const Vec l = pg2_line_dual(cp.pg2_line, f);
  const Vec a = form_to_vec(square_of_linear(l, f));
  for (int r = 0; r < line.basis.rows; ++r) {
    Fel dot = 0;
    for (int c = 0; c < 6; ++c)
      dot = f.add(dot, f.mul(a[c], line.basis.at(r, c)));
    if (dot != 0) return false;
  }
  return true;
}

// Shared kernel vector across the line's matrices (pencil kernel).
bool has_common_kernel(const Subspace& line, const FieldCtx& f) {
  Mat stacked(0, 3);
  for (int r = 0; r < line.basis.rows; ++r) {
    Vec y(6);
    for (int c = 0; c < 6; ++c) y[c] = line.basis.at(r, c);
    const Mat m = sym_matrix_of(y);
    for (int i = 0; i < 3; ++i)
      stacked.append_row({m.at(i, 0), m.at(i, 1), m.at(i, 2)});
  }
  return matrix_rank(stacked, f) < 3;
}

}  // namespace

LineOrbit classify_line(const Subspace& line, const FieldCtx& f) {
  if (line.dim() != 1 || line.ambient_dim() != 5)
    throw std::invalid_argument("expect a line of PG(5,q)");
  const std::array<long long, 4> od = point_od(line, f);
  std::vector<LineOrbit> hits;
  for (const LineOrbit o : line_orbit_labels(f.even()))
    if (od0_formula(o, f.q()) == od) hits.push_back(o);

  if (hits.size() == 1) return hits.front();
  if (hits.size() == 2) {
    const bool pair_1516 =
        (hits[0] == LineOrbit::o15_1 &&
         (hits[1] == LineOrbit::o16_1 || hits[1] == LineOrbit::o16_3));
    if (pair_1516) {
      const LineOrbit o16 = hits[1];
      return h1_over_conic_plane_contains(line, f) ? o16 : LineOrbit::o15_1;
    }
    const bool pair_1014 =
        (hits[0] == LineOrbit::o10 && hits[1] == LineOrbit::o14_1);
    if (pair_1014)
      return has_common_kernel(line, f) ? LineOrbit::o10 : LineOrbit::o14_1;
  }
  throw std::logic_error("OD0 [" + std::to_string(od[0]) + "," +
                         std::to_string(od[1]) + "," + std::to_string(od[2]) +
                         "," + std::to_string(od[3]) +
                         "] matches " + std::to_string(hits.size()) +
                         " table rows; line basis " + line.key());
}

std::map<LineOrbit, long long> orbit_sizes_lines(const FieldCtx& f) {
  std::map<LineOrbit, long long> sizes;
  for (const LineOrbit o : line_orbit_labels(f.even())) sizes[o] = 0;
  for_each_line(whole_space(5, f), f, [&](const Subspace& l) {
    ++sizes[classify_line(l, f)];
  });
  return sizes;
}

}  // namespace vrc
