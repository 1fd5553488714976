#include "verocensus/veronese.hpp"

#include <stdexcept>

namespace vrc {

std::string to_string(PointOrbit o) {
  switch (o) {
    case PointOrbit::P1: return "P1";
    case PointOrbit::P2e: return "P2e";
    case PointOrbit::P2i: return "P2i";
    case PointOrbit::P3: return "P3";
    case PointOrbit::P2n: return "P2n";
    case PointOrbit::P2s: return "P2s";
  }
  return "?";
}

std::string to_string(HypOrbit o) {
  switch (o) {
    case HypOrbit::H1: return "H1";
    case HypOrbit::H2r: return "H2r";
    case HypOrbit::H2i: return "H2i";
    case HypOrbit::H3: return "H3";
  }
  return "?";
}

std::array<PointOrbit, 4> point_orbit_labels(bool even) {
  if (even)
    return {PointOrbit::P1, PointOrbit::P2n, PointOrbit::P2s, PointOrbit::P3};
  return {PointOrbit::P1, PointOrbit::P2e, PointOrbit::P2i, PointOrbit::P3};
}

int point_orbit_index(PointOrbit o, bool even) {
  const auto labels = point_orbit_labels(even);
  for (int i = 0; i < 4; ++i)
    if (labels[i] == o) return i;
  throw std::invalid_argument(to_string(o) + " is not a point orbit for this parity");
}

HypOrbit hyp_orbit_of_conic_type(ConicType t) {
  switch (t) {
    case ConicType::DoubleLine: return HypOrbit::H1;
    case ConicType::RealPair: return HypOrbit::H2r;
    case ConicType::ImaginaryPair: return HypOrbit::H2i;
    case ConicType::NonSingular: return HypOrbit::H3;
  }
  throw std::logic_error("bad conic type");
}

Vec veronese_map(const Vec& p, const FieldCtx& f) {
  if (p.size() != 3) throw std::invalid_argument("expect a point of PG(2,q)");
  if (is_zero_vec(p)) throw std::invalid_argument("zero vector");
  Vec y{f.mul(p[0], p[0]), f.mul(p[0], p[1]), f.mul(p[0], p[2]),
        f.mul(p[1], p[1]), f.mul(p[1], p[2]), f.mul(p[2], p[2])};
  return normalize_point(std::move(y), f);
}

Vec veronese_preimage(const Vec& y, const FieldCtx& f) {
  const Mat m = sym_matrix_of(y);
  // A rank-1 symmetric matrix is u^T u up to scalar; any nonzero row is
  // proportional to u.
  for (int r = 0; r < 3; ++r) {
    Vec u{m.at(r, 0), m.at(r, 1), m.at(r, 2)};
    if (!is_zero_vec(u)) {
      u = normalize_point(std::move(u), f);
      if (veronese_map(u, f) != normalize_point(Vec(y), f))
        throw std::invalid_argument("point is not on the Veronese surface");
      return u;
    }
  }
  throw std::invalid_argument("zero point");
}

Mat sym_matrix_of(const Vec& y) {
  if (y.size() != 6) throw std::invalid_argument("expect 6 coordinates");
  Mat m(3, 3);
  m.at(0, 0) = y[0]; m.at(0, 1) = y[1]; m.at(0, 2) = y[2];
  m.at(1, 0) = y[1]; m.at(1, 1) = y[3]; m.at(1, 2) = y[4];
  m.at(2, 0) = y[2]; m.at(2, 1) = y[4]; m.at(2, 2) = y[5];
  return m;
}

Vec sym_matrix_to_vec(const Mat& m) {
  return Vec{m.at(0, 0), m.at(0, 1), m.at(0, 2),
             m.at(1, 1), m.at(1, 2), m.at(2, 2)};
}

int point_rank(const Vec& y, const FieldCtx& f) {
  return matrix_rank(sym_matrix_of(y), f);
}

std::array<Fel, 3> neg_principal_minors(const Vec& y, const FieldCtx& f) {
  const Mat m = sym_matrix_of(y);
  auto minor = [&](int i, int j) {
    return f.sub(f.mul(m.at(i, i), m.at(j, j)), f.mul(m.at(i, j), m.at(i, j)));
  };
  return {f.neg(minor(1, 2)), f.neg(minor(0, 2)), f.neg(minor(0, 1))};
}

PointOrbit classify_point(const Vec& y, const FieldCtx& f) {
  const int r = point_rank(y, f);
  if (r == 0) throw std::invalid_argument("zero matrix");
  if (r == 1) return PointOrbit::P1;
  if (r == 3) return PointOrbit::P3;
  if (f.even()) {
    const bool zero_diag = (y[0] == 0 && y[3] == 0 && y[5] == 0);
    return zero_diag ? PointOrbit::P2n : PointOrbit::P2s;
  }
  // Odd q: exterior iff -m11, -m22, -m33 are all squares, not all zero.
  const auto nm = neg_principal_minors(y, f);
  bool all_square = true, any_nonzero = false;
  for (const Fel x : nm) {
    if (!f.is_square(x)) all_square = false;
    if (x != 0) any_nonzero = true;
  }
  return (all_square && any_nonzero) ? PointOrbit::P2e : PointOrbit::P2i;
}

std::array<long long, 4> orbit_sizes_points(const FieldCtx& f) {
  const long long q = f.q();
  const long long s = q * q + q + 1;
  if (f.even()) return {s, s, (q * q - 1) * s, q * q * q * q * q - q * q};
  return {s, q * (q + 1) * s / 2, q * (q - 1) * s / 2,
          q * q * q * q * q - q * q};
}

std::array<long long, 4> orbit_sizes_hyperplanes(const FieldCtx& f) {
  const long long q = f.q();
  const long long s = q * q + q + 1;
  return {s, q * (q + 1) * s / 2, q * (q - 1) * s / 2,
          q * q * q * q * q - q * q};
}

ConicPlane conic_plane_of(const Vec& y, const FieldCtx& f) {
  if (point_rank(y, f) != 2)
    throw std::invalid_argument("conic planes are defined for rank-2 points");
  const Vec yn = normalize_point(Vec(y), f);
  const Subspace pg2 = whole_space(2, f);
  ConicPlane found;
  int hits = 0;
  for_each_line(pg2, f, [&](const Subspace& l) {
    std::vector<Vec> img;
    for (const Vec& p : points_of(l, f)) img.push_back(veronese_map(p, f));
    const Subspace plane = span(img, f);
    if (plane.dim() == 2 && contains(plane, yn, f)) {
      found = ConicPlane{l, plane};
      ++hits;
    }
  });
  if (hits != 1)
    throw std::logic_error("rank-2 point lies in " + std::to_string(hits) +
                           " conic planes (expected 1) at " + vec_to_string(yn));
  return found;
}

Vec pg2_line_dual(const Subspace& pg2_line, const FieldCtx& f) {
  if (pg2_line.dim() != 1 || pg2_line.ambient_dim() != 2)
    throw std::invalid_argument("expect a line of PG(2,q)");
  const Mat ns = nullspace(pg2_line.basis, f);
  Vec l{ns.at(0, 0), ns.at(0, 1), ns.at(0, 2)};
  return normalize_point(std::move(l), f);
}

TernaryForm square_of_linear(const Vec& l, const FieldCtx& f) {
  const Fel two = f.from_int(2);
  TernaryForm g;
  g.c = {f.mul(l[0], l[0]),
         f.mul(two, f.mul(l[0], l[1])),
         f.mul(two, f.mul(l[0], l[2])),
         f.mul(l[1], l[1]),
         f.mul(two, f.mul(l[1], l[2])),
         f.mul(l[2], l[2])};
  return g;
}

Subspace delta(const TernaryForm& g, const FieldCtx& f) {
  if (g.is_zero()) throw std::invalid_argument("zero form");
  return hyperplane_from_dual(form_to_vec(g), f);
}

Vec hyperplane_dual_coords(const Subspace& h, const FieldCtx& f) {
  if (h.dim() != 4 || h.ambient_dim() != 5)
    throw std::invalid_argument("expect a hyperplane of PG(5,q)");
  const Mat ns = nullspace(h.basis, f);
  Vec a(6);
  for (int c = 0; c < 6; ++c) a[c] = ns.at(0, c);
  return normalize_point(std::move(a), f);
}

Subspace hyperplane_from_dual(const Vec& a, const FieldCtx& f) {
  if (a.size() != 6 || is_zero_vec(a))
    throw std::invalid_argument("bad dual coordinates");
  Mat row(0, 6);
  row.append_row(a);
  const Mat ns = nullspace(row, f);
  std::vector<Vec> rows;
  for (int r = 0; r < ns.rows; ++r) {
    Vec v(6);
    for (int c = 0; c < 6; ++c) v[c] = ns.at(r, c);
    rows.push_back(v);
  }
  return subspace_from_rows(rows, f);
}

HypOrbit classify_hyperplane_dual(const Vec& dual_coords, const FieldCtx& f) {
  const TernaryForm g = point_to_form(dual_coords);
  const HypOrbit h = hyp_orbit_of_conic_type(classify_conic(g, f));
  // Redundant algebraic route for odd q: membership in H3 is equivalent
  // to a nonzero discriminant of the dual form.
  if (!f.even() && (h == HypOrbit::H3) != (discriminant(g, f) != 0))
    throw std::logic_error(
        "geometric and discriminant hyperplane classifiers disagree at (" +
        vec_to_string(dual_coords) + ")");
  return h;
}

HypOrbit classify_hyperplane(const Subspace& h, const FieldCtx& f) {
  return classify_hyperplane_dual(hyperplane_dual_coords(h, f), f);
}

Subspace nucleus_plane(const FieldCtx& f) {
  std::vector<Vec> rows{{0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                        {0, 0, 0, 0, 1, 0}};
  return subspace_from_rows(rows, f);
}

}  // namespace vrc
