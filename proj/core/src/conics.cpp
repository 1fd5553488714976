#include "verocensus/conics.hpp"

#include <algorithm>
#include <stdexcept>

namespace vrc {

bool TernaryForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](Fel x) { return x == 0; });
}

std::string to_string(ConicType t) {
  switch (t) {
    case ConicType::DoubleLine: return "double_line";
    case ConicType::RealPair: return "real_pair";
    case ConicType::ImaginaryPair: return "imaginary_pair";
    case ConicType::NonSingular: return "nonsingular";
  }
  return "?";
}

Fel discriminant(const TernaryForm& g, const FieldCtx& f) {
  if (g.is_zero()) throw std::invalid_argument("zero form");
  const auto& a = g.c;  // a00,a01,a02,a11,a12,a22
  Fel t = f.mul(f.from_int(4), f.mul(a[0], f.mul(a[3], a[5])));
  t = f.add(t, f.mul(a[1], f.mul(a[2], a[4])));
  t = f.sub(t, f.mul(a[0], f.mul(a[4], a[4])));
  t = f.sub(t, f.mul(a[3], f.mul(a[2], a[2])));
  t = f.sub(t, f.mul(a[5], f.mul(a[1], a[1])));
  return t;
}

Fel eval_form(const TernaryForm& g, const Vec& pt, const FieldCtx& f) {
  const Fel x0 = pt[0], x1 = pt[1], x2 = pt[2];
  Fel t = f.mul(g.c[0], f.mul(x0, x0));
  t = f.add(t, f.mul(g.c[1], f.mul(x0, x1)));
  t = f.add(t, f.mul(g.c[2], f.mul(x0, x2)));
  t = f.add(t, f.mul(g.c[3], f.mul(x1, x1)));
  t = f.add(t, f.mul(g.c[4], f.mul(x1, x2)));
  t = f.add(t, f.mul(g.c[5], f.mul(x2, x2)));
  return t;
}

std::vector<Vec> zero_locus(const TernaryForm& g, const FieldCtx& f) {
  std::vector<Vec> zs;
  for_each_point(2, f, [&](const Vec& pt) {
    if (eval_form(g, pt, f) == 0) zs.push_back(pt);
  });
  return zs;
}

ConicType classify_conic(const TernaryForm& g, const FieldCtx& f) {
  if (g.is_zero()) throw std::invalid_argument("zero form");
  const std::vector<Vec> zs = zero_locus(g, f);
  const long long q = f.q();
  const long long n = static_cast<long long>(zs.size());
  if (n == 2 * q + 1) return ConicType::RealPair;
  if (n == 1) return ConicType::ImaginaryPair;
  if (n == q + 1) {
    Mat m(0, 3);
    for (const Vec& z : zs) m.append_row(z);
    return matrix_rank(m, f) <= 2 ? ConicType::DoubleLine
                                  : ConicType::NonSingular;
  }
  throw std::logic_error("conic with impossible point count " +
                         std::to_string(n));
}

TernaryForm canonical_form(TernaryForm g, const FieldCtx& f) {
  for (const Fel x : g.c)
    if (x != 0) {
      if (x != 1) {
        const Fel s = f.inv(x);
        for (Fel& y : g.c) y = f.mul(s, y);
      }
      return g;
    }
  throw std::invalid_argument("zero form");
}

TernaryForm point_to_form(const Vec& dual_point) {
  if (dual_point.size() != 6)
    throw std::invalid_argument("dual point must have 6 coordinates");
  TernaryForm g;
  std::copy(dual_point.begin(), dual_point.end(), g.c.begin());
  if (g.is_zero()) throw std::invalid_argument("zero form");
  return g;
}

Vec form_to_vec(const TernaryForm& g) { return Vec(g.c.begin(), g.c.end()); }

TernaryForm parse_form(const std::string& text, const FieldCtx& f) {
  const Vec v = parse_vec(text, f);
  if (v.size() != 6)
    throw std::invalid_argument("a form needs exactly 6 coefficients");
  return point_to_form(v);
}

std::string form_to_string(const TernaryForm& g) {
  return vec_to_string(form_to_vec(g));
}

}  // namespace vrc
