#include "verocensus/cubic.hpp"

#include <stdexcept>

#include <json.hpp>

#include "verocensus/veronese.hpp"

namespace vrc {
namespace {

using Exp = std::array<int, 4>;

std::array<Exp, 20> build_monomials() {
  std::array<Exp, 20> out{};
  int k = 0;
  for (int ea = 3; ea >= 0; --ea)
    for (int eb = 3 - ea; eb >= 0; --eb)
      for (int ec = 3 - ea - eb; ec >= 0; --ec)
        out[k++] = Exp{ea, eb, ec, 3 - ea - eb - ec};
  return out;
}

int cubic_index(const Exp& e) {
  const auto& ms = cubic_monomials();
  for (int i = 0; i < 20; ++i)
    if (ms[i] == e) return i;
  throw std::logic_error("bad monomial");
}

// Linear form in (A,B,C,D).
using Lin = std::array<Fel, 4>;
// Dense degree-2: 10 monomials, pairs (i,j) with i <= j.
using Quad = std::array<Fel, 16>;  // indexed i*4+j, only i <= j used

Quad mul_ll(const Lin& x, const Lin& y, const FieldCtx& f) {
  Quad q{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int a = std::min(i, j), b = std::max(i, j);
      q[a * 4 + b] = f.add(q[a * 4 + b], f.mul(x[i], y[j]));
    }
  return q;
}

void add_ql(CubicSurface& out, const Quad& q, const Lin& l, Fel scale,
            const FieldCtx& f) {
  if (scale == 0) return;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      const Fel c = q[i * 4 + j];
      if (c == 0) continue;
      for (int k = 0; k < 4; ++k) {
        if (l[k] == 0) continue;
        Exp e{0, 0, 0, 0};
        ++e[i];
        ++e[j];
        ++e[k];
        const int idx = cubic_index(e);
        out.coef[idx] =
            f.add(out.coef[idx], f.mul(scale, f.mul(c, l[k])));
      }
    }
}

}  // namespace

const std::array<std::array<int, 4>, 20>& cubic_monomials() {
  static const std::array<Exp, 20> ms = build_monomials();
  return ms;
}

CubicSurface discriminant_cubic(const std::array<TernaryForm, 4>& gens,
                                const FieldCtx& f) {
  {
    Mat m(0, 6);
    for (const TernaryForm& g : gens) m.append_row(form_to_vec(g));
    if (matrix_rank(m, f) != 4)
      throw std::invalid_argument("web generators are linearly dependent");
  }
  // Coefficient of the generic member as a linear form in (A,B,C,D).
  std::array<Lin, 6> lin{};
  for (int coeff = 0; coeff < 6; ++coeff)
    for (int g = 0; g < 4; ++g) lin[coeff][g] = gens[g].c[coeff];

  const Lin& a00 = lin[0];
  const Lin& a01 = lin[1];
  const Lin& a02 = lin[2];
  const Lin& a11 = lin[3];
  const Lin& a12 = lin[4];
  const Lin& a22 = lin[5];

  CubicSurface x;
  add_ql(x, mul_ll(a00, a11, f), a22, f.from_int(4), f);
  add_ql(x, mul_ll(a01, a02, f), a12, 1, f);
  add_ql(x, mul_ll(a12, a12, f), a00, f.neg(1), f);
  add_ql(x, mul_ll(a02, a02, f), a11, f.neg(1), f);
  add_ql(x, mul_ll(a01, a01, f), a22, f.neg(1), f);
  return x;
}

Fel eval_cubic(const CubicSurface& x, Fel a, Fel b, Fel c, Fel d,
               const FieldCtx& f) {
  const std::array<Fel, 4> v{a, b, c, d};
  Fel total = 0;
  const auto& ms = cubic_monomials();
  for (int i = 0; i < 20; ++i) {
    if (x.coef[i] == 0) continue;
    Fel t = x.coef[i];
    for (int k = 0; k < 4; ++k)
      for (int e = 0; e < ms[i][k]; ++e) t = f.mul(t, v[k]);
    total = f.add(total, t);
  }
  return total;
}

long long count_points(const CubicSurface& x, const FieldCtx& f) {
  long long n = 0;
  for_each_point(3, f, [&](const Vec& p) {
    if (eval_cubic(x, p[0], p[1], p[2], p[3], f) == 0) ++n;
  });
  return n;
}

std::array<TernaryForm, 4> web_of_line(const Subspace& line,
                                       const FieldCtx& f) {
  if (line.dim() != 1 || line.ambient_dim() != 5)
    throw std::invalid_argument("expect a line of PG(5,q)");
  const Mat ns = nullspace(line.basis, f);
  if (ns.rows != 4) throw std::logic_error("line annihilator is not a web");
  std::array<TernaryForm, 4> gens;
  for (int r = 0; r < 4; ++r) {
    Vec v(6);
    for (int c = 0; c < 6; ++c) v[c] = ns.at(r, c);
    gens[r] = point_to_form(v);
  }
  return gens;
}

bool secant_link_check(const Subspace& line, const FieldCtx& f) {
  const long long q = f.q();
  long long secant = 0;
  for (const Vec& p : points_of(line, f))
    if (point_rank(p, f) <= 2) ++secant;
  const bool i_ok = secant == 0 || secant == 1 || secant == 2 ||
                    secant == 3 || secant == q + 1;
  const CubicSurface x = discriminant_cubic(web_of_line(line, f), f);
  return i_ok && count_points(x, f) == q * q + secant * q + 1;
}

std::string cubic_to_json(const CubicSurface& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const Fel c : x.coef) j.push_back(c);
  return j.dump();
}

}  // namespace vrc
