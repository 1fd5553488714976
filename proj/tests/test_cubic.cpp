#include <doctest.h>

#include <random>

#include "verocensus/cubic.hpp"
#include "verocensus/lineclass.hpp"
#include "verocensus/systems.hpp"

using namespace vrc;

namespace {

TernaryForm form(std::array<Fel, 6> c) {
  TernaryForm g;
  g.c = c;
  return g;
}

// Cubic from a sparse monomial list (integer coefficients).
CubicSurface make_cubic(const FieldCtx& f,
                        std::initializer_list<std::pair<int, std::array<int, 4>>>
                            terms) {
  CubicSurface x;
  const auto& ms = cubic_monomials();
  for (const auto& [coeff, exps] : terms) {
    for (int i = 0; i < 20; ++i)
      if (ms[i] == exps) x.coef[i] = f.from_int(coeff);
  }
  return x;
}

bool proportional(const CubicSurface& a, const CubicSurface& b,
                  const FieldCtx& f) {
  Fel sa = 0, sb = 0;
  for (int i = 0; i < 20; ++i)
    if (a.coef[i] != 0 || b.coef[i] != 0) {
      if (a.coef[i] == 0 || b.coef[i] == 0) return false;
      sa = a.coef[i];
      sb = b.coef[i];
      break;
    }
  if (sa == 0) return true;  // both zero
  const Fel scale = f.div(sb, sa);
  for (int i = 0; i < 20; ++i)
    if (f.mul(scale, a.coef[i]) != b.coef[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("symbolic expansion agrees with member discriminants") {
  for (const auto [p, h] : {std::pair{3, 1}, {2, 2}, {5, 1}}) {
    const FieldCtx f(p, h);
    const RepParams rp = find_rep_params(f);
    std::mt19937_64 rng(424242);
    for (const LineOrbit o : line_orbit_labels(f.even())) {
      const auto gens = representative_web(o, rp, f);
      const CubicSurface x = discriminant_cubic(gens, f);
      for (int trial = 0; trial < 20; ++trial) {
        std::array<Fel, 4> w;
        bool zero = true;
        for (Fel& t : w) {
          t = static_cast<Fel>(rng() % f.q());
          zero = zero && t == 0;
        }
        if (zero) continue;
        TernaryForm member;
        for (int c = 0; c < 6; ++c) {
          Fel t = 0;
          for (int g = 0; g < 4; ++g)
            t = f.add(t, f.mul(w[g], gens[g].c[c]));
          member.c[c] = t;
        }
        const Fel lhs = eval_cubic(x, w[0], w[1], w[2], w[3], f);
        if (member.is_zero()) continue;
        CHECK(lhs == discriminant(member, f));
      }
    }
  }
}

TEST_CASE("tabulated cubic surfaces, q odd") {
  const FieldCtx f7(7, 1);
  // Gram-parameterized generators reproduce the tabulated polynomials
  // up to scalar: the Gram matrix [[0,a,b],[a,c,d],[b,d,c]] corresponds
  // to the member 2a*X0X1 + 2b*X0X2 + c*(X1^2+X2^2) + 2d*X1X2.
  {
    const std::array<TernaryForm, 4> gens{
        form({0, 2, 0, 0, 0, 0}), form({0, 0, 2, 0, 0, 0}),
        form({0, 0, 0, 1, 0, 1}), form({0, 0, 0, 0, 2, 0})};
    // 2ABD - C(A^2+B^2)
    const CubicSurface want = make_cubic(
        f7, {{2, {1, 1, 0, 1}}, {-1, {2, 0, 1, 0}}, {-1, {0, 2, 1, 0}}});
    CHECK(proportional(discriminant_cubic(gens, f7), want, f7));
  }
  {
    // Gram [[a,0,b],[0,c,d],[b,d,c]] -> A(C^2-D^2) - C B^2.
    const std::array<TernaryForm, 4> gens{
        form({1, 0, 0, 0, 0, 0}), form({0, 0, 2, 0, 0, 0}),
        form({0, 0, 0, 1, 0, 1}), form({0, 0, 0, 0, 2, 0})};
    const CubicSurface want = make_cubic(
        f7, {{1, {1, 0, 2, 0}}, {-1, {1, 0, 0, 2}}, {-1, {0, 2, 1, 0}}});
    CHECK(proportional(discriminant_cubic(gens, f7), want, f7));
  }
  {
    // Gram [[a,d,d],[d,b,d],[d,d,c]] -> A(BC-D^2) + D^2(2D-C-B).
    const std::array<TernaryForm, 4> gens{
        form({1, 0, 0, 0, 0, 0}), form({0, 0, 0, 1, 0, 0}),
        form({0, 0, 0, 0, 0, 1}), form({0, 2, 2, 0, 2, 0})};
    const CubicSurface want =
        make_cubic(f7, {{1, {1, 1, 1, 0}}, {-1, {1, 0, 0, 2}},
                        {2, {0, 0, 0, 3}}, {-1, {0, 0, 1, 2}}, {-1, {0, 1, 0, 2}}});
    CHECK(proportional(discriminant_cubic(gens, f7), want, f7));
  }
}

TEST_CASE("cubic point counts at q=3") {
  const FieldCtx f3(3, 1);
  const RepParams rp = find_rep_params(f3);
  auto count_for = [&](LineOrbit o) {
    return count_points(
        discriminant_cubic(representative_web(o, rp, f3), f3), f3);
  };
  CHECK(count_for(LineOrbit::o8_1) == 16);  // q^2+2q+1
  CHECK(count_for(LineOrbit::o17) == 10);   // q^2+1
  CHECK(count_for(LineOrbit::o5) == 22);    // 2q^2+q+1
}

TEST_CASE("dependent generators are rejected") {
  const FieldCtx f3(3, 1);
  const std::array<TernaryForm, 4> bad{
      form({1, 0, 0, 0, 0, 0}), form({0, 1, 0, 0, 0, 0}),
      form({1, 1, 0, 0, 0, 0}), form({0, 0, 0, 0, 0, 1})};
  CHECK_THROWS_AS(discriminant_cubic(bad, f3), std::invalid_argument);
}

TEST_CASE("secant link for the representatives") {
  for (const auto [p, h] : {std::pair{3, 1}, {2, 2}, {5, 1}, {2, 1}}) {
    const FieldCtx f(p, h);
    const RepParams rp = find_rep_params(f);
    for (const LineOrbit o : line_orbit_labels(f.even()))
      CHECK(secant_link_check(representative_line(o, rp, f), f));
  }
}

TEST_CASE("double lines of a web sit on its cubic with rank 1") {
  const FieldCtx f3(3, 1);
  const RepParams rp = find_rep_params(f3);
  for (const LineOrbit o : line_orbit_labels(false)) {
    const auto gens = representative_web(o, rp, f3);
    const CubicSurface x = discriminant_cubic(gens, f3);
    const auto od4 = od4_of_line(representative_line(o, rp, f3), f3);
    long long on_cubic = 0, double_lines = 0;
    for_each_point(3, f3, [&](const Vec& w) {
      if (eval_cubic(x, w[0], w[1], w[2], w[3], f3) != 0) return;
      ++on_cubic;
      TernaryForm member;
      for (int c = 0; c < 6; ++c) {
        Fel t = 0;
        for (int g = 0; g < 4; ++g)
          t = f3.add(t, f3.mul(w[g], gens[g].c[c]));
        member.c[c] = t;
      }
      if (classify_conic(member, f3) == ConicType::DoubleLine) ++double_lines;
    });
    CHECK(on_cubic == od4[0] + od4[1] + od4[2]);
    CHECK(double_lines == od4[0]);
  }
}

TEST_CASE("json export shape") {
  const FieldCtx f2(2, 1);
  const RepParams rp = find_rep_params(f2);
  const CubicSurface x =
      discriminant_cubic(representative_web(LineOrbit::o5, rp, f2), f2);
  const std::string j = cubic_to_json(x);
  CHECK(j.front() == '[');
  CHECK(std::count(j.begin(), j.end(), ',') == 19);
}
