#include <doctest.h>

#include <random>
#include <set>

#include "verocensus/groupaction.hpp"
#include "verocensus/veronese.hpp"

using namespace vrc;

namespace {

GroupElement random_element(std::mt19937_64& rng, const FieldCtx& f) {
  GroupElement a;
  do {
    for (Fel& x : a.a) x = static_cast<Fel>(rng() % f.q());
  } while (det3(a, f) == 0);
  return canonicalize(a, f);
}

Vec random_point6(std::mt19937_64& rng, const FieldCtx& f) {
  Vec v(6);
  do {
    for (Fel& x : v) x = static_cast<Fel>(rng() % f.q());
  } while (is_zero_vec(v));
  return normalize_point(std::move(v), f);
}

}  // namespace

TEST_CASE("action basics") {
  const FieldCtx f3(3, 1);
  std::mt19937_64 rng(99);
  const GroupElement id = identity_element();
  for (int trial = 0; trial < 100; ++trial) {
    const Vec y = random_point6(rng, f3);
    CHECK(act_on_point(id, y, f3) == y);

    const GroupElement g = random_element(rng, f3);
    // Equivariance with the plane action.
    Vec p(3);
    do {
      for (Fel& x : p) x = static_cast<Fel>(rng() % 3);
    } while (is_zero_vec(p));
    CHECK(act_on_point(g, veronese_map(p, f3), f3) ==
          veronese_map(act_on_pg2_point(g, p, f3), f3));

    // Rank preservation.
    CHECK(point_rank(act_on_point(g, y, f3), f3) == point_rank(y, f3));

    // Compatibility (gh).y = g.(h.y) and on subspaces.
    const GroupElement h = random_element(rng, f3);
    CHECK(act_on_point(compose(g, h, f3), y, f3) ==
          act_on_point(g, act_on_point(h, y, f3), f3));
    const Vec y2 = random_point6(rng, f3);
    if (y2 != y) {
      const Subspace s = span({y, y2}, f3);
      CHECK(act_on_subspace(compose(g, h, f3), s, f3) ==
            act_on_subspace(g, act_on_subspace(h, s, f3), f3));
      CHECK(act_on_subspace(id, s, f3) == s);
      // The action permutes the point set of s.
      std::set<Vec> before, after;
      for (const Vec& v : points_of(s, f3)) before.insert(act_on_point(g, v, f3));
      for (const Vec& v : points_of(act_on_subspace(g, s, f3), f3))
        after.insert(v);
      CHECK(before == after);
    }
  }
}

TEST_CASE("group enumeration sizes") {
  CHECK(pgl3_order(2) == 168);
  CHECK(pgl3_order(3) == 5616);
  CHECK(pgl3_order(4) == 60480);
  const FieldCtx f2(2, 1);
  CHECK(enumerate_group(f2).size() == 168);
  const FieldCtx f3(3, 1);
  const auto g3 = enumerate_group(f3);
  CHECK(g3.size() == 5616);
  // All canonical and distinct.
  std::set<std::array<Fel, 9>> uniq;
  for (const GroupElement& g : g3) uniq.insert(g.a);
  CHECK(uniq.size() == g3.size());
  const FieldCtx f7(7, 1);
  CHECK_THROWS_AS(enumerate_group(f7), std::invalid_argument);
}

TEST_CASE("point orbit sweep matches the closed forms") {
  for (const auto [p, h] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const FieldCtx f(p, h);
    const OrbitPartition part = orbit_partition_points(f);
    CHECK(part.num_orbits() == 4);
    std::multiset<long long> got(part.sizes.begin(), part.sizes.end());
    const auto sizes = orbit_sizes_points(f);
    std::multiset<long long> want(sizes.begin(), sizes.end());
    CHECK(got == want);
  }
}

TEST_CASE("line orbit partition at q=2") {
  const FieldCtx f2(2, 1);
  const OrbitPartition part = orbit_partition_lines(f2);
  CHECK(part.num_orbits() == 15);
  long long total = 0;
  for (const long long s : part.sizes) {
    total += s;
    CHECK(168 % s == 0);  // orbit-stabilizer
  }
  CHECK(total == 651);
}

TEST_CASE("oracle json export") {
  const FieldCtx f2(2, 1);
  const OrbitPartition part = orbit_partition_points(f2);
  const std::string j = orbit_partition_to_json(part, f2);
  CHECK(j.find("\"num_orbits\": 4") != std::string::npos);
  CHECK(j.find("representative") != std::string::npos);
}

TEST_CASE("classifier equals the oracle partition at q=4 and q=5") {
  for (const auto [p, h] : {std::pair{2, 2}, {5, 1}}) {
    const FieldCtx f(p, h);
    const OrbitPartition part = orbit_partition_lines(f);
    REQUIRE(part.num_orbits() == 15);
    std::vector<int> label_of(15, -1);
    long long mismatches = 0;
    for_each_line(whole_space(5, f), f, [&](const Subspace& l) {
      const int id = part.orbit_of.at(l.key());
      const int lab = line_orbit_index(classify_line(l, f), f.even());
      if (label_of[id] == -1) label_of[id] = lab;
      if (label_of[id] != lab) ++mismatches;
    });
    CHECK(mismatches == 0);
    CHECK(std::set<int>(label_of.begin(), label_of.end()).size() == 15);
  }
}
