#include "verocensus/groupaction.hpp"

#include <deque>
#include <stdexcept>

#include <json.hpp>

#include "verocensus/veronese.hpp"

namespace vrc {

GroupElement canonicalize(GroupElement g, const FieldCtx& f) {
  for (const Fel x : g.a) {
    if (x == 0) continue;
    if (x != 1) {
      const Fel s = f.inv(x);
      for (Fel& y : g.a) y = f.mul(s, y);
    }
    return g;
  }
  throw std::invalid_argument("zero matrix");
}

GroupElement identity_element() {
  GroupElement g;
  g.a = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  return g;
}

GroupElement compose(const GroupElement& g, const GroupElement& h,
                     const FieldCtx& f) {
  GroupElement r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fel t = 0;
      for (int k = 0; k < 3; ++k)
        t = f.add(t, f.mul(g.at(i, k), h.at(k, j)));
      r.a[static_cast<std::size_t>(i) * 3 + j] = t;
    }
  return canonicalize(r, f);
}

Fel det3(const GroupElement& g, const FieldCtx& f) {
  auto m = [&](int r, int c) { return g.at(r, c); };
  Fel t = f.mul(m(0, 0), f.sub(f.mul(m(1, 1), m(2, 2)), f.mul(m(1, 2), m(2, 1))));
  t = f.sub(t, f.mul(m(0, 1), f.sub(f.mul(m(1, 0), m(2, 2)), f.mul(m(1, 2), m(2, 0)))));
  t = f.add(t, f.mul(m(0, 2), f.sub(f.mul(m(1, 0), m(2, 1)), f.mul(m(1, 1), m(2, 0)))));
  return t;
}

Vec act_on_point(const GroupElement& g, const Vec& y, const FieldCtx& f) {
  const Mat m = sym_matrix_of(y);
  Mat am(3, 3), q(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fel t = 0;
      for (int k = 0; k < 3; ++k) t = f.add(t, f.mul(g.at(i, k), m.at(k, j)));
      am.at(i, j) = t;
    }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fel t = 0;
      for (int k = 0; k < 3; ++k) t = f.add(t, f.mul(am.at(i, k), g.at(j, k)));
      q.at(i, j) = t;
    }
  return normalize_point(sym_matrix_to_vec(q), f);
}

Subspace act_on_subspace(const GroupElement& g, const Subspace& s,
                         const FieldCtx& f) {
  std::vector<Vec> rows;
  rows.reserve(s.basis.rows);
  for (int r = 0; r < s.basis.rows; ++r) {
    Vec v(s.basis.cols);
    for (int c = 0; c < s.basis.cols; ++c) v[c] = s.basis.at(r, c);
    rows.push_back(act_on_point(g, v, f));
  }
  return subspace_from_rows(rows, f);
}

Vec act_on_pg2_point(const GroupElement& g, const Vec& p, const FieldCtx& f) {
  Vec r(3, 0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r[i] = f.add(r[i], f.mul(g.at(i, j), p[j]));
  return normalize_point(std::move(r), f);
}

long long pgl3_order(long long q) {
  return q * q * q * (q * q * q - 1) * (q * q - 1);
}

std::vector<GroupElement> enumerate_group(const FieldCtx& f, int oracle_bound) {
  if (f.q() > oracle_bound)
    throw std::invalid_argument("q exceeds the group enumeration bound");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(pgl3_order(f.q())));
  const long long q = f.q();
  long long total = 1;
  for (int i = 0; i < 9; ++i) total *= q;
  for (long long code = 0; code < total; ++code) {
    GroupElement g;
    long long c = code;
    for (int i = 8; i >= 0; --i) {
      g.a[i] = static_cast<Fel>(c % q);
      c /= q;
    }
    // Keep only canonical representatives of nonsingular matrices.
    int first = -1;
    for (int i = 0; i < 9; ++i)
      if (g.a[i] != 0) {
        first = i;
        break;
      }
    if (first < 0 || g.a[first] != 1) continue;
    if (det3(g, f) == 0) continue;
    out.push_back(g);
  }
  return out;
}

std::vector<GroupElement> standard_generators(const FieldCtx& f) {
  std::vector<GroupElement> gens;
  // Transvections x01(b) for b running over a GF(p)-basis of GF(q).
  Fel b = 1;
  for (int i = 0; i < f.h(); ++i) {
    GroupElement t = identity_element();
    t.a[1] = b;
    gens.push_back(t);
    b = static_cast<Fel>(b * f.p());  // next basis monomial x^i
  }
  // Torus generator diag(w,1,1).
  if (f.q() > 2) {
    GroupElement d = identity_element();
    d.a[0] = f.primitive_element();
    gens.push_back(canonicalize(d, f));
  }
  // 3-cycle and transposition of coordinates.
  GroupElement cyc;
  cyc.a = {0, 1, 0, 0, 0, 1, 1, 0, 0};
  gens.push_back(cyc);
  GroupElement swp;
  swp.a = {0, 1, 0, 1, 0, 0, 0, 0, 1};
  gens.push_back(swp);
  return gens;
}

namespace {

OrbitPartition orbit_partition_subspaces(const FieldCtx& f,
                                         const std::vector<Subspace>& all) {
  const std::vector<GroupElement> gens = standard_generators(f);
  OrbitPartition part;
  part.orbit_of.reserve(all.size() * 2);
  for (const Subspace& start : all) {
    const std::string k0 = start.key();
    if (part.orbit_of.count(k0)) continue;
    const int id = part.num_orbits();
    Subspace rep = start;
    long long size = 0;
    std::deque<Subspace> queue{start};
    part.orbit_of.emplace(k0, id);
    while (!queue.empty()) {
      const Subspace s = std::move(queue.front());
      queue.pop_front();
      ++size;
      if (s.key() < rep.key()) rep = s;
      for (const GroupElement& g : gens) {
        Subspace t = act_on_subspace(g, s, f);
        auto [it, inserted] = part.orbit_of.emplace(t.key(), id);
        if (inserted) queue.push_back(std::move(t));
      }
    }
    part.sizes.push_back(size);
    part.representatives.push_back(rep);
  }
  return part;
}

}  // namespace

OrbitPartition orbit_partition_lines(const FieldCtx& f, int oracle_bound) {
  if (f.q() > oracle_bound)
    throw std::invalid_argument("q exceeds the orbit oracle bound");
  // Verify the generator set by closing a rank-3 point orbit.
  const OrbitPartition pts = orbit_partition_points(f, oracle_bound);
  const long long p3 = orbit_sizes_points(f)[3];
  bool ok = false;
  for (const long long s : pts.sizes) ok = ok || (s == p3);
  if (!ok) throw std::logic_error("generator set fails to generate PGL(3,q)");
  return orbit_partition_subspaces(f, enumerate_lines(whole_space(5, f), f));
}

OrbitPartition orbit_partition_points(const FieldCtx& f, int oracle_bound) {
  if (f.q() > oracle_bound)
    throw std::invalid_argument("q exceeds the orbit oracle bound");
  std::vector<Subspace> all;
  for (const Vec& y : enumerate_points(5, f))
    all.push_back(subspace_from_rows({y}, f));
  return orbit_partition_subspaces(f, all);
}

std::string orbit_partition_to_json(const OrbitPartition& p, const FieldCtx& f) {
  nlohmann::json j;
  j["q"] = f.q();
  j["num_orbits"] = p.num_orbits();
  nlohmann::json orbits = nlohmann::json::object();
  for (int i = 0; i < p.num_orbits(); ++i) {
    nlohmann::json rep = nlohmann::json::array();
    const Mat& b = p.representatives[i].basis;
    for (int r = 0; r < b.rows; ++r) {
      Vec v(b.cols);
      for (int c = 0; c < b.cols; ++c) v[c] = b.at(r, c);
      rep.push_back(vec_to_string(v));
    }
    orbits[std::to_string(i)] = {{"size", p.sizes[i]}, {"representative", rep}};
  }
  j["orbits"] = orbits;
  return j.dump(2);
}

}  // namespace vrc
