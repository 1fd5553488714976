#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "verocensus/gf.hpp"
#include "verocensus/pglinalg.hpp"

namespace vrc {

/// An element of K, i.e. of PGL(3,q), held as an invertible 3x3 matrix
/// canonicalized modulo scalars: the first nonzero entry in row-major
/// order equals 1.
struct GroupElement {
  std::array<Fel, 9> a{};

  Fel at(int r, int c) const { return a[static_cast<std::size_t>(r) * 3 + c]; }
  bool operator==(const GroupElement& o) const { return a == o.a; }
};

GroupElement canonicalize(GroupElement g, const FieldCtx& f);
GroupElement identity_element();
GroupElement compose(const GroupElement& g, const GroupElement& h,
                     const FieldCtx& f);
Fel det3(const GroupElement& g, const FieldCtx& f);

/// Congruence action M -> A M A^T on points of PG(5,q); preserves rank
/// and the Veronese surface.
Vec act_on_point(const GroupElement& g, const Vec& y, const FieldCtx& f);

/// Row-wise lifted action on a subspace of PG(5,q), re-canonicalized.
Subspace act_on_subspace(const GroupElement& g, const Subspace& s,
                         const FieldCtx& f);

/// Action of PGL(3,q) on points of PG(2,q).
Vec act_on_pg2_point(const GroupElement& g, const Vec& p, const FieldCtx& f);

/// |PGL(3,q)| = q^3 (q^3 - 1)(q^2 - 1).
long long pgl3_order(long long q);

/// Every element of PGL(3,q) exactly once, deterministic order.
/// Guarded by the oracle bound (default q <= 5).
std::vector<GroupElement> enumerate_group(const FieldCtx& f,
                                          int oracle_bound = 5);

/// A small generating set: elementary transvections over a basis of
/// GF(q)/GF(p), a torus generator diag(w,1,1) with w primitive, and the
/// two coordinate permutations.  Generation is verified by closing the
/// orbit of a rank-3 point to its closed-form size.
std::vector<GroupElement> standard_generators(const FieldCtx& f);

struct OrbitPartition {
  std::unordered_map<std::string, int> orbit_of;  // Subspace::key -> orbit id
  std::vector<long long> sizes;
  std::vector<Subspace> representatives;  // lexicographically smallest member

  int num_orbits() const { return static_cast<int>(sizes.size()); }
};

/// Partition of all lines of PG(5,q) into K-orbits by breadth-first
/// closure under the standard generators.  Deterministic: orbits are
/// numbered by first appearance in the global line enumeration order.
OrbitPartition orbit_partition_lines(const FieldCtx& f, int oracle_bound = 5);

/// Same sweep for points (used to validate the generator set).
OrbitPartition orbit_partition_points(const FieldCtx& f, int oracle_bound = 5);

/// JSON document: orbit id -> {size, representative}.
std::string orbit_partition_to_json(const OrbitPartition& p, const FieldCtx& f);

}  // namespace vrc
