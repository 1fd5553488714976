#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "verocensus/gf.hpp"

namespace vrc {

/// Coordinate vector over GF(q).
using Vec = std::vector<Fel>;

/// Dense row-major matrix over GF(q).
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Fel> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Fel& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Fel at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  void append_row(const Vec& v);

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

/// In-place reduced row echelon form; returns the rank.
int rref(Mat& m, const FieldCtx& f);

/// Row rank by Gaussian elimination.
int matrix_rank(Mat m, const FieldCtx& f);

/// Basis of the right nullspace, one row per kernel vector.
Mat nullspace(const Mat& m, const FieldCtx& f);

/// Scales a nonzero vector so its first nonzero coordinate is 1.
/// Throws std::invalid_argument on the zero vector.
Vec normalize_point(Vec v, const FieldCtx& f);

bool is_zero_vec(const Vec& v);

/// A subspace of PG(n,q) held by its canonical RREF basis matrix.
/// Two subspaces are equal iff their basis matrices are identical.
struct Subspace {
  Mat basis;  // (k+1) x (n+1), RREF, no zero rows

  int dim() const { return basis.rows - 1; }      // projective dimension
  int ambient_dim() const { return basis.cols - 1; }
  bool operator==(const Subspace& o) const { return basis == o.basis; }

  /// Flat byte key for hashing and ordering.
  std::string key() const;
};

/// Smallest subspace containing the given points (canonical form).
Subspace span(const std::vector<Vec>& points, const FieldCtx& f);

/// Subspace from basis rows, canonicalized.  Throws if rows are dependent
/// when `require_independent` is set.
Subspace subspace_from_rows(const std::vector<Vec>& rows, const FieldCtx& f,
                            bool require_independent = false);

bool contains(const Subspace& s, const Vec& point, const FieldCtx& f);
bool subspace_contains(const Subspace& outer, const Subspace& inner,
                       const FieldCtx& f);

/// (q^(n+1) - 1)/(q - 1).
long long num_points_pg(int n, long long q);

/// Number of lines of PG(n,q) (Gaussian binomial [n+1 choose 2]_q).
long long num_lines_pg(int n, long long q);

/// All points of PG(n,q), each exactly once, in lexicographic order on
/// the normalized coordinate vector (element encoding order).
std::vector<Vec> enumerate_points(int n, const FieldCtx& f);
void for_each_point(int n, const FieldCtx& f,
                    const std::function<void(const Vec&)>& fn);

/// Points inside a subspace, lexicographic order.
std::vector<Vec> points_of(const Subspace& s, const FieldCtx& f);

/// The q+1 points of a line, lexicographic order.
std::vector<Vec> points_of_line(const Subspace& line, const FieldCtx& f);

/// All lines inside `s`, each exactly once.  A line is emitted for the
/// lexicographically minimal pair of points generating it, which makes
/// the order deterministic.
void for_each_line(const Subspace& s, const FieldCtx& f,
                   const std::function<void(const Subspace&)>& fn);
std::vector<Subspace> enumerate_lines(const Subspace& s, const FieldCtx& f);

/// The full space PG(n,q) as a Subspace.
Subspace whole_space(int n, const FieldCtx& f);

std::string vec_to_string(const Vec& v);
Vec parse_vec(const std::string& text, const FieldCtx& f);

}  // namespace vrc
