#include "verocensus/pglinalg.hpp"

#include <algorithm>
#include <sstream>

namespace vrc {

void Mat::append_row(const Vec& v) {
  if (rows == 0 && cols == 0) cols = static_cast<int>(v.size());
  if (static_cast<int>(v.size()) != cols)
    throw std::invalid_argument("row length mismatch");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

int rref(Mat& m, const FieldCtx& f) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    const Fel s = f.inv(m.at(rank, col));
    for (int c = col; c < m.cols; ++c) m.at(rank, c) = f.mul(s, m.at(rank, c));
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const Fel t = m.at(r, col);
      if (t == 0) continue;
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(t, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

int matrix_rank(Mat m, const FieldCtx& f) { return rref(m, f); }

Mat nullspace(const Mat& m, const FieldCtx& f) {
  Mat r = m;
  const int rank = rref(r, f);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0; row < rank; ++row)
    for (int c = 0; c < m.cols; ++c)
      if (r.at(row, c) != 0) {
        pivot_col.push_back(c);
        is_pivot[c] = true;
        break;
      }
  Mat ns(0, m.cols);
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, 0);
    v[free] = 1;
    for (int row = 0; row < rank; ++row)
      v[pivot_col[row]] = f.neg(r.at(row, free));
    ns.append_row(v);
  }
  return ns;
}

Vec normalize_point(Vec v, const FieldCtx& f) {
  for (const Fel x : v)
    if (x != 0) {
      if (x != 1) {
        const Fel s = f.inv(x);
        for (Fel& y : v) y = f.mul(s, y);
      }
      return v;
    }
  throw std::invalid_argument("zero vector is not a projective point");
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Fel x) { return x == 0; });
}

std::string Subspace::key() const {
  std::string k;
  k.reserve(basis.a.size() + 2);
  k.push_back(static_cast<char>(basis.rows));
  k.push_back(static_cast<char>(basis.cols));
  for (const Fel x : basis.a) {
    // Big-endian so byte-lexicographic order matches entry order.
    k.push_back(static_cast<char>(x >> 8));
    k.push_back(static_cast<char>(x & 0xff));
  }
  return k;
}

Subspace subspace_from_rows(const std::vector<Vec>& rows, const FieldCtx& f,
                            bool require_independent) {
  if (rows.empty()) throw std::invalid_argument("empty generating set");
  Mat m(0, static_cast<int>(rows.front().size()));
  for (const Vec& v : rows) m.append_row(v);
  const int n = m.rows;
  const int rank = rref(m, f);
  if (require_independent && rank != n)
    throw std::invalid_argument("generators are linearly dependent");
  if (rank == 0) throw std::invalid_argument("span of zero vectors");
  Mat b(rank, m.cols);
  std::copy(m.a.begin(), m.a.begin() + static_cast<std::size_t>(rank) * m.cols,
            b.a.begin());
  return Subspace{b};
}

Subspace span(const std::vector<Vec>& points, const FieldCtx& f) {
  return subspace_from_rows(points, f);
}

bool contains(const Subspace& s, const Vec& point, const FieldCtx& f) {
  if (static_cast<int>(point.size()) != s.basis.cols)
    throw std::invalid_argument("ambient dimension mismatch");
  // Reduce the point against the RREF basis.
  Vec v = point;
  for (int row = 0; row < s.basis.rows; ++row) {
    int pc = -1;
    for (int c = 0; c < s.basis.cols; ++c)
      if (s.basis.at(row, c) != 0) {
        pc = c;
        break;
      }
    const Fel t = v[pc];
    if (t == 0) continue;
    for (int c = pc; c < s.basis.cols; ++c)
      v[c] = f.sub(v[c], f.mul(t, s.basis.at(row, c)));
  }
  return is_zero_vec(v);
}

bool subspace_contains(const Subspace& outer, const Subspace& inner,
                       const FieldCtx& f) {
  for (int r = 0; r < inner.basis.rows; ++r) {
    Vec v(inner.basis.cols);
    for (int c = 0; c < inner.basis.cols; ++c) v[c] = inner.basis.at(r, c);
    if (!contains(outer, v, f)) return false;
  }
  return true;
}

long long num_points_pg(int n, long long q) {
  long long t = 0, w = 1;
  for (int i = 0; i <= n; ++i) {
    t += w;
    w *= q;
  }
  return t;
}

long long num_lines_pg(int n, long long q) {
  // [n+1 choose 2]_q = (q^(n+1)-1)(q^n-1) / ((q^2-1)(q-1)).
  // Group the factors so each quotient is integral: q^2-1 divides
  // q^k-1 exactly when k is even.
  long long qn1 = 1, qn = 1;
  for (int i = 0; i < n + 1; ++i) qn1 *= q;
  for (int i = 0; i < n; ++i) qn *= q;
  if (n % 2 == 0) return (qn1 - 1) / (q - 1) * ((qn - 1) / (q * q - 1));
  return (qn1 - 1) / (q * q - 1) * ((qn - 1) / (q - 1));
}

void for_each_point(int n, const FieldCtx& f,
                    const std::function<void(const Vec&)>& fn) {
  // Lexicographic on normalized vectors: vectors whose first nonzero
  // coordinate is 1, smallest first.  Walk positions of the leading 1
  // from the right.
  Vec v(n + 1, 0);
  for (int lead = n; lead >= 0; --lead) {
    v.assign(n + 1, 0);
    v[lead] = 1;
    const int tail = n - lead;
    long long count = 1;
    for (int i = 0; i < tail; ++i) count *= f.q();
    for (long long code = 0; code < count; ++code) {
      long long c = code;
      for (int i = n; i > lead; --i) {
        v[i] = static_cast<Fel>(c % f.q());
        c /= f.q();
      }
      fn(v);
    }
  }
}

std::vector<Vec> enumerate_points(int n, const FieldCtx& f) {
  std::vector<Vec> pts;
  pts.reserve(static_cast<std::size_t>(num_points_pg(n, f.q())));
  for_each_point(n, f, [&](const Vec& v) { pts.push_back(v); });
  return pts;
}

std::vector<Vec> points_of(const Subspace& s, const FieldCtx& f) {
  const int k = s.dim();
  std::vector<Vec> pts;
  pts.reserve(static_cast<std::size_t>(num_points_pg(k, f.q())));
  for_each_point(k, f, [&](const Vec& coeff) {
    Vec v(s.basis.cols, 0);
    for (int r = 0; r <= k; ++r) {
      if (coeff[r] == 0) continue;
      for (int c = 0; c < s.basis.cols; ++c)
        v[c] = f.add(v[c], f.mul(coeff[r], s.basis.at(r, c)));
    }
    pts.push_back(normalize_point(std::move(v), f));
  });
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Vec> points_of_line(const Subspace& line, const FieldCtx& f) {
  return points_of(line, f);
}

void for_each_line(const Subspace& s, const FieldCtx& f,
                   const std::function<void(const Subspace&)>& fn) {
  const std::vector<Vec> pts = points_of(s, f);
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Emit the line through (pts[i], pts[j]) only when this is its
      // lexicographically minimal generating pair: pts[i] must be the
      // smallest point on the line and pts[j] the second smallest.
      // The other q-1 points are pts[i] + lam*pts[j], lam != 0.
      bool minimal = true;
      for (Fel lam = 1; lam < f.q() && minimal; ++lam) {
        Vec v(pts[i].size());
        for (std::size_t c = 0; c < v.size(); ++c)
          v[c] = f.add(pts[i][c], f.mul(lam, pts[j][c]));
        v = normalize_point(std::move(v), f);
        if (v < pts[j]) minimal = false;
      }
      if (!minimal) continue;
      fn(subspace_from_rows({pts[i], pts[j]}, f));
    }
  }
}

std::vector<Subspace> enumerate_lines(const Subspace& s, const FieldCtx& f) {
  std::vector<Subspace> lines;
  for_each_line(s, f, [&](const Subspace& l) { lines.push_back(l); });
  return lines;
}

Subspace whole_space(int n, const FieldCtx&) {
  Mat b(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) b.at(i, i) = 1;
  return Subspace{b};
}

std::string vec_to_string(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(v[i]);
  }
  return s;
}

Vec parse_vec(const std::string& text, const FieldCtx& f) {
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const long long x = std::stoll(item);
    if (x < 0 || x >= f.q())
      throw std::invalid_argument("element literal out of range: " + item);
    v.push_back(static_cast<Fel>(x));
  }
  return v;
}

}  // namespace vrc
