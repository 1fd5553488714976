#include "verocensus/gf.hpp"

#include <algorithm>

namespace vrc {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, degree 0 first.
using Poly = std::vector<int>;

int deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

Poly poly_mod(Poly f, const Poly& m, int p) {
  const int dm = deg(m);
  for (int i = deg(f); i >= dm; --i) {
    if (f[i] == 0) continue;
    // m is monic: subtract f[i] * x^(i-dm) * m.
    const int c = f[i];
    for (int j = 0; j <= dm; ++j) {
      int& t = f[i - dm + j];
      t = ((t - c * m[j]) % p + p * p) % p;
    }
  }
  f.resize(std::max(dm, 1));
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Trial division by every monic polynomial of degree 1..h/2.
bool is_irreducible(const Poly& m, int p) {
  const int h = deg(m);
  if (h == 1) return true;
  for (int d = 1; 2 * d <= h; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      long long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      if (deg(poly_mod(m, g, p)) < 0) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree h over GF(p),
// comparing coefficient tuples (c0, c1, ..., c_{h-1}).
Poly smallest_irreducible(int p, int h) {
  long long count = 1;
  for (int i = 0; i < h; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly m(h + 1, 0);
    m[h] = 1;
    // c0 varies slowest so increasing `code` scans (c0,..,c_{h-1}) in
    // lex order.
    long long c = code;
    for (int i = h - 1; i >= 0; --i) {
      m[i] = static_cast<int>(c % p);
      c /= p;
    }
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Poly decode(Fel a, int p, int h) {
  Poly f(h, 0);
  int v = a;
  for (int i = 0; i < h; ++i) {
    f[i] = v % p;
    v /= p;
  }
  return f;
}

Fel encode(const Poly& f, int p, int h) {
  long long v = 0, w = 1;
  for (int i = 0; i < h; ++i) {
    v += (i < static_cast<int>(f.size()) ? f[i] : 0) * w;
    w *= p;
  }
  return static_cast<Fel>(v);
}

}  // namespace

FieldCtx::FieldCtx(int p, int h, int bound) : p_(p), h_(h) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (h < 1) throw std::invalid_argument("h must be >= 1");
  long long q = 1;
  for (int i = 0; i < h; ++i) {
    q *= p;
    if (q > bound)
      throw std::invalid_argument("field order " + std::to_string(q) +
                                  " exceeds bound " + std::to_string(bound));
  }
  q_ = static_cast<int>(q);

  Poly red = smallest_irreducible(p, h);
  red_.assign(red.begin(), red.begin() + h);

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (Fel a = 0; a < q_; ++a) {
    const Poly fa = decode(a, p, h);
    Poly na(h, 0);
    for (int i = 0; i < h; ++i) na[i] = (p - fa[i]) % p;
    neg_[a] = encode(na, p, h);
    for (Fel b = 0; b < q_; ++b) {
      const Poly fb = decode(b, p, h);
      Poly s(h, 0);
      for (int i = 0; i < h; ++i) s[i] = (fa[i] + fb[i]) % p;
      add_[idx(a, b)] = encode(s, p, h);
      mul_[idx(a, b)] = encode(poly_mod(poly_mul(fa, fb, p), red, p), p, h);
    }
  }
  for (Fel a = 1; a < q_; ++a)
    for (Fel b = 1; b < q_; ++b)
      if (mul_[idx(a, b)] == 1) {
        inv_[a] = b;
        break;
      }

  square_.assign(q_, 0);
  for (int b = 0; b < q_; ++b) square_[mul_[idx(b, b)]] = 1;

  frob_.resize(q_);
  trace_.resize(q_);
  for (Fel a = 0; a < q_; ++a) {
    Fel x = a;
    for (int i = 1; i < p; ++i) x = mul_[idx(x, a)];  // a^p
    frob_[a] = x;
  }
  for (Fel a = 0; a < q_; ++a) {
    Fel t = a, x = a;
    for (int i = 1; i < h; ++i) {
      x = frob_[x];
      t = add_[idx(t, x)];
    }
    trace_[a] = t;
  }

  // Discrete log tables from the smallest multiplicative generator.
  log_.assign(q_, 0);
  exp_.assign(q_ > 1 ? q_ - 1 : 1, 1);
  for (Fel g = 1; g < q_; ++g) {
    Fel x = 1;
    int order = 0;
    do {
      x = mul_[idx(x, g)];
      ++order;
    } while (x != 1);
    if (order == q_ - 1) {
      gen_ = g;
      break;
    }
  }
  if (q_ > 2 && gen_ == 0) throw std::logic_error("no primitive element");
  if (q_ == 2) gen_ = 1;
  Fel x = 1;
  for (int e = 0; e < q_ - 1; ++e) {
    exp_[e] = x;
    log_[x] = static_cast<Fel>(e);
    x = mul_[idx(x, gen_)];
  }
}

Fel FieldCtx::inv(Fel a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

Fel FieldCtx::pow(Fel a, long long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("inverse of zero");
    return e == 0 ? Fel{1} : Fel{0};
  }
  const long long m = q_ - 1;
  const long long r = ((e % m) + m) % m;
  return exp_[(r * log_[a]) % m];
}

Fel FieldCtx::from_int(long long n) const {
  long long r = ((n % p_) + p_) % p_;
  return static_cast<Fel>(r);
}

RootProfile FieldCtx::quadratic_root_profile(Fel a, Fel b, Fel c) const {
  if (a == 0) throw std::invalid_argument("leading coefficient must be nonzero");
  if (even()) {
    if (b == 0) return RootProfile::OneRoot;
    const Fel t = trace_to_prime(div(mul(a, c), mul(b, b)));
    return t == 0 ? RootProfile::TwoRoots : RootProfile::NoRoot;
  }
  const Fel four = from_int(4);
  const Fel disc = sub(mul(b, b), mul(four, mul(a, c)));
  if (disc == 0) return RootProfile::OneRoot;
  return is_square(disc) ? RootProfile::TwoRoots : RootProfile::NoRoot;
}

}  // namespace vrc
