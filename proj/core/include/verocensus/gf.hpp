#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vrc {

/// A field element of GF(q), encoded as an integer in 0..q-1.
///
/// For q = p^h the encoding is positional base p: the element
/// c0 + c1*x + ... + c_{h-1}*x^{h-1} (mod the reduction polynomial) is
/// stored as the integer c0 + c1*p + ... + c_{h-1}*p^{h-1}.  The prime
/// subfield therefore occupies the encodings 0..p-1.
using Fel = std::uint16_t;

/// Root profile of a univariate quadratic over GF(q).
enum class RootProfile { NoRoot, OneRoot, TwoRoots };

/// Arithmetic context for GF(q), q = p^h, q <= bound (default 512).
///
/// All operations are table lookups after construction.  The reduction
/// polynomial is the lexicographically smallest monic irreducible of
/// degree h over GF(p), coefficients compared from degree 0 upwards,
/// which pins the element encoding across runs.  Instances are immutable
/// and safe to share between threads.
class FieldCtx {
public:
  static constexpr int kDefaultBound = 512;

  /// Builds the context.  Throws std::invalid_argument for non-prime p,
  /// h < 1, or p^h exceeding the bound.
  FieldCtx(int p, int h, int bound = kDefaultBound);

  int p() const { return p_; }
  int h() const { return h_; }
  int q() const { return q_; }
  bool even() const { return p_ == 2; }

  /// Reduction polynomial coefficients c0..c_{h-1} (the monic x^h term
  /// is implicit), each in 0..p-1.
  const std::vector<int>& reduction_poly() const { return red_; }

  Fel add(Fel a, Fel b) const { return add_[idx(a, b)]; }
  Fel sub(Fel a, Fel b) const { return add_[idx(a, neg_[b])]; }
  Fel neg(Fel a) const { return neg_[a]; }
  Fel mul(Fel a, Fel b) const { return mul_[idx(a, b)]; }
  Fel inv(Fel a) const;
  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }
  Fel pow(Fel a, long long e) const;

  /// The image of an integer under Z -> GF(p) <= GF(q).
  Fel from_int(long long n) const;

  /// True iff a = b^2 for some b; zero counts as a square.
  bool is_square(Fel a) const { return square_[a] != 0; }

  /// Trace onto the prime field: a + a^p + ... + a^(p^(h-1)).
  Fel trace_to_prime(Fel a) const { return trace_[a]; }

  /// Frobenius a -> a^p.
  Fel frobenius(Fel a) const { return frob_[a]; }

  /// Number of roots in GF(q) of a*x^2 + b*x + c with a != 0.
  /// Dispatches on the parity of q: the even case uses the trace
  /// criterion Tr(ac/b^2), the odd case the square class of b^2 - 4ac.
  RootProfile quadratic_root_profile(Fel a, Fel b, Fel c) const;

  /// A fixed generator of the multiplicative group (smallest encoding).
  Fel primitive_element() const { return gen_; }

private:
  std::size_t idx(Fel a, Fel b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  int p_ = 0, h_ = 0, q_ = 0;
  std::vector<int> red_;
  std::vector<Fel> add_, mul_, neg_, inv_, frob_, trace_;
  std::vector<std::uint8_t> square_;
  std::vector<Fel> log_, exp_;  // log_[0] unused
  Fel gen_ = 0;
};

}  // namespace vrc
