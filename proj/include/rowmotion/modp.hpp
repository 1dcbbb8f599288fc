#pragma once

#include <cstdint>

namespace rowmotion::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// 2^61 - 1.  Reduction modulo a Mersenne prime needs no division.
inline constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

/// Arithmetic in F_p for a prime p < 2^62.  Operands are reduced residues.
class Field {
 public:
  constexpr explicit Field(u64 p = kMersenne61) : p_(p) {}

  constexpr u64 modulus() const { return p_; }

  u64 add(u64 x, u64 y) const {
    u64 s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 x, u64 y) const { return x >= y ? x - y : x + p_ - y; }
  u64 neg(u64 x) const { return x == 0 ? 0 : p_ - x; }
  u64 mul(u64 x, u64 y) const {
    u128 t = static_cast<u128>(x) * y;
    if (p_ == kMersenne61) {
      u64 r = static_cast<u64>(t & kMersenne61) + static_cast<u64>(t >> 61);
      r = (r & kMersenne61) + (r >> 61);
      return r >= kMersenne61 ? r - kMersenne61 : r;
    }
    return static_cast<u64>(t % p_);
  }
  /// Inverse of a nonzero residue (extended Euclid); 0 maps to 0.
  u64 inv(u64 x) const;
  u64 pow(u64 x, u64 e) const;
  /// Reduces a signed integer.
  u64 from_int(long long v) const;

 private:
  u64 p_;
};

/// Deterministic-base Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

}  // namespace rowmotion::modp
