#pragma once

#include <cstdint>
#include <stdexcept>

namespace cuspsl2 {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1U;
  }
  return r;
}

// p^k, throwing when the result would not leave headroom for products.
inline std::uint64_t checked_pow(std::uint64_t p, int k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 62U) / p) throw std::overflow_error("prime power exceeds 2^62");
    r *= p;
  }
  return r;
}

// Inverse of a modulo m; a must be coprime to m.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

inline std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

}  // namespace cuspsl2
