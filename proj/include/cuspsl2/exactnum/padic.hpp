#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cuspsl2/exactnum/rat.hpp"

namespace cuspsl2 {

// Approximation p^v * u + O(p^(v+N)) of an element of Q_p, u a unit known
// modulo p^N.  A value indistinguishable from zero is O(p^k) and keeps only
// its absolute precision k.
class PadicApprox {
 public:
  static constexpr int kDefaultPrecision = 8;

  static PadicApprox from_integer(std::int64_t x, std::uint32_t p, int precision = kDefaultPrecision);
  static PadicApprox from_rational(const Rat& r, std::uint32_t p, int precision = kDefaultPrecision);
  static PadicApprox zero(std::uint32_t p, int absolute_precision);
  // p^valuation * unit with unit prime to p and taken modulo p^precision.
  static PadicApprox from_parts(std::uint32_t p, int valuation, std::uint64_t unit, int precision);

  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return zero_; }
  // For zero this is the absolute precision, a lower bound for the valuation.
  int valuation() const { return val_; }
  // Relative precision N; zero has none.
  int precision() const { return zero_ ? 0 : prec_; }
  int absolute_precision() const { return zero_ ? val_ : val_ + prec_; }
  std::uint64_t unit() const { return unit_; }
  bool is_integral() const { return val_ >= 0; }

  // Residue modulo p^k of an integral value; needs absolute precision >= k.
  std::uint64_t residue(int k) const;
  // Multiplication by p^k, exact.
  PadicApprox shifted(int k) const;
  // Drop digits beyond absolute precision k.
  PadicApprox truncated(int absolute_precision) const;
  // True when the two approximations agree to the coarser precision.
  bool agrees_with(const PadicApprox& o) const;
  std::string str() const;

  PadicApprox& operator+=(const PadicApprox& o);
  PadicApprox& operator-=(const PadicApprox& o) { return *this += -o; }
  PadicApprox& operator*=(const PadicApprox& o);
  PadicApprox& operator/=(const PadicApprox& o);

  friend PadicApprox operator+(PadicApprox a, const PadicApprox& b) { return a += b; }
  friend PadicApprox operator-(PadicApprox a, const PadicApprox& b) { return a -= b; }
  friend PadicApprox operator*(PadicApprox a, const PadicApprox& b) { return a *= b; }
  friend PadicApprox operator/(PadicApprox a, const PadicApprox& b) { return a /= b; }
  PadicApprox operator-() const;

  friend bool operator==(const PadicApprox& a, const PadicApprox& b) {
    return a.p_ == b.p_ && a.zero_ == b.zero_ && a.val_ == b.val_ && a.prec_ == b.prec_ && a.unit_ == b.unit_;
  }

 private:
  PadicApprox(std::uint32_t p, bool zero, int val, std::uint64_t unit, int prec)
      : p_(p), zero_(zero), val_(val), unit_(unit), prec_(prec) {}
  void require_same_prime(const PadicApprox& o) const;

  std::uint32_t p_;
  bool zero_;
  int val_;
  std::uint64_t unit_;
  int prec_;
};

PadicApprox padic_invert(const PadicApprox& x);

std::ostream& operator<<(std::ostream& os, const PadicApprox& x);

// Ring helpers for generic matrix code; precision follows the argument.
PadicApprox one_like(const PadicApprox& x);
PadicApprox zero_like(const PadicApprox& x);

}  // namespace cuspsl2
