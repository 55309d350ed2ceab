#pragma once

#include <cstdint>
#include <iosfwd>

namespace cuspsl2 {

// Residue modulo p^n; units are exactly the residues prime to p.
class ZpnElem {
 public:
  ZpnElem(std::int64_t value, std::uint32_t p, int n);

  std::uint64_t value() const { return v_; }
  std::uint32_t prime() const { return p_; }
  int level() const { return n_; }
  std::uint64_t modulus() const { return q_; }

  bool is_zero() const { return v_ == 0; }
  bool is_unit() const { return v_ % p_ != 0; }
  // Largest k <= n with p^k dividing the residue.
  int valuation() const;

  ZpnElem inverse() const;  // throws DivisionByNonUnit on non-units
  // Image in Z/p^m for m <= n.
  ZpnElem reduce(int m) const;

  ZpnElem& operator+=(const ZpnElem& o);
  ZpnElem& operator-=(const ZpnElem& o);
  ZpnElem& operator*=(const ZpnElem& o);
  ZpnElem& operator/=(const ZpnElem& o) { return *this *= o.inverse(); }

  friend ZpnElem operator+(ZpnElem a, const ZpnElem& b) { return a += b; }
  friend ZpnElem operator-(ZpnElem a, const ZpnElem& b) { return a -= b; }
  friend ZpnElem operator*(ZpnElem a, const ZpnElem& b) { return a *= b; }
  friend ZpnElem operator/(ZpnElem a, const ZpnElem& b) { return a /= b; }
  ZpnElem operator-() const;

  friend bool operator==(const ZpnElem& a, const ZpnElem& b) {
    return a.q_ == b.q_ && a.p_ == b.p_ && a.v_ == b.v_;
  }

 private:
  struct Reduced {};
  ZpnElem(std::uint64_t v, std::uint32_t p, int n, std::uint64_t q, Reduced) : v_(v), q_(q), p_(p), n_(n) {}
  void require_same_ring(const ZpnElem& o) const;

  std::uint64_t v_;
  std::uint64_t q_;
  std::uint32_t p_;
  int n_;
};

std::ostream& operator<<(std::ostream& os, const ZpnElem& x);

inline ZpnElem one_like(const ZpnElem& x) { return ZpnElem(1, x.prime(), x.level()); }
inline ZpnElem zero_like(const ZpnElem& x) { return ZpnElem(0, x.prime(), x.level()); }

}  // namespace cuspsl2
