#pragma once

#include <cstdint>
#include <iosfwd>

namespace cuspsl2 {

// Residue modulo an odd prime p, carried at runtime.
class FpElem {
 public:
  FpElem(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return v_; }
  std::uint32_t prime() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  FpElem inverse() const;
  FpElem pow(std::uint64_t e) const;

  FpElem& operator+=(const FpElem& o);
  FpElem& operator-=(const FpElem& o);
  FpElem& operator*=(const FpElem& o);
  FpElem& operator/=(const FpElem& o) { return *this *= o.inverse(); }

  friend FpElem operator+(FpElem a, const FpElem& b) { return a += b; }
  friend FpElem operator-(FpElem a, const FpElem& b) { return a -= b; }
  friend FpElem operator*(FpElem a, const FpElem& b) { return a *= b; }
  friend FpElem operator/(FpElem a, const FpElem& b) { return a /= b; }
  FpElem operator-() const { return FpElem(v_ == 0 ? 0 : p_ - v_, p_, Reduced{}); }

  friend bool operator==(const FpElem& a, const FpElem& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

 private:
  struct Reduced {};
  FpElem(std::uint32_t v, std::uint32_t p, Reduced) : v_(v), p_(p) {}
  void require_same_field(const FpElem& o) const;

  std::uint32_t v_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const FpElem& x);

// Legendre symbol: 0 for zero, +1 for nonzero squares, -1 otherwise.
int legendre_symbol(const FpElem& x);
int legendre_symbol(std::int64_t x, std::uint32_t p);

// Smallest positive non-residue; it fixes the model F_p[sqrt eps] of F_{p^2}.
std::uint32_t smallest_nonresidue(std::uint32_t p);

// Square root inside F_p, when one exists.
bool sqrt_in_fp(const FpElem& x, FpElem& root);

// u + v*sqrt(eps) in F_{p^2} with eps = smallest_nonresidue(p).
class Fp2Elem {
 public:
  explicit Fp2Elem(const FpElem& u);
  Fp2Elem(const FpElem& u, const FpElem& v);

  const FpElem& u() const { return u_; }
  const FpElem& v() const { return v_; }
  std::uint32_t prime() const { return u_.prime(); }
  std::uint32_t eps() const { return eps_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool in_base_field() const { return v_.is_zero(); }

  // u + v*p; used to break ties between the two square roots.
  std::uint64_t encoding() const { return u_.value() + std::uint64_t{v_.value()} * prime(); }

  // The p-power map, which is sqrt(eps) -> -sqrt(eps) in this model.
  Fp2Elem frobenius() const { return Fp2Elem(u_, -v_, eps_); }
  Fp2Elem inverse() const;

  Fp2Elem& operator+=(const Fp2Elem& o);
  Fp2Elem& operator-=(const Fp2Elem& o);
  Fp2Elem& operator*=(const Fp2Elem& o);
  Fp2Elem& operator/=(const Fp2Elem& o) { return *this *= o.inverse(); }

  friend Fp2Elem operator+(Fp2Elem a, const Fp2Elem& b) { return a += b; }
  friend Fp2Elem operator-(Fp2Elem a, const Fp2Elem& b) { return a -= b; }
  friend Fp2Elem operator*(Fp2Elem a, const Fp2Elem& b) { return a *= b; }
  friend Fp2Elem operator/(Fp2Elem a, const Fp2Elem& b) { return a /= b; }
  Fp2Elem operator-() const { return Fp2Elem(-u_, -v_, eps_); }

  friend bool operator==(const Fp2Elem& a, const Fp2Elem& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

 private:
  Fp2Elem(const FpElem& u, const FpElem& v, std::uint32_t eps) : u_(u), v_(v), eps_(eps) {}

  FpElem u_;
  FpElem v_;
  std::uint32_t eps_;
};

std::ostream& operator<<(std::ostream& os, const Fp2Elem& x);

// The square root of t in F_{p^2} with the smaller encoding.
Fp2Elem sqrt_in_fp2(const FpElem& t);

inline FpElem one_like(const FpElem& x) { return FpElem(1, x.prime()); }
inline FpElem zero_like(const FpElem& x) { return FpElem(0, x.prime()); }
inline Fp2Elem one_like(const Fp2Elem& x) { return Fp2Elem(FpElem(1, x.prime())); }
inline Fp2Elem zero_like(const Fp2Elem& x) { return Fp2Elem(FpElem(0, x.prime())); }

}  // namespace cuspsl2
