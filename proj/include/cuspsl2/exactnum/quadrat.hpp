#pragma once

#include <iosfwd>
#include <string>

#include "cuspsl2/exactnum/rat.hpp"

namespace cuspsl2 {

// Element base + coeff * sqrt(d) of the quadratic field Q(sqrt d).
// d is a squarefree integer other than 0 and 1; mixing radicands throws.
class QuadRat {
 public:
  QuadRat(Rat base, Rat coeff, long radicand);
  static QuadRat rational(const Rat& r, long radicand) { return QuadRat(r, Rat(0), radicand); }
  static QuadRat sqrt_of(long radicand) { return QuadRat(Rat(0), Rat(1), radicand); }

  const Rat& base() const { return base_; }
  const Rat& coeff() const { return coeff_; }
  long radicand() const { return d_; }

  bool is_zero() const { return base_.is_zero() && coeff_.is_zero(); }
  bool is_rational() const { return coeff_.is_zero(); }

  // The nontrivial automorphism sqrt(d) -> -sqrt(d).
  QuadRat conj() const { return QuadRat(base_, -coeff_, d_, Trusted{}); }
  Rat norm() const { return base_ * base_ - Rat(d_) * coeff_ * coeff_; }
  QuadRat inverse() const;
  std::string str() const;

  QuadRat& operator+=(const QuadRat& o);
  QuadRat& operator-=(const QuadRat& o);
  QuadRat& operator*=(const QuadRat& o);
  QuadRat& operator/=(const QuadRat& o);

  friend QuadRat operator+(QuadRat a, const QuadRat& b) { return a += b; }
  friend QuadRat operator-(QuadRat a, const QuadRat& b) { return a -= b; }
  friend QuadRat operator*(QuadRat a, const QuadRat& b) { return a *= b; }
  friend QuadRat operator/(QuadRat a, const QuadRat& b) { return a /= b; }
  QuadRat operator-() const { return QuadRat(-base_, -coeff_, d_, Trusted{}); }

  friend bool operator==(const QuadRat& a, const QuadRat& b) {
    return a.d_ == b.d_ && a.base_ == b.base_ && a.coeff_ == b.coeff_;
  }

 private:
  struct Trusted {};
  QuadRat(Rat base, Rat coeff, long radicand, Trusted)
      : base_(std::move(base)), coeff_(std::move(coeff)), d_(radicand) {}
  void require_same_field(const QuadRat& o) const;

  Rat base_;
  Rat coeff_;
  long d_;
};

std::ostream& operator<<(std::ostream& os, const QuadRat& q);

bool is_squarefree(long d);

inline QuadRat one_like(const QuadRat& q) { return QuadRat::rational(Rat(1), q.radicand()); }
inline QuadRat zero_like(const QuadRat& q) { return QuadRat::rational(Rat(0), q.radicand()); }

}  // namespace cuspsl2
