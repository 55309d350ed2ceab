#pragma once

#include <ostream>
#include <stdexcept>
#include <utility>

#include "cuspsl2/exactnum/fp.hpp"
#include "cuspsl2/exactnum/padic.hpp"
#include "cuspsl2/exactnum/quadrat.hpp"
#include "cuspsl2/exactnum/rat.hpp"
#include "cuspsl2/exactnum/zpn.hpp"

namespace cuspsl2 {

// Plain 2x2 matrix [[a, b], [c, d]] over a commutative ring.
template <class R>
struct Mat2 {
  R a, b, c, d;

  R det() const { return a * d - b * c; }
  R trace() const { return a + d; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// (d, -b, -c, a); the inverse when det = 1.
template <class R>
Mat2<R> adjugate(const Mat2<R>& m) {
  return {m.d, -m.b, -m.c, m.a};
}

// Matrices over Q_p, known to finite precision.
using PMat = Mat2<PadicApprox>;

// Element of SL2(R); the determinant is checked on construction.
template <class R>
class SL2Elem {
 public:
  SL2Elem(R a, R b, R c, R d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (!(m_.det() == one_like(m_.a))) throw std::invalid_argument("matrix does not have determinant 1");
  }
  explicit SL2Elem(const Mat2<R>& m) : SL2Elem(m.a, m.b, m.c, m.d) {}

  static SL2Elem identity(const R& sample) {
    return SL2Elem(one_like(sample), zero_like(sample), zero_like(sample), one_like(sample), Trusted{});
  }

  const R& a() const { return m_.a; }
  const R& b() const { return m_.b; }
  const R& c() const { return m_.c; }
  const R& d() const { return m_.d; }
  const Mat2<R>& matrix() const { return m_; }

  R trace() const { return m_.a + m_.d; }
  SL2Elem inverse() const { return SL2Elem(m_.d, -m_.b, -m_.c, m_.a, Trusted{}); }
  SL2Elem operator-() const { return SL2Elem(-m_.a, -m_.b, -m_.c, -m_.d, Trusted{}); }
  // g * this * g^{-1}
  SL2Elem conjugated_by(const SL2Elem& g) const { return g * *this * g.inverse(); }

  friend SL2Elem operator*(const SL2Elem& x, const SL2Elem& y) { return SL2Elem(x.m_ * y.m_, Trusted{}); }
  friend bool operator==(const SL2Elem& x, const SL2Elem& y) { return x.m_ == y.m_; }

 private:
  struct Trusted {};
  SL2Elem(R a, R b, R c, R d, Trusted) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
  SL2Elem(Mat2<R> m, Trusted) : m_(std::move(m)) {}

  Mat2<R> m_;
};

template <class R>
std::ostream& operator<<(std::ostream& os, const SL2Elem<R>& g) {
  return os << "(" << g.a() << "," << g.b() << "," << g.c() << "," << g.d() << ")";
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Mat2<R>& g) {
  return os << "(" << g.a << "," << g.b << "," << g.c << "," << g.d << ")";
}

using SL2Fp = SL2Elem<FpElem>;
using SL2Zpn = SL2Elem<ZpnElem>;

inline SL2Fp make_sl2_fp(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t p) {
  return SL2Fp(FpElem(a, p), FpElem(b, p), FpElem(c, p), FpElem(d, p));
}

inline SL2Zpn make_sl2_zpn(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t p,
                           int n) {
  return SL2Zpn(ZpnElem(a, p, n), ZpnElem(b, p, n), ZpnElem(c, p, n), ZpnElem(d, p, n));
}

// Reduction Z/p^n -> F_p of each entry.
SL2Fp to_residue_field(const SL2Zpn& g);
// Reduction Z/p^n -> Z/p^m, m <= n.
SL2Zpn reduce_level(const SL2Zpn& g, int m);

// Packs the entries of g into one integer; injective for a fixed ring.
std::uint64_t encode(const SL2Zpn& g);
std::uint64_t encode(const SL2Fp& g);

PMat pmat_from_rationals(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::uint32_t p,
                         int precision = PadicApprox::kDefaultPrecision);

}  // namespace cuspsl2
