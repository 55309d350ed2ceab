#include "cuspsl2/exactnum/fp.hpp"

#include <ostream>
#include <stdexcept>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/exactnum/modarith.hpp"

namespace cuspsl2 {

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit to keep the Bezout coefficients exact.
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InvertZero("element is not invertible modulo m");
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

FpElem::FpElem(std::int64_t value, std::uint32_t p) : v_(0), p_(p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("FpElem needs an odd prime");
  v_ = static_cast<std::uint32_t>(reduce_signed(value, p));
}

void FpElem::require_same_field(const FpElem& o) const {
  if (p_ != o.p_) throw std::invalid_argument("residues modulo different primes");
}

FpElem FpElem::inverse() const {
  if (v_ == 0) throw InvertZero("inverse of zero in F_p");
  return FpElem(static_cast<std::uint32_t>(powmod(v_, p_ - 2, p_)), p_, Reduced{});
}

FpElem FpElem::pow(std::uint64_t e) const {
  return FpElem(static_cast<std::uint32_t>(powmod(v_, e, p_)), p_, Reduced{});
}

FpElem& FpElem::operator+=(const FpElem& o) {
  require_same_field(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + o.v_) % p_);
  return *this;
}

FpElem& FpElem::operator-=(const FpElem& o) {
  require_same_field(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p_ - o.v_) % p_);
  return *this;
}

FpElem& FpElem::operator*=(const FpElem& o) {
  require_same_field(o);
  v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const FpElem& x) { return os << x.value(); }

int legendre_symbol(const FpElem& x) {
  if (x.is_zero()) return 0;
  return powmod(x.value(), (x.prime() - 1) / 2, x.prime()) == 1 ? 1 : -1;
}

int legendre_symbol(std::int64_t x, std::uint32_t p) { return legendre_symbol(FpElem(x, p)); }

std::uint32_t smallest_nonresidue(std::uint32_t p) {
  for (std::uint32_t t = 2; t < p; ++t) {
    if (powmod(t, (p - 1) / 2, p) != 1) return t;
  }
  throw std::invalid_argument("no non-residue: p is not an odd prime");
}

bool sqrt_in_fp(const FpElem& x, FpElem& root) {
  const std::uint32_t p = x.prime();
  if (x.is_zero()) {
    root = x;
    return true;
  }
  if (legendre_symbol(x) != 1) return false;
  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  const std::uint64_t z = smallest_nonresidue(p);
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t r = powmod(x.value(), (q + 1) / 2, p);
  std::uint64_t t = powmod(x.value(), q, p);
  int m = s;
  while (t != 1) {
    int i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = b * b % p;
    r = r * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  root = FpElem(static_cast<std::int64_t>(r), p);
  return true;
}

Fp2Elem::Fp2Elem(const FpElem& u) : Fp2Elem(u, FpElem(0, u.prime())) {}

Fp2Elem::Fp2Elem(const FpElem& u, const FpElem& v) : u_(u), v_(v), eps_(smallest_nonresidue(u.prime())) {
  if (u.prime() != v.prime()) throw std::invalid_argument("F_{p^2} coordinates over different primes");
}

Fp2Elem Fp2Elem::inverse() const {
  // (u + v r)^{-1} = (u - v r) / (u^2 - eps v^2)
  const FpElem eps(eps_, prime());
  FpElem n = u_ * u_ - eps * v_ * v_;
  if (n.is_zero()) throw InvertZero("inverse of zero in F_{p^2}");
  FpElem ni = n.inverse();
  return Fp2Elem(u_ * ni, -v_ * ni, eps_);
}

Fp2Elem& Fp2Elem::operator+=(const Fp2Elem& o) {
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

Fp2Elem& Fp2Elem::operator-=(const Fp2Elem& o) {
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

Fp2Elem& Fp2Elem::operator*=(const Fp2Elem& o) {
  const FpElem eps(eps_, prime());
  FpElem u = u_ * o.u_ + eps * v_ * o.v_;
  FpElem v = u_ * o.v_ + v_ * o.u_;
  u_ = u;
  v_ = v;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Fp2Elem& x) {
  return os << "(" << x.u() << "," << x.v() << ")";
}

Fp2Elem sqrt_in_fp2(const FpElem& t) {
  const std::uint32_t p = t.prime();
  FpElem root(0, p);
  if (sqrt_in_fp(t, root)) {
    FpElem other = -root;
    if (other.value() < root.value()) root = other;
    return Fp2Elem(root);
  }
  // t = eps * r with r a square, so sqrt(t) = s * sqrt(eps) where s^2 = r.
  const FpElem eps(smallest_nonresidue(p), p);
  FpElem s(0, p);
  sqrt_in_fp(t / eps, s);
  FpElem other = -s;
  if (other.value() < s.value()) s = other;
  return Fp2Elem(FpElem(0, p), s);
}

}  // namespace cuspsl2
