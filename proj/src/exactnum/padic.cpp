#include "cuspsl2/exactnum/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/exactnum/modarith.hpp"

namespace cuspsl2 {

namespace {

int strip_p(std::uint64_t& x, std::uint32_t p) {
  int k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

std::uint64_t residue_of(const mpz_class& z, std::uint64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), m);
  return r.get_ui();
}

}  // namespace

PadicApprox PadicApprox::from_parts(std::uint32_t p, int valuation, std::uint64_t unit, int precision) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p-adic prime must be prime");
  if (precision < 1) throw std::invalid_argument("relative precision must be positive");
  const std::uint64_t m = checked_pow(p, precision);
  unit %= m;
  if (unit % p == 0) throw std::invalid_argument("p-adic unit part divisible by p");
  return PadicApprox(p, false, valuation, unit, precision);
}

PadicApprox PadicApprox::zero(std::uint32_t p, int absolute_precision) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p-adic prime must be prime");
  return PadicApprox(p, true, absolute_precision, 0, 0);
}

PadicApprox PadicApprox::from_integer(std::int64_t x, std::uint32_t p, int precision) {
  return from_rational(Rat(x), p, precision);
}

PadicApprox PadicApprox::from_rational(const Rat& r, std::uint32_t p, int precision) {
  if (r.is_zero()) return zero(p, precision);
  const int v = r.valuation(p);
  mpz_class num = r.numerator();
  mpz_class den = r.denominator();
  mpz_class pp(p);
  while (mpz_divisible_p(num.get_mpz_t(), pp.get_mpz_t())) num /= p;
  while (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t())) den /= p;
  const std::uint64_t m = checked_pow(p, precision);
  const std::uint64_t u = mulmod(residue_of(num, m), invmod(residue_of(den, m), m), m);
  return from_parts(p, v, u, precision);
}

void PadicApprox::require_same_prime(const PadicApprox& o) const {
  if (p_ != o.p_) throw std::invalid_argument("p-adic values for different primes");
}

std::uint64_t PadicApprox::residue(int k) const {
  if (val_ < 0 && !zero_) throw NotInModel("residue of a non-integral p-adic value");
  if (k <= 0) return 0;
  if (absolute_precision() < k) throw InsufficientPrecision("p-adic value not known modulo p^k");
  if (zero_ || val_ >= k) return 0;
  const std::uint64_t m = checked_pow(p_, k);
  return mulmod(checked_pow(p_, val_), unit_, m);
}

PadicApprox PadicApprox::shifted(int k) const {
  PadicApprox r = *this;
  r.val_ += k;
  return r;
}

PadicApprox PadicApprox::truncated(int absolute_precision) const {
  if (absolute_precision >= this->absolute_precision()) return *this;
  if (zero_ || absolute_precision <= val_) return zero(p_, absolute_precision);
  const int prec = absolute_precision - val_;
  return PadicApprox(p_, false, val_, unit_ % checked_pow(p_, prec), prec);
}

bool PadicApprox::agrees_with(const PadicApprox& o) const {
  require_same_prime(o);
  const int k = std::min(absolute_precision(), o.absolute_precision());
  return truncated(k) == o.truncated(k);
}

std::string PadicApprox::str() const {
  std::ostringstream os;
  if (!zero_) os << p_ << "^" << val_ << "*" << unit_ << " + ";
  os << "O(" << p_ << "^" << absolute_precision() << ")";
  return os.str();
}

PadicApprox PadicApprox::operator-() const {
  if (zero_) return *this;
  const std::uint64_t m = checked_pow(p_, prec_);
  return PadicApprox(p_, false, val_, m - unit_, prec_);
}

PadicApprox& PadicApprox::operator+=(const PadicApprox& o) {
  require_same_prime(o);
  const int abs = std::min(absolute_precision(), o.absolute_precision());
  if (o.zero_ || zero_) {
    const PadicApprox& other = zero_ ? o : *this;
    *this = other.truncated(abs);
    return *this;
  }
  const PadicApprox& lo = val_ <= o.val_ ? *this : o;
  const PadicApprox& hi = val_ <= o.val_ ? o : *this;
  const int rel = abs - lo.val_;
  const std::uint64_t m = checked_pow(p_, rel);
  std::uint64_t s = lo.unit_ % m;
  const int gap = hi.val_ - lo.val_;
  if (gap < rel) s = (s + mulmod(checked_pow(p_, gap), hi.unit_ % m, m)) % m;
  if (s == 0) {
    *this = zero(p_, abs);
    return *this;
  }
  // Cancellation of the leading digits costs relative precision.
  const int k = strip_p(s, p_);
  *this = PadicApprox(p_, false, lo.val_ + k, s, rel - k);
  return *this;
}

PadicApprox& PadicApprox::operator*=(const PadicApprox& o) {
  require_same_prime(o);
  if (zero_ || o.zero_) {
    // For zero, val_ already holds the absolute precision.
    *this = zero(p_, val_ + o.val_);
    return *this;
  }
  const int prec = std::min(prec_, o.prec_);
  const std::uint64_t m = checked_pow(p_, prec);
  *this = PadicApprox(p_, false, val_ + o.val_, mulmod(unit_ % m, o.unit_ % m, m), prec);
  return *this;
}

PadicApprox& PadicApprox::operator/=(const PadicApprox& o) { return *this *= padic_invert(o); }

PadicApprox padic_invert(const PadicApprox& x) {
  if (x.is_zero()) throw InvertZero("inverse of a p-adic value indistinguishable from zero");
  const std::uint64_t m = checked_pow(x.prime(), x.precision());
  return PadicApprox::from_parts(x.prime(), -x.valuation(), invmod(x.unit(), m), x.precision());
}

std::ostream& operator<<(std::ostream& os, const PadicApprox& x) { return os << x.str(); }

PadicApprox one_like(const PadicApprox& x) {
  const int prec = std::max({x.precision(), x.absolute_precision(), 1});
  return PadicApprox::from_parts(x.prime(), 0, 1, prec);
}

PadicApprox zero_like(const PadicApprox& x) {
  const int prec = std::max({x.precision(), x.absolute_precision(), 1});
  return PadicApprox::zero(x.prime(), prec);
}

}  // namespace cuspsl2
