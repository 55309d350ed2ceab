#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cuspsl2 {

// Exact rational number in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value);  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(const mpq_class& q);

  // Accepts "n" or "n/d".
  static Rat parse(const std::string& text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat inverse() const;
  // Largest k with p^k dividing the value; the value must be nonzero.
  int valuation(unsigned long p) const;
  double to_double() const { return q_.get_d(); }
  std::string str() const { return q_.get_str(); }

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

// Exact square root when the value is the square of a rational.
bool rational_sqrt(const Rat& r, Rat& root);

inline Rat one_like(const Rat&) { return Rat(1); }
inline Rat zero_like(const Rat&) { return Rat(0); }

}  // namespace cuspsl2
