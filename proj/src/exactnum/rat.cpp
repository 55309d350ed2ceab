#include "cuspsl2/exactnum/rat.hpp"

#include <ostream>
#include <stdexcept>

#include "cuspsl2/errors.hpp"

namespace cuspsl2 {

Rat::Rat(long value) : q_(value) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvertZero("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat::Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rat Rat::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(text), mpz_class(1));
    return Rat(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: " + text);
  }
}

Rat Rat::inverse() const {
  if (is_zero()) throw InvertZero("inverse of zero rational");
  return Rat(mpq_class(1 / q_));
}

int Rat::valuation(unsigned long p) const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  auto count = [p](mpz_class z) {
    int k = 0;
    while (mpz_divisible_ui_p(z.get_mpz_t(), p)) {
      z /= p;
      ++k;
    }
    return k;
  };
  return count(q_.get_num()) - count(q_.get_den());
}

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvertZero("division by zero rational");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

bool rational_sqrt(const Rat& r, Rat& root) {
  if (r.sign() < 0) return false;
  mpz_class num = r.numerator();
  mpz_class den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  root = Rat(sqrt(num), sqrt(den));
  return true;
}

}  // namespace cuspsl2
