#include "cuspsl2/exactnum/quadrat.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cuspsl2/errors.hpp"

namespace cuspsl2 {

bool is_squarefree(long d) {
  if (d == 0) return false;
  unsigned long m = d < 0 ? 0UL - static_cast<unsigned long>(d) : static_cast<unsigned long>(d);
  for (unsigned long f = 2; f * f <= m; ++f) {
    if (m % (f * f) == 0) return false;
  }
  return true;
}

QuadRat::QuadRat(Rat base, Rat coeff, long radicand)
    : base_(std::move(base)), coeff_(std::move(coeff)), d_(radicand) {
  if (radicand == 1 || !is_squarefree(radicand)) {
    throw std::invalid_argument("radicand must be squarefree and not 0 or 1");
  }
}

void QuadRat::require_same_field(const QuadRat& o) const {
  if (d_ != o.d_) throw std::invalid_argument("quadratic values over different fields");
}

QuadRat QuadRat::inverse() const {
  Rat n = norm();
  if (n.is_zero()) throw InvertZero("inverse of zero in quadratic field");
  return QuadRat(base_ / n, -coeff_ / n, d_, Trusted{});
}

std::string QuadRat::str() const {
  std::ostringstream os;
  os << base_ << (coeff_.sign() < 0 ? "-" : "+") << (coeff_.sign() < 0 ? -coeff_ : coeff_) << "*sqrt(" << d_
     << ")";
  return os.str();
}

QuadRat& QuadRat::operator+=(const QuadRat& o) {
  require_same_field(o);
  base_ += o.base_;
  coeff_ += o.coeff_;
  return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& o) {
  require_same_field(o);
  base_ -= o.base_;
  coeff_ -= o.coeff_;
  return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& o) {
  require_same_field(o);
  Rat b = base_ * o.base_ + Rat(d_) * coeff_ * o.coeff_;
  Rat c = base_ * o.coeff_ + coeff_ * o.base_;
  base_ = std::move(b);
  coeff_ = std::move(c);
  return *this;
}

QuadRat& QuadRat::operator/=(const QuadRat& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const QuadRat& q) { return os << q.str(); }

}  // namespace cuspsl2
