#include "cuspsl2/exactnum/zpn.hpp"

#include <ostream>
#include <stdexcept>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/exactnum/modarith.hpp"

namespace cuspsl2 {

ZpnElem::ZpnElem(std::int64_t value, std::uint32_t p, int n) : v_(0), q_(0), p_(p), n_(n) {
  if (p < 2 || n < 1) throw std::invalid_argument("Z/p^n needs p >= 2 and n >= 1");
  q_ = checked_pow(p, n);
  v_ = reduce_signed(value, q_);
}

void ZpnElem::require_same_ring(const ZpnElem& o) const {
  if (q_ != o.q_ || p_ != o.p_) throw std::invalid_argument("residues in different rings Z/p^n");
}

int ZpnElem::valuation() const {
  if (v_ == 0) return n_;
  int k = 0;
  for (std::uint64_t v = v_; v % p_ == 0; v /= p_) ++k;
  return k;
}

ZpnElem ZpnElem::inverse() const {
  if (!is_unit()) throw DivisionByNonUnit("inverting a non-unit of Z/p^n");
  return ZpnElem(invmod(v_, q_), p_, n_, q_, Reduced{});
}

ZpnElem ZpnElem::reduce(int m) const {
  if (m < 1 || m > n_) throw std::invalid_argument("reduction level out of range");
  std::uint64_t qm = checked_pow(p_, m);
  return ZpnElem(v_ % qm, p_, m, qm, Reduced{});
}

ZpnElem& ZpnElem::operator+=(const ZpnElem& o) {
  require_same_ring(o);
  v_ = (v_ + o.v_) % q_;
  return *this;
}

ZpnElem& ZpnElem::operator-=(const ZpnElem& o) {
  require_same_ring(o);
  v_ = (v_ + q_ - o.v_) % q_;
  return *this;
}

ZpnElem& ZpnElem::operator*=(const ZpnElem& o) {
  require_same_ring(o);
  v_ = mulmod(v_, o.v_, q_);
  return *this;
}

ZpnElem ZpnElem::operator-() const { return ZpnElem(v_ == 0 ? 0 : q_ - v_, p_, n_, q_, Reduced{}); }

std::ostream& operator<<(std::ostream& os, const ZpnElem& x) { return os << x.value(); }

}  // namespace cuspsl2
