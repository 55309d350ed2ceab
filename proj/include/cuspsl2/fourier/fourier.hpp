#pragma once

#include <cstdint>
#include <vector>

#include "cuspsl2/liealg/lie.hpp"

namespace cuspsl2 {

// x -> exp(2 pi i x / p^n) on Z/p^n.
class AdditiveChar {
 public:
  AdditiveChar(std::uint32_t p, int level);

  std::uint32_t prime() const { return p_; }
  int level() const { return n_; }
  CplxVal operator()(std::uint64_t x) const { return table_[x % table_.size()]; }

 private:
  std::uint32_t p_;
  int n_;
  std::vector<CplxVal> table_;
};

// Unitary transform for the trace pairing tr(XY) = 2aa' + bc' + cb':
//   f^(X) = q^{-3/2} sum_Y f(Y) psi(tr(XY)).
// The pairing has the same form in either lattice model, so the model is
// carried through unchanged.  Computed one axis at a time.
LieFn finite_fourier(const LieFn& f, const AdditiveChar& psi);
LieFn finite_fourier(const LieFn& f);

CplxVal inner_product(const LieFn& f, const LieFn& g);  // sum f conj(g)
double l2_norm(const LieFn& f);
// X -> f(-X)
LieFn negate_argument(const LieFn& f);

struct EigenFit {
  CplxVal lambda;   // <f^, f> / <f, f>
  double residual;  // |f^ - lambda f| / |f|
};

// Throws ZeroFunction for f = 0.
EigenFit eigen_extract(const LieFn& f);

}  // namespace cuspsl2
