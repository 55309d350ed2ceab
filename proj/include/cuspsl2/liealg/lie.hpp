#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cuspsl2/charfun/hecke.hpp"
#include "cuspsl2/exactnum/cplx.hpp"
#include "cuspsl2/slgroup/parahoric.hpp"

namespace cuspsl2 {

// Traceless matrix [[a, b], [c, -a]].
template <class R>
struct SL2Lie {
  R a, b, c;

  friend bool operator==(const SL2Lie& x, const SL2Lie& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

using LieZpn = SL2Lie<ZpnElem>;

inline LieZpn make_lie_zpn(std::int64_t a, std::int64_t b, std::int64_t c, std::uint32_t p, int n) {
  return {ZpnElem(a, p, n), ZpnElem(b, p, n), ZpnElem(c, p, n)};
}

// The lattice models of the Lie algebra share the parahoric labels.
using LieLatticeModel = ParahoricModel;

// Reduction mod p is nilpotent: a^2 + bc = 0 mod p.
bool is_top_nilpotent(const LieZpn& x);

// (1 + X/2)(1 - X/2)^{-1}; NonInvertible when det(1 - X/2) is not a unit.
SL2Zpn cayley(const LieZpn& x);
// 2 (g - 1)(g + 1)^{-1}; NonInvertible when g + 1 is not invertible.
LieZpn inverse_cayley(const SL2Zpn& g);

// Function on the lattice model modulo p^n, stored densely with index
// (a q + b) q + c, q = p^n, in model coordinates.
class LieFn {
 public:
  LieFn(std::uint32_t p, int level, LieLatticeModel model);

  std::uint32_t prime() const { return p_; }
  int level() const { return n_; }
  std::uint64_t modulus() const { return q_; }
  LieLatticeModel model() const { return model_; }
  std::size_t size() const { return values_.size(); }

  std::size_t index_of(const LieZpn& x) const;
  LieZpn point(std::size_t index) const;
  CplxVal at(const LieZpn& x) const { return values_[index_of(x)]; }
  CplxVal& operator[](std::size_t i) { return values_[i]; }
  CplxVal operator[](std::size_t i) const { return values_[i]; }
  const std::vector<CplxVal>& values() const { return values_; }
  std::vector<CplxVal>& values() { return values_; }

 private:
  std::uint32_t p_;
  int n_;
  std::uint64_t q_;
  LieLatticeModel model_;
  std::vector<CplxVal> values_;
};

// X -> f(cay(X)) on topologically nilpotent X, zero elsewhere.
LieFn cayley_transfer(const HeckeFn& f);

nlohmann::json to_json(const LieFn& f);

}  // namespace cuspsl2
