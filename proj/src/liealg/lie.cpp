#include "cuspsl2/liealg/lie.hpp"

#include <stdexcept>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/exactnum/modarith.hpp"
#include "cuspsl2/slgroup/enumerate.hpp"

namespace cuspsl2 {

bool is_top_nilpotent(const LieZpn& x) { return (x.a * x.a + x.b * x.c).value() % x.a.prime() == 0; }

SL2Zpn cayley(const LieZpn& x) {
  const ZpnElem one = one_like(x.a);
  const ZpnElem half = (one + one).inverse();
  // 1 - X/2 and its adjugate.
  const ZpnElem ma = one - x.a * half;
  const ZpnElem mb = -(x.b * half);
  const ZpnElem mc = -(x.c * half);
  const ZpnElem md = one + x.a * half;
  const ZpnElem det = ma * md - mb * mc;
  if (!det.is_unit()) throw NonInvertible("1 - X/2 is not invertible");
  const ZpnElem di = det.inverse();
  const Mat2<ZpnElem> inv{md * di, -mb * di, -mc * di, ma * di};
  const Mat2<ZpnElem> plus{one + x.a * half, x.b * half, x.c * half, one - x.a * half};
  return SL2Zpn(plus * inv);
}

LieZpn inverse_cayley(const SL2Zpn& g) {
  const ZpnElem one = one_like(g.a());
  const Mat2<ZpnElem> plus{g.a() + one, g.b(), g.c(), g.d() + one};
  const ZpnElem det = plus.det();
  if (!det.is_unit()) throw NonInvertible("g + 1 is not invertible");
  const ZpnElem di = det.inverse();
  const Mat2<ZpnElem> inv{plus.d * di, -plus.b * di, -plus.c * di, plus.a * di};
  const Mat2<ZpnElem> minus{g.a() - one, g.b(), g.c(), g.d() - one};
  const Mat2<ZpnElem> y = minus * inv;
  const ZpnElem two = one + one;
  if (!(y.a + y.d == zero_like(one))) throw std::logic_error("inverse Cayley image is not traceless");
  return {two * y.a, two * y.b, two * y.c};
}

LieFn::LieFn(std::uint32_t p, int level, LieLatticeModel model)
    : p_(p), n_(level), q_(checked_pow(p, level)), model_(model) {
  check_enumeration_budget(p, level);
  values_.assign(q_ * q_ * q_, CplxVal{});
}

std::size_t LieFn::index_of(const LieZpn& x) const {
  if (x.a.modulus() != q_ || x.a.prime() != p_) throw LevelMismatch("Lie point at a different level");
  return static_cast<std::size_t>((x.a.value() * q_ + x.b.value()) * q_ + x.c.value());
}

LieZpn LieFn::point(std::size_t index) const {
  const auto c = static_cast<std::int64_t>(index % q_);
  index /= q_;
  const auto b = static_cast<std::int64_t>(index % q_);
  const auto a = static_cast<std::int64_t>(index / q_);
  return make_lie_zpn(a, b, c, p_, n_);
}

LieFn cayley_transfer(const HeckeFn& f) {
  LieFn out(f.prime(), f.level(), f.model());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const LieZpn x = out.point(i);
    if (is_top_nilpotent(x)) out[i] = f.at(cayley(x));
  }
  return out;
}

nlohmann::json to_json(const LieFn& f) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == CplxVal{}) continue;
    const LieZpn x = f.point(i);
    entries.push_back({{x.a.value(), x.b.value(), x.c.value()}, {f[i].real(), f[i].imag()}});
  }
  return {{"p", f.prime()}, {"model", to_string(f.model())}, {"level", f.level()}, {"entries", entries}};
}

}  // namespace cuspsl2
