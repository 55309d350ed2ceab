#include "cuspsl2/slgroup/sl2.hpp"

namespace cuspsl2 {

SL2Fp to_residue_field(const SL2Zpn& g) {
  const std::uint32_t p = g.a().prime();
  auto r = [p](const ZpnElem& x) { return FpElem(static_cast<std::int64_t>(x.value() % p), p); };
  return SL2Fp(r(g.a()), r(g.b()), r(g.c()), r(g.d()));
}

SL2Zpn reduce_level(const SL2Zpn& g, int m) {
  return SL2Zpn(g.a().reduce(m), g.b().reduce(m), g.c().reduce(m), g.d().reduce(m));
}

std::uint64_t encode(const SL2Zpn& g) {
  const std::uint64_t q = g.a().modulus();
  return ((g.a().value() * q + g.b().value()) * q + g.c().value()) * q + g.d().value();
}

std::uint64_t encode(const SL2Fp& g) {
  const std::uint64_t q = g.a().prime();
  return ((std::uint64_t{g.a().value()} * q + g.b().value()) * q + g.c().value()) * q + g.d().value();
}

PMat pmat_from_rationals(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::uint32_t p, int precision) {
  auto f = [&](const Rat& x) { return PadicApprox::from_rational(x, p, precision); };
  return PMat{f(a), f(b), f(c), f(d)};
}

}  // namespace cuspsl2
