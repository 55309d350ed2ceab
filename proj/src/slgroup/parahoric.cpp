#include "cuspsl2/slgroup/parahoric.hpp"

#include <stdexcept>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/slgroup/enumerate.hpp"

namespace cuspsl2 {

std::string to_string(ParahoricModel m) { return m == ParahoricModel::Standard ? "standard" : "nonstandard"; }

ParahoricModel parse_model(const std::string& s) {
  if (s == "standard") return ParahoricModel::Standard;
  if (s == "nonstandard") return ParahoricModel::Nonstandard;
  throw std::invalid_argument("unknown parahoric model: " + s);
}

PMat to_model_coordinates(const PMat& g, ParahoricModel model) {
  if (model == ParahoricModel::Standard) return g;
  return PMat{g.a, g.b.shifted(1), g.c.shifted(-1), g.d};
}

PMat from_model_coordinates(const PMat& x, ParahoricModel model) {
  if (model == ParahoricModel::Standard) return x;
  return PMat{x.a, x.b.shifted(-1), x.c.shifted(1), x.d};
}

namespace {

bool integral(const PadicApprox& x) {
  if (x.is_zero() && x.absolute_precision() < 0) {
    throw InsufficientPrecision("entry too coarse to decide integrality");
  }
  return x.is_integral();
}

}  // namespace

bool in_model(const PMat& g, ParahoricModel model) {
  const PMat x = to_model_coordinates(g, model);
  return integral(x.a) && integral(x.b) && integral(x.c) && integral(x.d);
}

ParahoricPoint reduce_to_level(const PMat& g, ParahoricModel model, int n) {
  if (n < 1) throw std::invalid_argument("level must be positive");
  if (!in_model(g, model)) throw NotInModel("matrix is not in the " + to_string(model) + " parahoric");
  const PMat x = to_model_coordinates(g, model);
  const std::uint32_t p = x.a.prime();
  auto r = [&](const PadicApprox& e) { return ZpnElem(static_cast<std::int64_t>(e.residue(n)), p, n); };
  return ParahoricPoint{model, SL2Zpn(r(x.a), r(x.b), r(x.c), r(x.d))};
}

SL2Fp reduce_to_residue(const PMat& g, ParahoricModel model, int n) {
  return to_residue_field(reduce_to_level(g, model, n).coords);
}

PMat lift(const ParahoricPoint& x, int precision) {
  const std::uint32_t p = x.coords.a().prime();
  auto l = [&](const ZpnElem& e) {
    return PadicApprox::from_integer(static_cast<std::int64_t>(e.value()), p, precision);
  };
  // Fix the determinant exactly at the working precision: adjust d when a is
  // a unit, otherwise c (then b is a unit).
  PMat m{l(x.coords.a()), l(x.coords.b()), l(x.coords.c()), l(x.coords.d())};
  const PadicApprox one = PadicApprox::from_integer(1, p, precision);
  if (x.coords.a().is_unit()) {
    m.d = (one + m.b * m.c) / m.a;
  } else {
    m.c = (m.a * m.d - one) / m.b;
  }
  return from_model_coordinates(m, x.model);
}

}  // namespace cuspsl2
