#include "cuspsl2/charfun/hecke.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/slgroup/enumerate.hpp"

namespace cuspsl2 {

HeckeFn::HeckeFn(std::uint32_t p, ParahoricModel model, int level) : p_(p), model_(model), n_(level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
}

void HeckeFn::require_level(const SL2Zpn& coords) const {
  if (coords.a().prime() != p_) throw std::invalid_argument("point over a different prime");
  if (coords.a().level() != n_) throw LevelMismatch("point and function at different levels");
}

CplxVal HeckeFn::at(const SL2Zpn& coords) const {
  require_level(coords);
  auto it = table_.find(encode(coords));
  return it == table_.end() ? CplxVal{} : it->second;
}

void HeckeFn::set(const SL2Zpn& coords, CplxVal value) {
  require_level(coords);
  if (value == CplxVal{}) {
    table_.erase(encode(coords));
  } else {
    table_[encode(coords)] = value;
  }
}

HeckeFn inflate(const ClassFn& f, ParahoricModel model, int n) {
  HeckeFn out(f.prime(), model, n);
  for_each_sl2_zpn(f.prime(), n, [&](const SL2Zpn& g) {
    const int v = f(to_residue_field(g));
    if (v != 0) out.set(g, CplxVal(v, 0.0));
  });
  return out;
}

CplxVal evaluate_hecke(const HeckeFn& f, const PMat& g) {
  if (!in_model(g, f.model())) return {};
  return f.at(reduce_to_level(g, f.model(), f.level()).coords);
}

namespace {

SL2Zpn decode(std::uint64_t key, std::uint32_t p, int n) {
  const std::uint64_t q = ZpnElem(0, p, n).modulus();
  std::int64_t e[4];
  for (int i = 3; i >= 0; --i) {
    e[i] = static_cast<std::int64_t>(key % q);
    key /= q;
  }
  return make_sl2_zpn(e[0], e[1], e[2], e[3], p, n);
}

}  // namespace

nlohmann::json to_json(const HeckeFn& f) {
  std::vector<std::uint64_t> keys;
  keys.reserve(f.support().size());
  for (const auto& entry : f.support()) keys.push_back(entry.first);
  std::sort(keys.begin(), keys.end());
  nlohmann::json entries = nlohmann::json::array();
  for (std::uint64_t k : keys) {
    const SL2Zpn g = decode(k, f.prime(), f.level());
    const CplxVal v = f.support().at(k);
    entries.push_back({{g.a().value(), g.b().value(), g.c().value(), g.d().value()}, {v.real(), v.imag()}});
  }
  return {{"p", f.prime()}, {"model", to_string(f.model())}, {"level", f.level()}, {"entries", entries}};
}

HeckeFn hecke_from_json(const nlohmann::json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const int n = j.at("level").get<int>();
  HeckeFn f(p, parse_model(j.at("model").get<std::string>()), n);
  for (const auto& e : j.at("entries")) {
    const auto& m = e.at(0);
    const auto& v = e.at(1);
    f.set(make_sl2_zpn(m.at(0).get<std::int64_t>(), m.at(1).get<std::int64_t>(), m.at(2).get<std::int64_t>(),
                       m.at(3).get<std::int64_t>(), p, n),
          CplxVal(v.at(0).get<double>(), v.at(1).get<double>()));
  }
  return f;
}

}  // namespace cuspsl2
