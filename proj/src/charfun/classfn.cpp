#include "cuspsl2/charfun/classfn.hpp"

#include <stdexcept>

#include "cuspsl2/covers/covers.hpp"
#include "cuspsl2/exactnum/modarith.hpp"
#include "cuspsl2/slgroup/enumerate.hpp"

namespace cuspsl2 {

std::string to_string(LocalSystem l) { return l == LocalSystem::E ? "E" : "Eprime"; }

LocalSystem parse_local_system(const std::string& s) {
  if (s == "E") return LocalSystem::E;
  if (s == "Eprime") return LocalSystem::Eprime;
  throw std::invalid_argument("unknown local system: " + s);
}

int ClassFn::at(const ClassKey& k) const {
  auto it = values_.find(k);
  return it == values_.end() ? 0 : it->second;
}

void ClassFn::set(const ClassKey& k, int value) {
  if (value == 0) {
    values_.erase(k);
  } else {
    values_[k] = value;
  }
}

ClassFn build_trace_fn(LocalSystem l, std::uint32_t p) {
  ClassFn t(p);
  t.set({ClassKind::UnipotentPlus, 0}, 1);
  t.set({ClassKind::UnipotentMinus, 0}, -1);

  const CoverId cover = l == LocalSystem::E ? CoverId::F : CoverId::Fprime;
  const DeckChar chi = l == LocalSystem::E ? DeckChar::local_system_e(cover) : DeckChar::local_system_eprime(cover);
  for (ClassKind kind : {ClassKind::UnipotentPlus, ClassKind::UnipotentMinus}) {
    const ClassKey key{kind, 0};
    if (stalk_trace(chi, cover, class_representative(key, p)) != t.at(key)) {
      throw std::logic_error("trace function disagrees with stalk trace on " + to_string(key));
    }
  }
  return t;
}

bool is_cuspidal(const ClassFn& f) {
  // Constant term along N, for x in the Borel B = TN; conjugation covers the
  // other parabolics.
  const std::uint32_t p = f.prime();
  for (std::uint32_t a = 1; a < p; ++a) {
    const std::int64_t a_inv = static_cast<std::int64_t>(invmod(a, p));
    for (std::uint32_t b = 0; b < p; ++b) {
      const SL2Fp x = make_sl2_fp(a, b, 0, a_inv, p);
      long sum = 0;
      for (std::uint32_t t = 0; t < p; ++t) sum += f(x * make_sl2_fp(1, t, 0, 1, p));
      if (sum != 0) return false;
    }
  }
  return true;
}

bool constant_term_vanishes_everywhere(const ClassFn& f) {
  const std::uint32_t p = f.prime();
  bool vanishes = true;
  for_each_sl2_fp(p, [&](const SL2Fp& x) {
    if (!vanishes) return;
    long sum = 0;
    for (std::uint32_t t = 0; t < p; ++t) sum += f(x * make_sl2_fp(1, t, 0, 1, p));
    vanishes = sum == 0;
  });
  return vanishes;
}

}  // namespace cuspsl2
