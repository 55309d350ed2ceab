#include "cuspsl2/slgroup/classes.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/slgroup/enumerate.hpp"

namespace cuspsl2 {

std::string to_string(UnipClass u) {
  switch (u) {
    case UnipClass::Identity:
      return "identity";
    case UnipClass::Plus:
      return "plus";
    case UnipClass::Minus:
      return "minus";
  }
  return "?";
}

int unipotent_square_class(const SL2Fp& u) {
  if (!u.b().is_zero()) return legendre_symbol(u.b());
  return legendre_symbol(-u.c());
}

UnipClass classify_unipotent(const SL2Fp& u) {
  const std::uint32_t p = u.a().prime();
  if (!(u.trace() == FpElem(2, p))) throw NotRegularUnipotent("trace is not 2");
  if (u == SL2Fp::identity(u.a())) return UnipClass::Identity;
  return unipotent_square_class(u) == 1 ? UnipClass::Plus : UnipClass::Minus;
}

std::string to_string(const ClassKey& k) {
  switch (k.kind) {
    case ClassKind::Identity:
      return "I";
    case ClassKind::MinusIdentity:
      return "-I";
    case ClassKind::UnipotentPlus:
      return "u+";
    case ClassKind::UnipotentMinus:
      return "u-";
    case ClassKind::NegUnipotentPlus:
      return "-u+";
    case ClassKind::NegUnipotentMinus:
      return "-u-";
    case ClassKind::Semisimple:
      return "tr=" + std::to_string(k.trace);
  }
  return "?";
}

ClassKey class_key(const SL2Fp& g) {
  const std::uint32_t p = g.a().prime();
  const FpElem t = g.trace();
  if (t == FpElem(2, p)) {
    switch (classify_unipotent(g)) {
      case UnipClass::Identity:
        return {ClassKind::Identity, 0};
      case UnipClass::Plus:
        return {ClassKind::UnipotentPlus, 0};
      case UnipClass::Minus:
        return {ClassKind::UnipotentMinus, 0};
    }
  }
  if (t == FpElem(-2, p)) {
    switch (classify_unipotent(-g)) {
      case UnipClass::Identity:
        return {ClassKind::MinusIdentity, 0};
      case UnipClass::Plus:
        return {ClassKind::NegUnipotentPlus, 0};
      case UnipClass::Minus:
        return {ClassKind::NegUnipotentMinus, 0};
    }
  }
  return {ClassKind::Semisimple, t.value()};
}

SL2Fp class_representative(const ClassKey& k, std::uint32_t p) {
  const std::int64_t eps = smallest_nonresidue(p);
  switch (k.kind) {
    case ClassKind::Identity:
      return make_sl2_fp(1, 0, 0, 1, p);
    case ClassKind::MinusIdentity:
      return make_sl2_fp(-1, 0, 0, -1, p);
    case ClassKind::UnipotentPlus:
      return make_sl2_fp(1, 1, 0, 1, p);
    case ClassKind::UnipotentMinus:
      return make_sl2_fp(1, eps, 0, 1, p);
    case ClassKind::NegUnipotentPlus:
      return make_sl2_fp(-1, -1, 0, -1, p);
    case ClassKind::NegUnipotentMinus:
      return make_sl2_fp(-1, -eps, 0, -1, p);
    case ClassKind::Semisimple:
      // Companion matrix of x^2 - t x + 1.
      return make_sl2_fp(0, -1, 1, k.trace, p);
  }
  throw std::logic_error("unknown class kind");
}

ConjugacyClasses::ConjugacyClasses(std::uint32_t p) : p_(p), order_(sl2_order(p, 1)) {
  std::map<ClassKey, std::uint64_t> sizes;
  for_each_sl2_fp(p, [&](const SL2Fp& g) { ++sizes[class_key(g)]; });
  for (const auto& [key, size] : sizes) classes_.push_back({key, class_representative(key, p), size});
  // map order already follows the enum order, then trace.
}

std::size_t ConjugacyClasses::index_of(const ClassKey& k) const {
  auto it = std::lower_bound(classes_.begin(), classes_.end(), k,
                             [](const ConjugacyClass& c, const ClassKey& key) { return c.key < key; });
  if (it == classes_.end() || !(it->key == k)) throw std::out_of_range("unknown class key");
  return static_cast<std::size_t>(it - classes_.begin());
}

}  // namespace cuspsl2
