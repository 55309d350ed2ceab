#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cuspsl2/slgroup/sl2.hpp"

namespace cuspsl2 {

// Position of a trace-2 element among the unipotent classes of SL2(F_p).
enum class UnipClass { Identity, Plus, Minus };

std::string to_string(UnipClass u);

// Square class of the off-diagonal invariant of a nontrivial unipotent u:
// legendre(b) when b != 0, else legendre(-c).
int unipotent_square_class(const SL2Fp& u);

// Throws NotRegularUnipotent unless the trace is 2.
UnipClass classify_unipotent(const SL2Fp& u);

enum class ClassKind {
  Identity,
  MinusIdentity,
  UnipotentPlus,
  UnipotentMinus,
  NegUnipotentPlus,
  NegUnipotentMinus,
  Semisimple,  // trace other than +-2; the trace fixes the class
};

// Conjugacy class label in SL2(F_p).  The trace field only matters for
// semisimple classes and is zero otherwise.
struct ClassKey {
  ClassKind kind = ClassKind::Identity;
  std::uint32_t trace = 0;

  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

std::string to_string(const ClassKey& k);

ClassKey class_key(const SL2Fp& g);

struct ConjugacyClass {
  ClassKey key;
  SL2Fp rep;
  std::uint64_t size;
};

// The p + 4 classes of SL2(F_p) in a fixed order: I, -I, u+, u-, -u+, -u-,
// then semisimple classes by increasing trace.
class ConjugacyClasses {
 public:
  explicit ConjugacyClasses(std::uint32_t p);

  std::uint32_t prime() const { return p_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t size() const { return classes_.size(); }
  const ConjugacyClass& operator[](std::size_t i) const { return classes_[i]; }
  std::size_t index_of(const ClassKey& k) const;
  std::size_t index_of(const SL2Fp& g) const { return index_of(class_key(g)); }
  std::uint64_t group_order() const { return order_; }

 private:
  std::uint32_t p_;
  std::uint64_t order_;
  std::vector<ConjugacyClass> classes_;
};

// Preferred representative for a class key.
SL2Fp class_representative(const ClassKey& k, std::uint32_t p);

}  // namespace cuspsl2
