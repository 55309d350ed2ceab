#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cuspsl2/slgroup/classes.hpp"

namespace cuspsl2 {

enum class LocalSystem { E, Eprime };

std::string to_string(LocalSystem l);
LocalSystem parse_local_system(const std::string& s);

// Integer valued class function on SL2(F_p); unlisted classes are zero.
class ClassFn {
 public:
  explicit ClassFn(std::uint32_t p) : p_(p) {}

  std::uint32_t prime() const { return p_; }
  int at(const ClassKey& k) const;
  int operator()(const SL2Fp& g) const { return at(class_key(g)); }
  void set(const ClassKey& k, int value);
  const std::map<ClassKey, int>& values() const { return values_; }

  friend bool operator==(const ClassFn& x, const ClassFn& y) { return x.p_ == y.p_ && x.values_ == y.values_; }

 private:
  std::uint32_t p_;
  std::map<ClassKey, int> values_;  // nonzero entries only
};

// Frobenius trace function of the local system, extended by zero off the
// regular unipotent classes: +1 on u+, -1 on u-.  The closed form is checked
// against the stalk traces of the defining cover before returning.
ClassFn build_trace_fn(LocalSystem l, std::uint32_t p);

// Whether every sum of F over a coset x N, x in the upper Borel, vanishes.
bool is_cuspidal(const ClassFn& f);
// Same sums over every x in the group. Stronger than cuspidality; the trace
// function fails it at lower unipotents, where exactly one term is nonzero.
bool constant_term_vanishes_everywhere(const ClassFn& f);

}  // namespace cuspsl2
