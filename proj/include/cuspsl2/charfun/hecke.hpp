#pragma once

#include <cstdint>
#include <unordered_map>

#include <json.hpp>

#include "cuspsl2/charfun/classfn.hpp"
#include "cuspsl2/exactnum/cplx.hpp"
#include "cuspsl2/slgroup/parahoric.hpp"

namespace cuspsl2 {

// Function on a parahoric, constant on cosets of its level-n congruence
// subgroup, and zero off the parahoric.
class HeckeFn {
 public:
  HeckeFn(std::uint32_t p, ParahoricModel model, int level);

  std::uint32_t prime() const { return p_; }
  ParahoricModel model() const { return model_; }
  int level() const { return n_; }

  // Value at a point given by model coordinates modulo p^n.
  CplxVal at(const SL2Zpn& coords) const;
  void set(const SL2Zpn& coords, CplxVal value);
  // Nonzero values keyed by encode(coords).
  const std::unordered_map<std::uint64_t, CplxVal>& support() const { return table_; }

 private:
  void require_level(const SL2Zpn& coords) const;

  std::uint32_t p_;
  ParahoricModel model_;
  int n_;
  std::unordered_map<std::uint64_t, CplxVal> table_;
};

// Inflation of a class function on SL2(F_p) along the reduction map.
HeckeFn inflate(const ClassFn& f, ParahoricModel model, int n);

// Value at g in SL2(Q_p): zero off the parahoric, else the value at the
// level-n reduction.  Throws InsufficientPrecision when g is too coarse.
CplxVal evaluate_hecke(const HeckeFn& f, const PMat& g);

// {p, model, level, entries: [[[a,b,c,d],[re,im]], ...]}, nonzero entries
// only, sorted by coordinates.
nlohmann::json to_json(const HeckeFn& f);
HeckeFn hecke_from_json(const nlohmann::json& j);

}  // namespace cuspsl2
