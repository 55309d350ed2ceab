#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuspsl2/charfun/classfn.hpp"
#include "cuspsl2/exactnum/cplx.hpp"
#include "cuspsl2/slgroup/classes.hpp"

namespace cuspsl2 {

struct Character {
  int degree;
  std::vector<CplxVal> values;  // indexed like CharTable::classes()
};

class CharTable {
 public:
  CharTable(ConjugacyClasses classes, std::vector<Character> characters);

  std::uint32_t prime() const { return classes_.prime(); }
  const ConjugacyClasses& classes() const { return classes_; }
  const std::vector<Character>& characters() const { return characters_; }

  // Largest deviation from the first orthogonality relations, relative to |G|.
  double orthogonality_defect() const;

  // One row per character, one column per class; values written re+imi.
  std::string to_csv() const;
  nlohmann::json to_json() const;

 private:
  ConjugacyClasses classes_;
  std::vector<Character> characters_;
};

// Largest p accepted by dixon_table.
inline constexpr std::uint32_t kMaxCharTablePrime = 13;

// Irreducible characters of SL2(F_p), p an odd prime <= 13, computed from
// the class multiplication coefficients modulo a prime P = 1 mod exp(G) and
// lifted to C through the power maps.
CharTable dixon_table(std::uint32_t p);

struct CuspidalMatch {
  std::size_t plus;   // index of chi_plus in the table
  std::size_t minus;  // index of chi_minus
  CplxVal scale;      // t = scale * (chi_plus - chi_minus) on trace-2 classes
  double residual;    // max deviation on the trace-2 classes
  double residual_full_group;  // same fit measured on every class
};

// Matches the trace function against the difference of the two characters
// of degree (p - 1) / 2.  The scale is fitted on the trace-2 classes, where
// the trace function lives; the pair is ordered so that the scale has
// positive real part, or positive imaginary part when the real part
// vanishes.  Throws NoMatch when the residual reaches tol.
CuspidalMatch match_cuspidal_difference(const CharTable& table, const ClassFn& t, double tol = 1e-6);

}  // namespace cuspsl2
