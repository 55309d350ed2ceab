#pragma once

#include <string>

#include "cuspsl2/slgroup/sl2.hpp"

namespace cuspsl2 {

// Standard: SL2(Z_p).  Nonstandard: its conjugate by diag(1, p), the
// matrices with b in p^-1 Z_p and c in p Z_p.  Points of the nonstandard
// model are handled in model coordinates (a, p b, c / p, d), where it looks
// like SL2(Z_p) again.
enum class ParahoricModel { Standard, Nonstandard };

std::string to_string(ParahoricModel m);
ParahoricModel parse_model(const std::string& s);

// Image of g in model coordinates.
PMat to_model_coordinates(const PMat& g, ParahoricModel model);
PMat from_model_coordinates(const PMat& x, ParahoricModel model);

// Whether all model coordinates of g are integral.  Throws
// InsufficientPrecision when a zero entry is too coarse to decide.
bool in_model(const PMat& g, ParahoricModel model);

// A coset of the level-n principal congruence subgroup of the model.
struct ParahoricPoint {
  ParahoricModel model;
  SL2Zpn coords;  // model coordinates modulo p^n

  int level() const { return coords.a().level(); }
  friend bool operator==(const ParahoricPoint& x, const ParahoricPoint& y) {
    return x.model == y.model && x.coords == y.coords;
  }
};

// Throws NotInModel, or InsufficientPrecision when some model coordinate is
// not known modulo p^n.
ParahoricPoint reduce_to_level(const PMat& g, ParahoricModel model, int n);

// Image in SL2(F_p) of the model coordinates.  The entries must be known to
// level n (n >= 1) so the residue is that of a level-n point.
SL2Fp reduce_to_residue(const PMat& g, ParahoricModel model, int n);

// A lift of the point to Q_p with the given relative precision.
PMat lift(const ParahoricPoint& x, int precision = PadicApprox::kDefaultPrecision);

}  // namespace cuspsl2
