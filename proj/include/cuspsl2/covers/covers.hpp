#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/slgroup/sl2.hpp"

namespace cuspsl2 {

// The four covers of the unipotent locus by the punctured plane:
//   F            (x, y) -> (1 - xy, x^2, -y^2, 1 + xy)
//   Fprime       (x, y) -> (1 - xy, x^2 / w, -w y^2, 1 + xy)
//   FVarpi, FprimeVarpi: the same maps after adjoining sqrt(w),
// where w is the uniformizer (the prime p itself throughout).
enum class CoverId { F, Fprime, FVarpi, FprimeVarpi };

std::string to_string(CoverId id);
CoverId parse_cover(const std::string& s);
bool over_quadratic_extension(CoverId id);

// Klein four group: Phi1 negates the coordinates, Phi2 conjugates
// sqrt(w) -> -sqrt(w) in the coefficients, Phi3 = Phi2 o Phi1.
enum class DeckElem : std::uint8_t { Id = 0, Phi1 = 1, Phi2 = 2, Phi3 = 3 };

std::string to_string(DeckElem g);
inline DeckElem compose(DeckElem x, DeckElem y) {
  return static_cast<DeckElem>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}

// {Id, Phi1} for the covers over Q_p, all four over Q_p(sqrt p).
std::vector<DeckElem> deck_group(CoverId id);

// A +-1 valued character of a deck group.
class DeckChar {
 public:
  DeckChar(CoverId cover, std::array<int, 4> values);

  static DeckChar trivial(CoverId cover);
  // The characters defining the two local systems on each cover.
  static DeckChar local_system_e(CoverId cover);
  static DeckChar local_system_eprime(CoverId cover);

  CoverId cover() const { return cover_; }
  int operator()(DeckElem g) const;
  // Values in Id, Phi1, Phi2, Phi3 order, zero outside the group.
  const std::array<int, 4>& table() const { return values_; }
  // Pullback along a map between deck groups.
  DeckChar compose_with(const std::map<DeckElem, DeckElem>& map, CoverId source) const;
  // Same cover, labels permuted: g -> chi(map(g)) with map read as a
  // permutation of {Id, Phi1, Phi2, Phi3}.
  DeckChar relabeled(const std::map<DeckElem, DeckElem>& map) const;

  friend bool operator==(const DeckChar& x, const DeckChar& y) {
    return x.cover_ == y.cover_ && x.values_ == y.values_;
  }

 private:
  CoverId cover_;
  std::array<int, 4> values_;
};

template <class R>
struct PlanePoint {
  R x, y;
  friend bool operator==(const PlanePoint& s, const PlanePoint& t) { return s.x == t.x && s.y == t.y; }
};

// Division by a unit; DivisionByNonUnit when the divisor is not invertible.
FpElem divide_by_unit(const FpElem& num, const FpElem& den);
Fp2Elem divide_by_unit(const Fp2Elem& num, const Fp2Elem& den);
QuadRat divide_by_unit(const QuadRat& num, const QuadRat& den);
Rat divide_by_unit(const Rat& num, const Rat& den);

// The cover map at (x, y) != (0, 0); w is the uniformizer in R.
template <class R>
SL2Elem<R> cover_map(CoverId id, const R& x, const R& y, const R& w) {
  if (x == zero_like(x) && y == zero_like(y)) throw std::invalid_argument("cover map at the origin");
  const R one = one_like(x);
  const R xy = x * y;
  switch (id) {
    case CoverId::F:
    case CoverId::FVarpi:
      return SL2Elem<R>(one - xy, x * x, -(y * y), one + xy);
    case CoverId::Fprime:
    case CoverId::FprimeVarpi:
      return SL2Elem<R>(one - xy, divide_by_unit(x * x, w), -(w * y * y), one + xy);
  }
  throw std::logic_error("unknown cover");
}

template <class R>
SL2Elem<R> cover_map(CoverId id, const PlanePoint<R>& pt, const R& w) {
  return cover_map(id, pt.x, pt.y, w);
}

// Q(sqrt p) realizes the coefficient field of the varpi covers.
QuadRat uniformizer(std::uint32_t p);
QuadRat sqrt_uniformizer(std::uint32_t p);

// Point of the plane over the quadratic field, together with the branch:
// the image (+1 or -1 times sqrt p) of the coefficient sqrt(w).  The cover
// maps have coefficients in Q_p, so they ignore the branch; Phi2 flips it.
struct CoverPoint {
  int branch;
  PlanePoint<QuadRat> xy;
  friend bool operator==(const CoverPoint& s, const CoverPoint& t) { return s.branch == t.branch && s.xy == t.xy; }
};

CoverPoint apply_deck(DeckElem g, const CoverPoint& pt);

// Fiber over a regular unipotent u in SL2(F_p) and the deck element by
// which the p-power Frobenius acts on it.  For Fprime u is read in model
// coordinates, where the special fiber of the integral cover has the same
// equations as F.  The varpi covers use the Frobenius lift acting trivially
// on sqrt(w), so it lands in {Id, Phi1} for them too.
struct FiberWithFrobenius {
  std::array<PlanePoint<Fp2Elem>, 2> points;
  DeckElem frobenius;
};

FiberWithFrobenius fiber_with_frobenius(CoverId id, const SL2Fp& u);

// Trace of Frobenius on the stalk of the local system attached to chi.
int stalk_trace(const DeckChar& chi, CoverId id, const SL2Fp& u);

// Isomorphism of covers (x, y) -> (sx x, sy y) from the space of source to
// the space of target, satisfying target o h = source.  The scalings may
// involve sqrt(w) and are evaluated on the branch of the point.
struct CoverMorphism {
  CoverId source;
  CoverId target;
  QuadRat scale_x;
  QuadRat scale_y;

  CoverPoint operator()(const CoverPoint& pt) const;

  // (x, y) -> (sqrt(w) x, y / sqrt(w)) from FVarpi to FprimeVarpi.
  static CoverMorphism swap(std::uint32_t p);
  // Base change of a cover over Q_p to its varpi version.
  static CoverMorphism base_change(CoverId source, std::uint32_t p);
};

// Samples (i, i + 1), i = 1..count.
std::vector<PlanePoint<QuadRat>> rational_samples(std::uint32_t p, int count = 20);

// Deck element map g -> h with h o m = m o g, found on the samples of both
// branches.  Throws NotACoverMorphism if m does not intertwine the covers.
std::map<DeckElem, DeckElem> induced_deck_map(const CoverMorphism& m);

struct MorphismCheck {
  bool ok;
  std::optional<PlanePoint<QuadRat>> witness;  // first failing sample
};

// Whether substituting (x, y) -> (cx x, cy y) into source gives target:
// source(cx x, cy y) == target(x, y) on the rational samples.  For source F,
// target Fprime this is the square expressing Fprime as the base change of F
// along m(w) = diag(1/w, 1) acting by conjugation.
MorphismCheck cover_morphism_check(CoverId source, CoverId target, const QuadRat& cx, const QuadRat& cy,
                                   std::uint32_t p);

// Solves the coefficient equations of cover_morphism_check over Q; empty
// when no rational scaling exists.
std::optional<std::pair<Rat, Rat>> rational_scaling(CoverId source, CoverId target, std::uint32_t p);

// Left multiplication v -> g v, and its twist by diag(1, w) conjugation
// g -> (a, w b; c / w, d), which is the action under which Fprime is
// equivariant.
enum class PlaneAction { Linear, Twisted };

std::string to_string(PlaneAction a);
PlaneAction natural_action(CoverId id);

template <class R>
PlanePoint<R> act(const SL2Elem<R>& g, const PlanePoint<R>& pt, PlaneAction action, const R& w) {
  if (action == PlaneAction::Linear) {
    return {g.a() * pt.x + g.b() * pt.y, g.c() * pt.x + g.d() * pt.y};
  }
  return {g.a() * pt.x + w * g.b() * pt.y, divide_by_unit(g.c(), w) * pt.x + g.d() * pt.y};
}

// cover(g . v) == g cover(v) g^{-1}.
template <class R>
bool equivariance_check(const SL2Elem<R>& g, const PlanePoint<R>& pt, CoverId id, const R& w, PlaneAction action) {
  return cover_map(id, act(g, pt, action, w), w) == cover_map(id, pt, w).conjugated_by(g);
}

}  // namespace cuspsl2
