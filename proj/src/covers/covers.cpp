#include "cuspsl2/covers/covers.hpp"

#include <stdexcept>

#include "cuspsl2/slgroup/classes.hpp"

namespace cuspsl2 {

std::string to_string(CoverId id) {
  switch (id) {
    case CoverId::F:
      return "F";
    case CoverId::Fprime:
      return "Fprime";
    case CoverId::FVarpi:
      return "FVarpi";
    case CoverId::FprimeVarpi:
      return "FprimeVarpi";
  }
  return "?";
}

CoverId parse_cover(const std::string& s) {
  for (CoverId id : {CoverId::F, CoverId::Fprime, CoverId::FVarpi, CoverId::FprimeVarpi}) {
    if (to_string(id) == s) return id;
  }
  throw std::invalid_argument("unknown cover: " + s);
}

bool over_quadratic_extension(CoverId id) { return id == CoverId::FVarpi || id == CoverId::FprimeVarpi; }

std::string to_string(DeckElem g) {
  static const char* names[] = {"Id", "Phi1", "Phi2", "Phi3"};
  return names[static_cast<int>(g)];
}

std::vector<DeckElem> deck_group(CoverId id) {
  if (over_quadratic_extension(id)) return {DeckElem::Id, DeckElem::Phi1, DeckElem::Phi2, DeckElem::Phi3};
  return {DeckElem::Id, DeckElem::Phi1};
}

DeckChar::DeckChar(CoverId cover, std::array<int, 4> values) : cover_(cover), values_(values) {
  const auto group = deck_group(cover);
  for (int i = 0; i < 4; ++i) {
    const bool member = i < static_cast<int>(group.size());
    if (member ? (values_[i] != 1 && values_[i] != -1) : values_[i] != 0) {
      throw std::invalid_argument("deck character values must be +-1 on the group and 0 outside");
    }
  }
  for (DeckElem x : group) {
    for (DeckElem y : group) {
      if ((*this)(compose(x, y)) != (*this)(x) * (*this)(y)) {
        throw std::invalid_argument("deck character is not multiplicative");
      }
    }
  }
}

DeckChar DeckChar::trivial(CoverId cover) {
  return over_quadratic_extension(cover) ? DeckChar(cover, {1, 1, 1, 1}) : DeckChar(cover, {1, 1, 0, 0});
}

DeckChar DeckChar::local_system_e(CoverId cover) {
  switch (cover) {
    case CoverId::F:
    case CoverId::Fprime:
      return DeckChar(cover, {1, -1, 0, 0});
    case CoverId::FVarpi:
      return DeckChar(cover, {1, -1, 1, -1});
    case CoverId::FprimeVarpi:
      return DeckChar(cover, {1, -1, -1, 1});
  }
  throw std::logic_error("unknown cover");
}

DeckChar DeckChar::local_system_eprime(CoverId cover) {
  switch (cover) {
    case CoverId::F:
    case CoverId::Fprime:
      return DeckChar(cover, {1, -1, 0, 0});
    case CoverId::FVarpi:
      return DeckChar(cover, {1, -1, -1, 1});
    case CoverId::FprimeVarpi:
      return DeckChar(cover, {1, -1, 1, -1});
  }
  throw std::logic_error("unknown cover");
}

int DeckChar::operator()(DeckElem g) const {
  const int v = values_[static_cast<int>(g)];
  if (v == 0) throw std::invalid_argument(to_string(g) + " is not in the deck group of " + to_string(cover_));
  return v;
}

DeckChar DeckChar::compose_with(const std::map<DeckElem, DeckElem>& map, CoverId source) const {
  std::array<int, 4> values{};
  for (DeckElem g : deck_group(source)) values[static_cast<int>(g)] = (*this)(map.at(g));
  return DeckChar(source, values);
}

DeckChar DeckChar::relabeled(const std::map<DeckElem, DeckElem>& map) const {
  std::array<int, 4> values{};
  for (DeckElem g : deck_group(cover_)) values[static_cast<int>(g)] = values_[static_cast<int>(map.at(g))];
  return DeckChar(cover_, values);
}

FpElem divide_by_unit(const FpElem& num, const FpElem& den) {
  if (den.is_zero()) throw DivisionByNonUnit("division by zero in F_p");
  return num / den;
}

Fp2Elem divide_by_unit(const Fp2Elem& num, const Fp2Elem& den) {
  if (den.is_zero()) throw DivisionByNonUnit("division by zero in F_{p^2}");
  return num / den;
}

QuadRat divide_by_unit(const QuadRat& num, const QuadRat& den) {
  if (den.is_zero()) throw DivisionByNonUnit("division by zero in Q(sqrt d)");
  return num / den;
}

Rat divide_by_unit(const Rat& num, const Rat& den) {
  if (den.is_zero()) throw DivisionByNonUnit("division by zero in Q");
  return num / den;
}

QuadRat uniformizer(std::uint32_t p) { return QuadRat::rational(Rat(static_cast<long>(p)), static_cast<long>(p)); }

QuadRat sqrt_uniformizer(std::uint32_t p) { return QuadRat::sqrt_of(static_cast<long>(p)); }

CoverPoint apply_deck(DeckElem g, const CoverPoint& pt) {
  CoverPoint out = pt;
  if (g == DeckElem::Phi1 || g == DeckElem::Phi3) out.xy = {-pt.xy.x, -pt.xy.y};
  if (g == DeckElem::Phi2 || g == DeckElem::Phi3) out.branch = -pt.branch;
  return out;
}

FiberWithFrobenius fiber_with_frobenius(CoverId id, const SL2Fp& u) {
  (void)id;  // every cover has the special fiber of F in its own coordinates
  if (classify_unipotent(u) == UnipClass::Identity) throw NotRegularUnipotent("identity is not regular");
  const FpElem one = one_like(u.a());
  Fp2Elem x(FpElem(0, u.a().prime()));
  Fp2Elem y = x;
  if (!u.b().is_zero()) {
    x = sqrt_in_fp2(u.b());
    y = Fp2Elem(one - u.a()) / x;
  } else {
    y = sqrt_in_fp2(-u.c());
    x = Fp2Elem(one - u.a()) / y;
  }
  const PlanePoint<Fp2Elem> pt{x, y};
  const PlanePoint<Fp2Elem> neg{-x, -y};
  const PlanePoint<Fp2Elem> frob{x.frobenius(), y.frobenius()};
  DeckElem g;
  if (frob == pt) {
    g = DeckElem::Id;
  } else if (frob == neg) {
    g = DeckElem::Phi1;
  } else {
    throw std::logic_error("Frobenius does not preserve the fiber");
  }
  return {{pt, neg}, g};
}

int stalk_trace(const DeckChar& chi, CoverId id, const SL2Fp& u) { return chi(fiber_with_frobenius(id, u).frobenius); }

namespace {

QuadRat on_branch(const QuadRat& s, int branch) { return branch > 0 ? s : s.conj(); }

}  // namespace

CoverPoint CoverMorphism::operator()(const CoverPoint& pt) const {
  return {pt.branch, {on_branch(scale_x, pt.branch) * pt.xy.x, on_branch(scale_y, pt.branch) * pt.xy.y}};
}

CoverMorphism CoverMorphism::swap(std::uint32_t p) {
  const QuadRat r = sqrt_uniformizer(p);
  return {CoverId::FVarpi, CoverId::FprimeVarpi, r, r.inverse()};
}

CoverMorphism CoverMorphism::base_change(CoverId source, std::uint32_t p) {
  if (over_quadratic_extension(source)) throw std::invalid_argument("cover is already over Q_p(sqrt p)");
  const CoverId target = source == CoverId::F ? CoverId::FVarpi : CoverId::FprimeVarpi;
  const QuadRat one = QuadRat::rational(Rat(1), static_cast<long>(p));
  return {source, target, one, one};
}

std::vector<PlanePoint<QuadRat>> rational_samples(std::uint32_t p, int count) {
  std::vector<PlanePoint<QuadRat>> out;
  const long d = static_cast<long>(p);
  for (long i = 1; i <= count; ++i) out.push_back({QuadRat::rational(Rat(i), d), QuadRat::rational(Rat(i + 1), d)});
  return out;
}

std::map<DeckElem, DeckElem> induced_deck_map(const CoverMorphism& m) {
  const std::uint32_t p = static_cast<std::uint32_t>(m.scale_x.radicand());
  const QuadRat w = uniformizer(p);
  std::vector<CoverPoint> samples;
  for (int branch : {1, -1}) {
    for (const auto& xy : rational_samples(p)) samples.push_back({branch, xy});
  }
  for (const auto& pt : samples) {
    if (!(cover_map(m.target, m(pt).xy, w) == cover_map(m.source, pt.xy, w))) {
      throw NotACoverMorphism("map does not intertwine " + to_string(m.source) + " and " + to_string(m.target));
    }
  }
  std::map<DeckElem, DeckElem> out;
  for (DeckElem g : deck_group(m.source)) {
    std::vector<DeckElem> matches;
    for (DeckElem h : deck_group(m.target)) {
      bool all = true;
      for (const auto& pt : samples) {
        if (!(apply_deck(h, m(pt)) == m(apply_deck(g, pt)))) {
          all = false;
          break;
        }
      }
      if (all) matches.push_back(h);
    }
    if (matches.size() != 1) throw NotACoverMorphism("deck element " + to_string(g) + " has no unique image");
    out[g] = matches.front();
  }
  return out;
}

MorphismCheck cover_morphism_check(CoverId source, CoverId target, const QuadRat& cx, const QuadRat& cy,
                                   std::uint32_t p) {
  const QuadRat w = uniformizer(p);
  for (const auto& pt : rational_samples(p)) {
    if (!(cover_map(source, cx * pt.x, cy * pt.y, w) == cover_map(target, pt, w))) return {false, pt};
  }
  return {true, std::nullopt};
}

namespace {

// Coefficients of x^2 in the b entry and of -y^2 in the c entry.
std::pair<Rat, Rat> entry_coefficients(CoverId id, std::uint32_t p) {
  const Rat w(static_cast<long>(p));
  if (id == CoverId::F || id == CoverId::FVarpi) return {Rat(1), Rat(1)};
  return {w.inverse(), w};
}

}  // namespace

std::optional<std::pair<Rat, Rat>> rational_scaling(CoverId source, CoverId target, std::uint32_t p) {
  // source(cx x, cy y) = target(x, y) forces cx cy = 1 and the two ratios below.
  const auto [bs, cs] = entry_coefficients(source, p);
  const auto [bt, ct] = entry_coefficients(target, p);
  Rat cx;
  if (!rational_sqrt(bt / bs, cx)) return std::nullopt;
  for (const Rat& candidate : {cx, -cx}) {
    const Rat cy = candidate.inverse();
    if (cy * cy * cs == ct) return std::make_pair(candidate, cy);
  }
  return std::nullopt;
}

std::string to_string(PlaneAction a) { return a == PlaneAction::Linear ? "linear" : "twisted"; }

PlaneAction natural_action(CoverId id) {
  return (id == CoverId::F || id == CoverId::FVarpi) ? PlaneAction::Linear : PlaneAction::Twisted;
}

}  // namespace cuspsl2
