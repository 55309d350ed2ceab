#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "cuspsl2/dist/dist.hpp"
#include "cuspsl2/errors.hpp"
#include "cuspsl2/exactnum/modarith.hpp"
#include "cuspsl2/slgroup/enumerate.hpp"

using namespace cuspsl2;

namespace {

constexpr int kPrecision = 12;

Rat frac(long n, long d) { return Rat(mpz_class(n), mpz_class(d)); }

PMat pm(const Rat& a, const Rat& b, const Rat& c, const Rat& d, std::uint32_t p) {
  return pmat_from_rationals(a, b, c, d, p, kPrecision);
}

// |G_N|^-2 sum over x, y in G_N of h(y^-1 x y) fL(x), with x and y running
// over the parahoric of fL at level N.
CplxVal literal_double_sum(const TestFn& h, const HeckeFn& fL, int level) {
  const auto group = enumerate_sl2_zpn(fL.prime(), level);
  std::vector<PMat> lifts;
  for (const auto& g : group) lifts.push_back(lift(ParahoricPoint{fL.model(), g}, kPrecision));
  CplxVal sum{};
  for (const auto& x : lifts) {
    const CplxVal fx = evaluate_hecke(fL, x);
    if (fx == CplxVal{}) continue;
    for (const auto& y : lifts) sum += h(adjugate(y) * x * y) * fx;
  }
  const double order = static_cast<double>(group.size());
  return sum / (order * order);
}

// One Cartan cell for an indicator at g0 in the standard model, from lifts to
// level n + 2m conjugated by a_m = diag(p^-m, p^m) in Q_p.
CplxVal brute_force_cell(const SL2Zpn& g0, const HeckeFn& fL, int m) {
  const std::uint32_t p = fL.prime();
  const int n = fL.level();
  const int top = n + 2 * m;
  const auto small = enumerate_sl2_zpn(p, n);
  std::map<std::uint64_t, std::uint64_t> orbit;  // conjugates of g0 with multiplicity
  for (const auto& y : small) ++orbit[encode(g0.conjugated_by(y))];
  std::map<std::uint64_t, std::vector<SL2Zpn>> lifts;
  for_each_sl2_zpn(p, top, [&](const SL2Zpn& w) {
    const std::uint64_t key = encode(reduce_level(w, n));
    if (orbit.count(key)) lifts[key].push_back(w);
  });
  const long p2m = static_cast<long>(checked_pow(p, 2 * m));
  CplxVal total{};
  for (const auto& [key, mult] : orbit) {
    const auto& ws = lifts.at(key);
    CplxVal s{};
    for (const auto& w : ws) {
      const auto e = [](const ZpnElem& z) { return Rat(static_cast<long>(z.value())); };
      const PMat conj = pm(e(w.a()), e(w.b()) / Rat(p2m), e(w.c()) * Rat(p2m), e(w.d()), p);
      s += evaluate_hecke(fL, conj);
    }
    total += static_cast<double>(mult) * s / static_cast<double>(ws.size());
  }
  return static_cast<double>(cartan_cell_size(p, m)) * total / static_cast<double>(small.size());
}

// Number of lines in (Z/p^k)^2, i.e. primitive vectors up to unit scaling.
std::uint64_t count_lines(std::uint32_t p, int k) {
  const std::uint64_t q = checked_pow(p, k);
  std::set<std::pair<std::uint64_t, std::uint64_t>> lines;
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y) {
      if (x % p == 0 && y % p == 0) continue;
      std::pair<std::uint64_t, std::uint64_t> best{q, q};
      for (std::uint64_t u = 1; u < q; ++u) {
        if (u % p == 0) continue;
        best = std::min(best, {mulmod(u, x, q), mulmod(u, y, q)});
      }
      lines.insert(best);
    }
  return lines.size();
}

// Cosets k a_m P for k in SL2(Z_p), told apart by the lattice k a_m Z_p^2,
// which after scaling is Z_p (k e1) + p^2m Z_p^2.
std::uint64_t count_cosets_by_group(std::uint32_t p, int m) {
  const int k = 2 * m;
  const std::uint64_t q = checked_pow(p, k);
  std::set<std::pair<std::uint64_t, std::uint64_t>> lattices;
  for_each_sl2_zpn(p, k, [&](const SL2Zpn& g) {
    const std::uint64_t x = g.a().value(), y = g.c().value();
    std::pair<std::uint64_t, std::uint64_t> best{q, q};
    for (std::uint64_t u = 1; u < q; ++u) {
      if (u % p == 0) continue;
      best = std::min(best, {mulmod(u, x, q), mulmod(u, y, q)});
    }
    lattices.insert(best);
  });
  return lattices.size();
}

}  // namespace

TEST_SUITE("dist") {

TEST_CASE("fixture values of the compact core") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const long eps = smallest_nonresidue(p);
    const HeckeFn fe = trace_hecke_fn(LocalSystem::E, p, 1);
    CHECK(compact_frobenius(TestFn::indicator(pm(1, 1, 0, 1, p), 1), fe) == CplxVal(1));
    CHECK(compact_frobenius(TestFn::indicator(pm(1, eps, 0, 1, p), 1), fe) == CplxVal(-1));
    CHECK(compact_frobenius(TestFn::indicator(pm(1, 0, 0, 1, p), 1), fe) == CplxVal(0));
    CHECK(compact_frobenius(TestFn::indicator(pm(-1, -1, 0, -1, p), 1), fe) == CplxVal(0));
    CHECK(compact_frobenius(TestFn(), fe) == CplxVal(0));
    const HeckeFn fep = trace_hecke_fn(LocalSystem::Eprime, p, 1);
    CHECK(compact_frobenius(TestFn::indicator(pm(1, frac(1, p), 0, 1, p), 1), fep) == CplxVal(1));
    CHECK(compact_frobenius(TestFn::indicator(pm(1, frac(eps, p), 0, 1, p), 1), fep) == CplxVal(-1));
  }
}

TEST_CASE("compact core against the literal double sum") {
  for (auto [p, n] : {std::pair{3u, 1}, {5u, 1}, {3u, 2}}) {
    for (LocalSystem l : {LocalSystem::E, LocalSystem::Eprime}) {
      const HeckeFn fL = trace_hecke_fn(l, p, n);
      const ParahoricModel model = model_of(l);
      for (const auto& base : {pm(1, 1, 0, 1, p), pm(1, 2, 0, 1, p), pm(2, 0, 1, frac(1, 2), p)}) {
        const PMat g = from_model_coordinates(base, model);
        const TestFn h = TestFn::indicator(g, n, model);
        CHECK(std::abs(compact_frobenius(h, fL) - literal_double_sum(h, fL, n)) < 1e-12);
      }
    }
  }
}

TEST_CASE("cross-model terms against the literal double sum at the finer level") {
  const std::uint32_t p = 3;
  const HeckeFn fe = trace_hecke_fn(LocalSystem::E, p, 1);
  const HeckeFn fep = trace_hecke_fn(LocalSystem::Eprime, p, 1);
  const std::vector<std::pair<TestFn, const HeckeFn*>> cases = {
      {TestFn::indicator(pm(1, frac(1, 3), 0, 1, p), 1, ParahoricModel::Nonstandard), &fe},
      {TestFn::indicator(pm(1, 0, 0, 1, p), 1, ParahoricModel::Nonstandard), &fe},
      {TestFn::indicator(pm(1, 1, 0, 1, p), 1, ParahoricModel::Standard), &fep},
      {TestFn::indicator(pm(1, 0, 0, 1, p), 1, ParahoricModel::Standard), &fep},
      {TestFn::indicator(pm(1, 0, 3, 1, p), 1, ParahoricModel::Standard), &fep},
  };
  for (const auto& [h, fL] : cases) {
    CHECK(std::abs(compact_frobenius(h, *fL) - literal_double_sum(h, *fL, 2)) < 1e-12);
  }
}

TEST_CASE("linearity and conjugation invariance") {
  std::mt19937_64 rng(43);
  for (std::uint32_t p : {3u, 5u}) {
    const auto group = enumerate_sl2_zpn(p, 1);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (LocalSystem l : {LocalSystem::E, LocalSystem::Eprime}) {
      const ParahoricModel model = model_of(l);
      const HeckeFn fL = trace_hecke_fn(l, p, 1);
      auto random_indicator = [&] {
        return TestFn::indicator(lift(ParahoricPoint{model, group[pick(rng)]}, kPrecision), 1, model);
      };
      for (int i = 0; i < 50; ++i) {
        const TestFn h1 = random_indicator(), h2 = random_indicator();
        const CplxVal s(coef(rng), coef(rng)), t(coef(rng), coef(rng));
        const TestFn combo = s * h1 + t * h2;
        CHECK(compact_frobenius(combo, fL) == s * compact_frobenius(h1, fL) + t * compact_frobenius(h2, fL));
        const PMat k = lift(ParahoricPoint{model, group[pick(rng)]}, kPrecision);
        CHECK(compact_frobenius(combo.conjugated(k), fL) == compact_frobenius(combo, fL));
      }
    }
  }
}

TEST_CASE("errors") {
  const HeckeFn fe = trace_hecke_fn(LocalSystem::E, 3, 1);
  const TestFn level2 = TestFn::indicator(pm(1, 1, 0, 1, 3), 2);
  CHECK_THROWS_AS(compact_frobenius(level2, fe), LevelMismatch);
  const TestFn h = TestFn::indicator(pm(1, 1, 0, 1, 3), 1);
  CHECK_THROWS_AS(truncated_frobenius(h, fe, 2, 4), InsufficientPrecision);
  const TestFn other = TestFn::indicator(pm(1, frac(1, 3), 0, 1, 3), 1);
  CHECK(other.terms().front().model == ParahoricModel::Nonstandard);
  CHECK_THROWS_AS(truncated_frobenius(other, fe, 1, 8), ModelMismatch);
  CHECK_THROWS_AS(h.conjugated(pm(1, frac(1, 3), 0, 1, 3)), NotInModel);
}

TEST_CASE("Cartan cell sizes against coset enumeration") {
  for (std::uint32_t p : {3u, 5u}) {
    for (int m : {1, 2}) {
      CHECK(cartan_cell_size(p, m) == count_lines(p, 2 * m));
    }
  }
  CHECK(cartan_cell_size(3, 1) == 12);
  CHECK(cartan_cell_size(3, 0) == 1);
  CHECK(count_cosets_by_group(3, 1) == cartan_cell_size(3, 1));
  CHECK(count_cosets_by_group(3, 2) == cartan_cell_size(3, 2));
  CHECK(count_cosets_by_group(5, 1) == cartan_cell_size(5, 1));
}

TEST_CASE("truncated cells against a brute-force lift computation") {
  const std::uint32_t p = 3;
  for (int n : {1, 2, 3}) {
    const HeckeFn fe = trace_hecke_fn(LocalSystem::E, p, n);
    for (const auto& base : {pm(1, 1, 0, 1, p), pm(1, 3, 0, 1, p), pm(1, 0, 0, 1, p), pm(1, 9, 0, 1, p)}) {
      const TestFn h = TestFn::indicator(base, n);
      const DistReport r = truncated_frobenius(h, fe, 1, kPrecision);
      const CplxVal cell = r.partials[1].second - r.partials[0].second;
      const SL2Zpn g0 = reduce_to_level(base, ParahoricModel::Standard, n).coords;
      const CplxVal oracle = brute_force_cell(g0, fe, 1);
      CHECK(std::abs(cell - oracle) < 1e-9);
      // Cells only see the test function once 2m < n.
      if (n == 3 && g0 == make_sl2_zpn(1, 1, 0, 1, p, 3)) CHECK(std::abs(oracle) > 0.5);
    }
  }
}

TEST_CASE("truncation diagnostics") {
  const std::uint32_t p = 3;
  for (int n : {1, 2, 3}) {
    const HeckeFn fe = trace_hecke_fn(LocalSystem::E, p, n);
    for (const auto& base : {pm(1, 1, 0, 1, p), pm(1, 2, 0, 1, p), pm(1, 3, 0, 1, p), pm(1, 0, 0, 1, p)}) {
      const TestFn h = TestFn::indicator(base, n);
      const DistReport r0 = truncated_frobenius(h, fe, 0, kPrecision);
      CHECK(r0.value == compact_frobenius(h, fe));
      CHECK_FALSE(r0.stabilized);
      const DistReport r = truncated_frobenius(h, fe, 3, kPrecision);
      REQUIRE(r.partials.size() == 4);
      double previous = std::abs(r.partials[1].second - r.partials[0].second);
      for (int m = 2; m <= 3; ++m) {
        const double inc = std::abs(r.partials[m].second - r.partials[m - 1].second);
        CHECK(inc <= previous + 1e-12);
        previous = inc;
      }
    }
  }
  const HeckeFn fe1 = trace_hecke_fn(LocalSystem::E, p, 1);
  const DistReport r = truncated_frobenius(TestFn::indicator(pm(1, 1, 0, 1, p), 1), fe1, 2, kPrecision);
  CHECK(r.stabilized);
  CHECK(std::abs(r.value - r.partials[1].second) < 1e-9);
  const auto j = to_json(r);
  CHECK(j["partials"].size() == 3);
  CHECK(j["partials"][0].size() == 3);
  CHECK(j["stabilized"] == true);
}

TEST_CASE("Lie algebra distributions") {
  for (std::uint32_t p : {3u, 5u}) {
    const std::int64_t eps = smallest_nonresidue(p);
    CHECK(lie_distribution(LocalSystem::E, {{1, make_lie_zpn(0, 1, 0, p, 1), LieLatticeModel::Standard}}) ==
          CplxVal(1));
    CHECK(lie_distribution(LocalSystem::E, {{1, make_lie_zpn(0, 0, 0, p, 1), LieLatticeModel::Standard}}) ==
          CplxVal(0));
    CHECK(lie_distribution(LocalSystem::E, {{1, make_lie_zpn(0, eps, 0, p, 1), LieLatticeModel::Standard}}) ==
          CplxVal(-1));
    CHECK(lie_distribution(LocalSystem::Eprime, {{1, make_lie_zpn(0, 1, 0, p, 1), LieLatticeModel::Nonstandard}}) ==
          CplxVal(1));
    // Same as evaluating the group distribution at the Cayley image.
    const LieZpn x = make_lie_zpn(1, 1, -1, p, 1);
    const TestFn h = TestFn::indicator(lift(ParahoricPoint{ParahoricModel::Standard, cayley(x)}), 1);
    CHECK(lie_distribution(LocalSystem::E, {{2, x, LieLatticeModel::Standard}}) ==
          2.0 * compact_frobenius(h, trace_hecke_fn(LocalSystem::E, p, 1)));
  }
}

TEST_CASE("independence of the two distributions") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const IndependenceResult r = independence_check(p);
    CHECK(r.nonsingular);
    CHECK(r.matrix[0][1] == CplxVal(0));
    CHECK(r.matrix[1][0] == CplxVal(0));
    CHECK(std::abs(r.det) > 1e-6);
  }
  const TestFn h = TestFn::indicator(pm(1, 1, 0, 1, 5), 1);
  CHECK_FALSE(independence_check(5, 1, h, h).nonsingular);
  CHECK(independence_check(3, 2).nonsingular);
}

}
