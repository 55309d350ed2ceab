#include <doctest.h>

#include <cmath>
#include <random>

#include "cuspsl2/dist/dist.hpp"
#include "cuspsl2/errors.hpp"
#include "cuspsl2/exactnum/modarith.hpp"
#include "cuspsl2/fourier/fourier.hpp"
#include "cuspsl2/liealg/lie.hpp"

using namespace cuspsl2;

namespace {

// Literal double sum with the trace pairing 2aa' + bc' + cb'.
LieFn direct_fourier(const LieFn& f) {
  const std::uint64_t q = f.modulus();
  const double two_pi = 2.0 * std::acos(-1.0);
  LieFn out(f.prime(), f.level(), f.model());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const LieZpn x = f.point(i);
    CplxVal s = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const LieZpn y = f.point(j);
      const ZpnElem pairing = ZpnElem(2, f.prime(), f.level()) * x.a * y.a + x.b * y.c + x.c * y.b;
      s += f[j] * std::polar(1.0, two_pi * static_cast<double>(pairing.value()) / static_cast<double>(q));
    }
    out[i] = s / std::pow(static_cast<double>(q), 1.5);
  }
  return out;
}

LieFn random_fn(std::mt19937_64& rng, std::uint32_t p, int n, LieLatticeModel model = LieLatticeModel::Standard) {
  std::normal_distribution<double> gauss;
  LieFn f(p, n, model);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = CplxVal(gauss(rng), gauss(rng));
  return f;
}

double max_diff(const LieFn& f, const LieFn& g) {
  double m = 0;
  for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i] - g[i]));
  return m;
}

}  // namespace

TEST_SUITE("fourier") {

TEST_CASE("additive character") {
  const AdditiveChar psi(5, 2);
  CHECK(std::abs(psi(0) - CplxVal(1)) < 1e-15);
  CHECK(std::abs(psi(25) - CplxVal(1)) < 1e-15);
  CHECK(std::abs(psi(5) - CplxVal(1)) > 0.5);
  CplxVal power = 1;
  for (int k = 0; k < 5; ++k) power *= psi(5);
  CHECK(std::abs(power - CplxVal(1)) < 1e-12);
}

TEST_CASE("separable transform matches the direct sum") {
  std::mt19937_64 rng(31);
  for (auto [p, n] : {std::pair{3u, 1}, {5u, 1}, {7u, 1}, {3u, 2}}) {
    const LieFn f = random_fn(rng, p, n);
    CHECK(max_diff(finite_fourier(f), direct_fourier(f)) < 1e-9);
  }
}

TEST_CASE("simple transforms") {
  LieFn zero(5, 1, LieLatticeModel::Standard);
  CHECK(l2_norm(finite_fourier(zero)) == 0.0);
  LieFn delta(5, 2, LieLatticeModel::Standard);
  delta[delta.index_of(make_lie_zpn(0, 0, 0, 5, 2))] = 1;
  const LieFn h = finite_fourier(delta);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(std::abs(h[i] - CplxVal(std::pow(25.0, -1.5))) < 1e-15);
  CHECK_THROWS_AS(finite_fourier(delta, AdditiveChar(5, 1)), LevelMismatch);
  CHECK_THROWS_AS(eigen_extract(zero), ZeroFunction);
  CHECK(std::abs(eigen_extract(delta).residual - 1.0) < 0.01);
}

TEST_CASE("Plancherel and involution on random functions") {
  std::mt19937_64 rng(37);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int n : {1, 2}) {
      double plancherel = 0, involution = 0;
      for (int i = 0; i < 100; ++i) {
        const LieFn f = random_fn(rng, p, n);
        const LieFn h = finite_fourier(f);
        plancherel = std::max(plancherel, std::abs(l2_norm(h) - l2_norm(f)) / l2_norm(f));
        involution = std::max(involution, max_diff(finite_fourier(h), negate_argument(f)));
      }
      CHECK(plancherel < 1e-9);
      CHECK(involution < 1e-9);
    }
  }
}

TEST_CASE("symmetrized even function is fixed") {
  std::mt19937_64 rng(41);
  LieFn f = random_fn(rng, 5, 1);
  const LieFn neg = negate_argument(f);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = f[i] + neg[i];
  const LieFn h = finite_fourier(f);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += h[i];
  const EigenFit fit = eigen_extract(f);
  CHECK(std::abs(fit.lambda - CplxVal(1)) < 1e-9);
  CHECK(fit.residual < 1e-9);
}

TEST_CASE("transferred trace function is an eigenfunction") {
  for (std::uint32_t p = 3; p <= 23; p += 2) {
    if (!is_prime(p)) continue;
    const EigenFit e = eigen_extract(cayley_transfer(trace_hecke_fn(LocalSystem::E, p, 1)));
    const EigenFit ep = eigen_extract(cayley_transfer(trace_hecke_fn(LocalSystem::Eprime, p, 1)));
    CHECK(e.residual < 1e-9);
    CHECK(std::abs(std::abs(e.lambda) - 1.0) < 1e-9);
    CHECK(std::abs(e.lambda - ep.lambda) < 1e-9);
    // Observed value: 1 for p = 1 mod 4 and -i for p = 3 mod 4.
    CHECK(std::abs(e.lambda - (p % 4 == 1 ? CplxVal(1) : CplxVal(0, -1))) < 1e-9);
  }
}

}
