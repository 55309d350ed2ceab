#include "cuspsl2/fourier/fourier.hpp"

#include <cmath>
#include <numbers>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/exactnum/modarith.hpp"

namespace cuspsl2 {

AdditiveChar::AdditiveChar(std::uint32_t p, int level) : p_(p), n_(level) {
  const std::uint64_t q = checked_pow(p, level);
  table_.reserve(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    table_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(q)));
  }
}

namespace {

// Applies out[.., k, ..] = sum_j in[.., j, ..] psi(scale * k * j) along one
// axis of a q x q x q array, writing the result on the same axis.
void transform_axis(std::vector<CplxVal>& data, std::uint64_t q, int axis, std::uint64_t scale,
                    const AdditiveChar& psi) {
  const std::uint64_t stride = axis == 0 ? q * q : axis == 1 ? q : 1;
  std::vector<CplxVal> kernel(q * q);
  for (std::uint64_t k = 0; k < q; ++k) {
    for (std::uint64_t j = 0; j < q; ++j) kernel[k * q + j] = psi(scale * k % q * j % q);
  }
  std::vector<CplxVal> line(q);
  for (std::uint64_t base = 0; base < q * q * q; ++base) {
    if ((base / stride) % q != 0) continue;
    for (std::uint64_t j = 0; j < q; ++j) line[j] = data[base + j * stride];
    for (std::uint64_t k = 0; k < q; ++k) {
      CplxVal s{};
      const CplxVal* row = &kernel[k * q];
      for (std::uint64_t j = 0; j < q; ++j) s += line[j] * row[j];
      data[base + k * stride] = s;
    }
  }
}

// Exchanges the b and c axes.
std::vector<CplxVal> swap_bc(const std::vector<CplxVal>& data, std::uint64_t q) {
  std::vector<CplxVal> out(data.size());
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      for (std::uint64_t c = 0; c < q; ++c) out[(a * q + c) * q + b] = data[(a * q + b) * q + c];
    }
  }
  return out;
}

}  // namespace

LieFn finite_fourier(const LieFn& f, const AdditiveChar& psi) {
  if (psi.prime() != f.prime() || psi.level() != f.level()) {
    throw LevelMismatch("additive character and function at different levels");
  }
  const std::uint64_t q = f.modulus();
  // a' -> a with kernel psi(2 a a'); c' -> b and b' -> c with psi(b c'), psi(c b').
  std::vector<CplxVal> data = f.values();
  transform_axis(data, q, 0, 2, psi);
  transform_axis(data, q, 1, 1, psi);
  transform_axis(data, q, 2, 1, psi);
  data = swap_bc(data, q);
  LieFn out(f.prime(), f.level(), f.model());
  const double norm = std::pow(static_cast<double>(q), -1.5);
  for (std::size_t i = 0; i < data.size(); ++i) out[i] = data[i] * norm;
  return out;
}

LieFn finite_fourier(const LieFn& f) { return finite_fourier(f, AdditiveChar(f.prime(), f.level())); }

CplxVal inner_product(const LieFn& f, const LieFn& g) {
  if (f.size() != g.size()) throw LevelMismatch("functions at different levels");
  CplxVal s{};
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
  return s;
}

double l2_norm(const LieFn& f) { return std::sqrt(inner_product(f, f).real()); }

LieFn negate_argument(const LieFn& f) {
  LieFn out(f.prime(), f.level(), f.model());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const LieZpn x = f.point(i);
    out[out.index_of({-x.a, -x.b, -x.c})] = f[i];
  }
  return out;
}

EigenFit eigen_extract(const LieFn& f) {
  const double nf = l2_norm(f);
  if (nf == 0.0) throw ZeroFunction("eigenvalue of the zero function");
  const LieFn hat = finite_fourier(f);
  const CplxVal lambda = inner_product(hat, f) / (nf * nf);
  double err = 0;
  for (std::size_t i = 0; i < f.size(); ++i) err += std::norm(hat[i] - lambda * f[i]);
  return {lambda, std::sqrt(err) / nf};
}

}  // namespace cuspsl2
