#include "cuspsl2/chartab/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/exactnum/modarith.hpp"
#include "cuspsl2/slgroup/enumerate.hpp"

namespace cuspsl2 {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Rows = std::vector<Vec>;

struct Field {
  u64 P;
  u64 add(u64 x, u64 y) const { return (x + y) % P; }
  u64 sub(u64 x, u64 y) const { return (x + P - y) % P; }
  u64 mul(u64 x, u64 y) const { return mulmod(x, y, P); }
  u64 inv(u64 x) const { return powmod(x, P - 2, P); }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Rows& m, const Field& f, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const u64 s = f.inv(m[row][col]);
    for (auto& x : m[row]) x = f.mul(x, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const u64 factor = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Basis of {v : A v = 0} for a square matrix A.
std::vector<Vec> nullspace(Rows a, const Field& f) {
  const std::size_t n = a.size();
  const auto pivots = rref(a, f, n);
  std::vector<Vec> basis;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(v);
  }
  return basis;
}

// Coefficients c_0..c_d of det(x - A), by Faddeev-LeVerrier.
Vec charpoly(const Rows& a, const Field& f) {
  const std::size_t d = a.size();
  Vec c(d + 1, 0);
  c[d] = 1;
  Rows m(d, Vec(d, 0));
  for (std::size_t k = 1; k <= d; ++k) {
    Rows next(d, Vec(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        u64 s = 0;
        for (std::size_t l = 0; l < d; ++l) s = f.add(s, f.mul(a[i][l], m[l][j]));
        next[i][j] = s;
      }
      next[i][i] = f.add(next[i][i], c[d - k + 1]);
    }
    m = std::move(next);
    u64 tr = 0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t l = 0; l < d; ++l) tr = f.add(tr, f.mul(a[i][l], m[l][i]));
    }
    c[d - k] = f.sub(0, f.mul(tr, f.inv(k % f.P)));
  }
  return c;
}

std::vector<u64> roots(const Vec& poly, const Field& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.P; ++x) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, x), poly[i]);
    if (v == 0) out.push_back(x);
  }
  return out;
}

// Restriction A of M to the invariant span of the columns of basis:
// M basis = basis A.
Rows restrict_to(const Rows& m, const std::vector<Vec>& basis, const Field& f) {
  const std::size_t r = m.size();
  const std::size_t d = basis.size();
  Rows aug(r, Vec(2 * d, 0));
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      aug[i][k] = basis[k][i];
      u64 s = 0;
      for (std::size_t j = 0; j < r; ++j) s = f.add(s, f.mul(m[i][j], basis[k][j]));
      aug[i][d + k] = s;
    }
  }
  const auto pivots = rref(aug, f, d);
  if (pivots.size() != d) throw std::logic_error("subspace basis is degenerate");
  Rows a(d, Vec(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) a[i][k] = aug[i][d + k];
  }
  return a;
}

u64 primitive_root(u64 P) {
  std::vector<u64> factors;
  u64 m = P - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < P; ++g) {
    bool ok = true;
    for (u64 q : factors) ok = ok && powmod(g, (P - 1) / q, P) != 1;
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

std::string format_value(CplxVal v) {
  char buf[64];
  const double re = std::abs(v.real()) < 5e-10 ? 0.0 : v.real();
  const double im = std::abs(v.imag()) < 5e-10 ? 0.0 : v.imag();
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", re, im);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string format_matrix(const SL2Fp& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

}  // namespace

CharTable::CharTable(ConjugacyClasses classes, std::vector<Character> characters)
    : classes_(std::move(classes)), characters_(std::move(characters)) {}

double CharTable::orthogonality_defect() const {
  const double order = static_cast<double>(classes_.group_order());
  double worst = 0;
  for (std::size_t i = 0; i < characters_.size(); ++i) {
    for (std::size_t j = 0; j < characters_.size(); ++j) {
      CplxVal s{};
      for (std::size_t k = 0; k < classes_.size(); ++k) {
        s += static_cast<double>(classes_[k].size) * characters_[i].values[k] * std::conj(characters_[j].values[k]);
      }
      worst = std::max(worst, std::abs(s / order - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

std::string CharTable::to_csv() const {
  std::ostringstream os;
  os << "character,degree";
  for (const auto& c : classes_.classes()) os << "," << csv_field(format_matrix(c.rep));
  os << "\r\n";
  for (std::size_t i = 0; i < characters_.size(); ++i) {
    os << "chi" << i << "," << characters_[i].degree;
    for (const auto& v : characters_[i].values) os << "," << csv_field(format_value(v));
    os << "\r\n";
  }
  return os.str();
}

nlohmann::json CharTable::to_json() const {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : classes_.classes()) {
    classes.push_back({{"key", to_string(c.key)},
                       {"rep", {c.rep.a().value(), c.rep.b().value(), c.rep.c().value(), c.rep.d().value()}},
                       {"size", c.size}});
  }
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& ch : characters_) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : ch.values) values.push_back({v.real(), v.imag()});
    chars.push_back({{"degree", ch.degree}, {"values", values}});
  }
  return {{"p", prime()}, {"classes", classes}, {"characters", chars}};
}

CharTable dixon_table(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("character table needs an odd prime");
  if (p > kMaxCharTablePrime) throw BudgetExceeded("character table limited to p <= 13");

  ConjugacyClasses classes(p);
  const std::size_t r = classes.size();
  const std::vector<SL2Fp> group = enumerate_sl2_fp(p);
  const u64 order = group.size();

  std::unordered_map<u64, std::size_t> index;
  std::vector<std::size_t> cls(order);
  for (std::size_t i = 0; i < order; ++i) {
    index[encode(group[i])] = i;
    cls[i] = classes.index_of(group[i]);
  }

  // coef[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<std::vector<Vec>> coef(r, std::vector<Vec>(r, Vec(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const SL2Fp& z = classes[k].rep;
    for (std::size_t x = 0; x < order; ++x) ++coef[cls[x]][classes.index_of(group[x].inverse() * z)][k];
  }

  // Element orders; their lcm is the exponent.
  std::vector<u64> class_order(r);
  u64 exponent = 1;
  for (std::size_t k = 0; k < r; ++k) {
    const SL2Fp id = SL2Fp::identity(classes[k].rep.a());
    SL2Fp g = classes[k].rep;
    u64 o = 1;
    while (!(g == id)) {
      g = g * classes[k].rep;
      ++o;
    }
    class_order[k] = o;
    exponent = std::lcm(exponent, o);
  }

  u64 P = exponent + 1;
  while (P <= 2 * order || !is_prime(P)) P += exponent;
  const Field f{P};

  // Split F_P^r into common eigenlines of the class matrices.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (std::size_t i = 0; i < r; ++i) {
      Vec e(r, 0);
      e[i] = 1;
      full.push_back(e);
    }
    spaces.push_back(full);
  }
  for (std::size_t i = 0; i < r; ++i) {
    Rows m(r, Vec(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) m[j][k] = coef[i][j][k] % P;
    }
    std::vector<std::vector<Vec>> next;
    for (const auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      const Rows a = restrict_to(m, basis, f);
      std::size_t found = 0;
      for (u64 lambda : roots(charpoly(a, f), f)) {
        Rows shifted = a;
        for (std::size_t t = 0; t < a.size(); ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
        std::vector<Vec> sub;
        for (const Vec& coords : nullspace(shifted, f)) {
          Vec v(r, 0);
          for (std::size_t t = 0; t < basis.size(); ++t) {
            for (std::size_t s = 0; s < r; ++s) v[s] = f.add(v[s], f.mul(coords[t], basis[t][s]));
          }
          sub.push_back(v);
        }
        found += sub.size();
        next.push_back(sub);
      }
      if (found != basis.size()) throw std::logic_error("class matrix is not diagonalizable mod P");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw std::logic_error("class matrices do not separate the characters");

  const std::size_t id_class = classes.index_of(ClassKey{ClassKind::Identity, 0});
  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k) inverse_class[k] = classes.index_of(classes[k].rep.inverse());

  // power_class[k][j] = class of z_k^j
  std::vector<std::vector<std::size_t>> power_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    SL2Fp g = SL2Fp::identity(classes[k].rep.a());
    for (u64 j = 0; j < class_order[k]; ++j) {
      power_class[k].push_back(classes.index_of(g));
      g = g * classes[k].rep;
    }
  }

  const u64 z = powmod(primitive_root(P), (P - 1) / exponent, P);
  std::vector<Character> characters;
  for (const auto& line : spaces) {
    Vec w = line.front();
    if (w[id_class] == 0) throw std::logic_error("eigenvector vanishes at the identity class");
    const u64 s = f.inv(w[id_class]);
    for (auto& x : w) x = f.mul(x, s);

    u64 norm = 0;
    for (std::size_t k = 0; k < r; ++k) {
      norm = f.add(norm, f.mul(f.mul(w[k], w[inverse_class[k]]), f.inv(classes[k].size % P)));
    }
    const u64 deg_sq = f.mul(order % P, f.inv(norm));
    int degree = 0;
    for (u64 d = 1; d * d <= order; ++d) {
      if (d * d % P == deg_sq) degree = static_cast<int>(d);
    }
    if (degree == 0) throw std::logic_error("no integral degree for a character");

    Vec modular(r);
    for (std::size_t k = 0; k < r; ++k) {
      modular[k] = f.mul(f.mul(w[k], static_cast<u64>(degree)), f.inv(classes[k].size % P));
    }

    Character ch{degree, std::vector<CplxVal>(r)};
    for (std::size_t k = 0; k < r; ++k) {
      // Eigenvalue multiplicities of rho(z_k) from the power map.
      const u64 o = class_order[k];
      const u64 zo = powmod(z, exponent / o, P);
      const u64 zo_inv = f.inv(zo);
      const u64 o_inv = f.inv(o % P);
      CplxVal value{};
      u64 total = 0;
      for (u64 l = 0; l < o; ++l) {
        u64 m = 0;
        const u64 step = powmod(zo_inv, l, P);
        u64 rot = 1;
        for (u64 j = 0; j < o; ++j) {
          m = f.add(m, f.mul(modular[power_class[k][j]], rot));
          rot = f.mul(rot, step);
        }
        m = f.mul(m, o_inv);
        if (m > static_cast<u64>(degree)) throw std::logic_error("eigenvalue multiplicity out of range");
        total += m;
        value += static_cast<double>(m) *
                 std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(o));
      }
      if (total != static_cast<u64>(degree)) throw std::logic_error("multiplicities do not add up to the degree");
      ch.values[k] = value;
    }
    characters.push_back(std::move(ch));
  }

  std::stable_sort(characters.begin(), characters.end(), [](const Character& x, const Character& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    for (std::size_t k = 0; k < x.values.size(); ++k) {
      if (std::abs(x.values[k] - y.values[k]) > 1e-9) {
        if (std::abs(x.values[k].real() - y.values[k].real()) > 1e-9) return x.values[k].real() < y.values[k].real();
        return x.values[k].imag() < y.values[k].imag();
      }
    }
    return false;
  });

  u64 sum_sq = 0;
  for (const auto& ch : characters) sum_sq += static_cast<u64>(ch.degree) * static_cast<u64>(ch.degree);
  CharTable table(std::move(classes), std::move(characters));
  if (sum_sq != order || table.orthogonality_defect() > 1e-6) {
    throw std::logic_error("computed character table fails orthogonality");
  }
  return table;
}

CuspidalMatch match_cuspidal_difference(const CharTable& table, const ClassFn& t, double tol) {
  const std::uint32_t p = table.prime();
  if (t.prime() != p) throw std::invalid_argument("trace function and table over different primes");
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < table.characters().size(); ++i) {
    const auto& ch = table.characters()[i];
    // At p = 3 the trivial character also has degree (p - 1) / 2.
    const bool trivial = std::all_of(ch.values.begin(), ch.values.end(),
                                     [](CplxVal v) { return std::abs(v - 1.0) < 1e-9; });
    if (ch.degree == static_cast<int>((p - 1) / 2) && !trivial) candidates.push_back(i);
  }
  if (candidates.size() != 2) throw NoMatch("expected two nontrivial characters of degree (p-1)/2");

  const auto& cls = table.classes();
  std::vector<std::size_t> unipotent;
  for (ClassKind kind : {ClassKind::Identity, ClassKind::UnipotentPlus, ClassKind::UnipotentMinus}) {
    unipotent.push_back(cls.index_of(ClassKey{kind, 0}));
  }

  std::size_t plus = candidates[0];
  std::size_t minus = candidates[1];
  auto diff = [&](std::size_t k) {
    return table.characters()[plus].values[k] - table.characters()[minus].values[k];
  };
  CplxVal num{};
  double den = 0;
  for (std::size_t k : unipotent) {
    num += std::conj(diff(k)) * static_cast<double>(t.at(cls[k].key));
    den += std::norm(diff(k));
  }
  if (den < 1e-12) throw NoMatch("candidate characters agree on the unipotent classes");
  CplxVal scale = num / den;
  if (std::abs(scale) < 1e-12) throw NoMatch("trace function vanishes on the unipotent classes");
  const bool flip = scale.real() < -1e-12 || (std::abs(scale.real()) <= 1e-12 && scale.imag() < 0);
  if (flip) {
    std::swap(plus, minus);
    scale = -scale;
  }

  double residual = 0;
  double residual_full = 0;
  for (std::size_t k = 0; k < cls.size(); ++k) {
    const double dev = std::abs(static_cast<double>(t.at(cls[k].key)) - scale * diff(k));
    residual_full = std::max(residual_full, dev);
    if (std::find(unipotent.begin(), unipotent.end(), k) != unipotent.end()) residual = std::max(residual, dev);
  }
  if (residual >= tol) throw NoMatch("trace function is not proportional to the character difference");
  return {plus, minus, scale, residual, residual_full};
}

}  // namespace cuspsl2
