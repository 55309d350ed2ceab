#include "cuspsl2/slgroup/enumerate.hpp"

#include <string>

#include "cuspsl2/exactnum/modarith.hpp"

namespace cuspsl2 {

std::uint64_t sl2_order(std::uint32_t p, int n) {
  const std::uint64_t q = checked_pow(p, n);
  return q * q * q / (std::uint64_t{p} * p) * (std::uint64_t{p} * p - 1);
}

void check_enumeration_budget(std::uint32_t p, int n) {
  if (p < 2 || n < 1) throw std::invalid_argument("enumeration needs p >= 2 and n >= 1");
  unsigned __int128 size = 1;
  for (int i = 0; i < 3 * n; ++i) {
    size *= p;
    if (size > kEnumerationBudget) {
      throw BudgetExceeded("SL2(Z/" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds enumeration budget");
    }
  }
}

std::vector<SL2Fp> enumerate_sl2_fp(std::uint32_t p) {
  std::vector<SL2Fp> out;
  out.reserve(sl2_order(p, 1));
  for_each_sl2_fp(p, [&](const SL2Fp& g) { out.push_back(g); });
  return out;
}

std::vector<SL2Zpn> enumerate_sl2_zpn(std::uint32_t p, int n) {
  check_enumeration_budget(p, n);
  std::vector<SL2Zpn> out;
  out.reserve(sl2_order(p, n));
  for_each_sl2_zpn(p, n, [&](const SL2Zpn& g) { out.push_back(g); });
  return out;
}

}  // namespace cuspsl2
