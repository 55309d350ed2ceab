#pragma once

#include <cstdint>
#include <vector>

#include "cuspsl2/errors.hpp"
#include "cuspsl2/slgroup/sl2.hpp"

namespace cuspsl2 {

// Enumerations refuse rings with p^(3n) above this bound.
inline constexpr std::uint64_t kEnumerationBudget = 100'000'000;

// |SL2(Z/p^n)| = p^(3n) (1 - p^-2).
std::uint64_t sl2_order(std::uint32_t p, int n);

// Throws BudgetExceeded when p^(3n) is over budget.
void check_enumeration_budget(std::uint32_t p, int n);

// Visits every element of SL2(Z/p^n) exactly once, in a fixed order.
template <class Visit>
void for_each_sl2_zpn(std::uint32_t p, int n, Visit&& visit) {
  check_enumeration_budget(p, n);
  const std::uint64_t q = ZpnElem(0, p, n).modulus();
  for (std::uint64_t a = 0; a < q; ++a) {
    const ZpnElem ea(static_cast<std::int64_t>(a), p, n);
    for (std::uint64_t b = 0; b < q; ++b) {
      const ZpnElem eb(static_cast<std::int64_t>(b), p, n);
      if (ea.is_unit()) {
        const ZpnElem ainv = ea.inverse();
        for (std::uint64_t c = 0; c < q; ++c) {
          const ZpnElem ec(static_cast<std::int64_t>(c), p, n);
          visit(SL2Zpn(ea, eb, ec, (one_like(ea) + eb * ec) * ainv));
        }
      } else if (eb.is_unit()) {
        const ZpnElem binv = eb.inverse();
        for (std::uint64_t d = 0; d < q; ++d) {
          const ZpnElem ed(static_cast<std::int64_t>(d), p, n);
          visit(SL2Zpn(ea, eb, (ea * ed - one_like(ea)) * binv, ed));
        }
      }
    }
  }
}

template <class Visit>
void for_each_sl2_fp(std::uint32_t p, Visit&& visit) {
  for_each_sl2_zpn(p, 1, [&](const SL2Zpn& g) { visit(to_residue_field(g)); });
}

std::vector<SL2Fp> enumerate_sl2_fp(std::uint32_t p);
std::vector<SL2Zpn> enumerate_sl2_zpn(std::uint32_t p, int n);

}  // namespace cuspsl2
