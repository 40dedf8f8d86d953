#include "sk1lab/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sk1lab {

std::string AbelianGroupPresentation::str() const {
  if (is_trivial()) return "0";
  std::string s;
  if (free_rank == 1) s = "Z";
  if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (i64 d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

AbelianGroupPresentation invariant_factors_from_orders(std::vector<i64> orders) {
  std::map<i64, std::vector<int>> pparts;  // prime -> exponent multiset
  for (i64 o : orders) {
    if (o <= 1) continue;
    for (i64 q = 2; q * q <= o; ++q)
      if (o % q == 0) {
        int e = 0;
        while (o % q == 0) {
          o /= q;
          ++e;
        }
        pparts[q].push_back(e);
      }
    if (o > 1) pparts[o].push_back(1);
  }
  size_t k = 0;
  for (auto& [p, es] : pparts) {
    std::sort(es.rbegin(), es.rend());
    k = std::max(k, es.size());
  }
  std::vector<i64> inv(k, 1);
  for (auto& [p, es] : pparts)
    for (size_t i = 0; i < es.size(); ++i) {
      i64 q = 1;
      for (int j = 0; j < es[i]; ++j) q *= p;
      inv[i] *= q;  // largest factor gathers the largest prime powers
    }
  std::sort(inv.begin(), inv.end());
  AbelianGroupPresentation out;
  out.torsion = std::move(inv);
  return out;
}

AbelianGroupPresentation direct_sum(const AbelianGroupPresentation& a,
                                    const AbelianGroupPresentation& b) {
  std::vector<i64> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  AbelianGroupPresentation out = invariant_factors_from_orders(std::move(orders));
  out.free_rank = a.free_rank + b.free_rank;
  return out;
}

AbelianGroupPresentation tensor_with_cyclic(const AbelianGroupPresentation& m, i64 c) {
  if (m.free_rank != 0) throw std::invalid_argument("tensor_with_cyclic: finite groups only");
  if (c == 0) return m;
  std::vector<i64> orders;
  for (i64 d : m.torsion) orders.push_back(std::gcd(d, c));
  return invariant_factors_from_orders(std::move(orders));
}

AbelianGroupPresentation tensor_finite(const AbelianGroupPresentation& a,
                                       const AbelianGroupPresentation& b) {
  if (a.free_rank != 0 || b.free_rank != 0)
    throw std::invalid_argument("tensor_finite: finite groups only");
  std::vector<i64> orders;
  for (i64 x : a.torsion)
    for (i64 y : b.torsion) orders.push_back(std::gcd(x, y));
  return invariant_factors_from_orders(std::move(orders));
}

}  // namespace sk1lab
