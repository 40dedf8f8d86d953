#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace sk1lab {

using i64 = std::int64_t;

/// A finitely generated abelian group in invariant-factor form:
/// Z^free_rank + Z/d1 + Z/d2 + ... with 2 <= d1 | d2 | ...
struct AbelianGroupPresentation {
  int free_rank = 0;
  std::vector<i64> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  /// Group order; only meaningful when free_rank == 0.
  i64 order() const {
    i64 o = 1;
    for (i64 d : torsion) o *= d;
    return o;
  }

  /// Exponent of the torsion part (lcm of invariant factors = last factor).
  i64 exponent() const { return torsion.empty() ? 1 : torsion.back(); }

  bool operator==(const AbelianGroupPresentation& o) const = default;

  std::string str() const;
};

/// Normalize an arbitrary multiset of cyclic orders into invariant factors.
AbelianGroupPresentation invariant_factors_from_orders(std::vector<i64> orders);

/// Direct sum.
AbelianGroupPresentation direct_sum(const AbelianGroupPresentation& a,
                                    const AbelianGroupPresentation& b);

/// M (x) C for M finite with factors `m`, C cyclic of order c:
/// componentwise gcd. c = 0 means Z (keeps M).
AbelianGroupPresentation tensor_with_cyclic(const AbelianGroupPresentation& m, i64 c);

/// Full tensor product of two finite groups by the gcd formula.
AbelianGroupPresentation tensor_finite(const AbelianGroupPresentation& a,
                                       const AbelianGroupPresentation& b);

}  // namespace sk1lab
