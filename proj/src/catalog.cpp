#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sk1lab/group.hpp"

namespace sk1lab {

namespace {

// automorphism of C2 x C2 swapping the two factors, as an element permutation
std::vector<int> swap_action_c2c2() {
  FiniteGroup v = elementary_abelian_group(2, 2);
  // elements are pairs (x,y) indexed x*2+y
  std::vector<int> act(4);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) act[x * 2 + y] = y * 2 + x;
  (void)v;
  return act;
}

FiniteGroup c22_semidirect_c4() {
  // C4 acting on C2^2 by swapping coordinates (the action has order 2)
  return semidirect_by_automorphism(elementary_abelian_group(2, 2), 4, swap_action_c2c2(),
                                    "C2^2:C4");
}

FiniteGroup c4_semidirect_c4() { return semidirect_cyclic(4, 4, 3); }

FiniteGroup modular_group_16() { return semidirect_cyclic(8, 2, 5); }    // M16
FiniteGroup semidihedral_group_16() { return semidirect_cyclic(8, 2, 3); }  // SD16

FiniteGroup central_product_c4_d8() {
  // (C4 x D8) / <(a^2, r^2)>
  FiniteGroup prod = direct_product(cyclic_group(4), dihedral_group(8));
  // element index: x * 8 + y with x in C4, y in D8; a^2 = index 2, r^2 = index 2
  int z = 2 * 8 + 2;
  return quotient_by_central(prod, {z}, "C4oD8");
}

FiniteGroup extraspecial_plus_32() {
  // D8 o D8: (D8 x D8) / <(r^2, r^2)>
  FiniteGroup prod = direct_product(dihedral_group(8), dihedral_group(8));
  int z = 2 * 8 + 2;
  return quotient_by_central(prod, {z}, "D8oD8");
}

FiniteGroup extraspecial_minus_32() {
  // D8 o Q8: (D8 x Q8) / <(r^2, a^2)>
  FiniteGroup d8 = dihedral_group(8);
  FiniteGroup q8 = dicyclic_group(2);
  FiniteGroup prod = direct_product(d8, q8);
  int z = 2 * 8 + 2;  // r^2 in D8 is index 2; a^2 in Q8 is index 2
  return quotient_by_central(prod, {z}, "D8oQ8");
}

std::vector<std::vector<int>> partitions_of(int e) {
  // partitions of e as non-increasing sequences
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(e, e);
  return out;
}

}  // namespace

std::vector<FiniteGroup> abelian_groups_of_order(int n) {
  // factor n, take partitions per prime, combine componentwise
  std::map<i64, int> fact;
  int m = n;
  for (int q = 2; q * q <= m; ++q)
    while (m % q == 0) {
      fact[q]++;
      m /= q;
    }
  if (m > 1) fact[m]++;

  std::vector<std::vector<std::vector<i64>>> per_prime;  // choices of cyclic orders
  for (auto& [p, e] : fact) {
    std::vector<std::vector<i64>> choice;
    for (auto& part : partitions_of(e)) {
      std::vector<i64> orders;
      for (int k : part) {
        i64 q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        orders.push_back(q);
      }
      choice.push_back(orders);
    }
    per_prime.push_back(choice);
  }
  std::vector<std::vector<i64>> combos{{}};
  for (auto& choice : per_prime) {
    std::vector<std::vector<i64>> next;
    for (auto& base : combos)
      for (auto& c : choice) {
        auto merged = base;
        merged.insert(merged.end(), c.begin(), c.end());
        next.push_back(merged);
      }
    combos = std::move(next);
  }
  std::vector<FiniteGroup> out;
  for (auto& orders : combos) {
    AbelianGroupPresentation pres = invariant_factors_from_orders(orders);
    std::vector<i64> inv = pres.torsion;
    if (inv.empty()) inv.push_back(1);
    FiniteGroup g = cyclic_group((int)inv.back());
    for (int i = (int)inv.size() - 2; i >= 0; --i) g = direct_product(cyclic_group((int)inv[i]), g);
    std::string label;
    for (size_t i = 0; i < inv.size(); ++i) label += (i ? "x" : "") + ("C" + std::to_string(inv[i]));
    g.label = label;
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.label < b.label; });
  return out;
}

std::vector<CatalogEntry> group_catalog_upto_16() {
  std::vector<CatalogEntry> cat;
  auto add = [&](FiniteGroup g) { cat.push_back({g.label, std::move(g)}); };

  for (int n : {1, 2, 3, 5, 7, 11, 13}) add(cyclic_group(n));
  // order 4
  add(cyclic_group(4));
  add(elementary_abelian_group(2, 2));
  // order 6
  add(cyclic_group(6));
  add(symmetric_group_3());
  // order 8
  add(cyclic_group(8));
  add(direct_product(cyclic_group(4), cyclic_group(2)));
  add(elementary_abelian_group(2, 3));
  add(dihedral_group(8));
  add(dicyclic_group(2));  // Q8
  // order 9
  add(cyclic_group(9));
  add(elementary_abelian_group(3, 2));
  // order 10
  add(cyclic_group(10));
  add(dihedral_group(10));
  // order 12
  add(cyclic_group(12));
  add(direct_product(cyclic_group(6), cyclic_group(2)));
  add(alternating_group_4());
  add(dihedral_group(12));
  add(dicyclic_group(3));  // Dic3 = Q12
  // order 14
  add(cyclic_group(14));
  add(dihedral_group(14));
  // order 15
  add(cyclic_group(15));
  // order 16: 5 abelian + 9 non-abelian
  add(cyclic_group(16));
  add(direct_product(cyclic_group(8), cyclic_group(2)));
  add(direct_product(cyclic_group(4), cyclic_group(4)));
  add(direct_product(cyclic_group(4), elementary_abelian_group(2, 2)));
  add(elementary_abelian_group(2, 4));
  add(dihedral_group(16));
  add(semidihedral_group_16());
  add(modular_group_16());
  add(dicyclic_group(4));  // Q16
  add(direct_product(dihedral_group(8), cyclic_group(2)));
  add(direct_product(dicyclic_group(2), cyclic_group(2)));  // Q8 x C2
  add(c4_semidirect_c4());
  add(c22_semidirect_c4());
  add(central_product_c4_d8());  // C4 o D8 = C4 o Q8

  std::stable_sort(cat.begin(), cat.end(),
                   [](auto& a, auto& b) { return a.group.n < b.group.n; });
  return cat;
}

std::vector<CatalogEntry> two_group_catalog_upto_32() {
  std::vector<CatalogEntry> cat;
  auto add = [&](FiniteGroup g) { cat.push_back({g.label, std::move(g)}); };
  for (auto& e : group_catalog_upto_16())
    if ((e.group.n & (e.group.n - 1)) == 0) cat.push_back(e);
  // order 32, curated families (not a complete classification of the 51
  // isomorphism types; coverage is reported by the scan command)
  for (auto& g : abelian_groups_of_order(32)) add(g);
  add(dihedral_group(32));
  add(semidirect_cyclic(16, 2, 7));  // SD32
  add(semidirect_cyclic(16, 2, 9));  // M32
  add(dicyclic_group(8));            // Q32
  add(direct_product(dihedral_group(16), cyclic_group(2)));
  add(direct_product(dicyclic_group(4), cyclic_group(2)));
  add(direct_product(semidihedral_group_16(), cyclic_group(2)));
  add(direct_product(modular_group_16(), cyclic_group(2)));
  add(direct_product(dihedral_group(8), cyclic_group(4)));
  add(direct_product(dicyclic_group(2), cyclic_group(4)));
  add(direct_product(dihedral_group(8), elementary_abelian_group(2, 2)));
  add(direct_product(dicyclic_group(2), elementary_abelian_group(2, 2)));
  add(direct_product(c4_semidirect_c4(), cyclic_group(2)));
  add(direct_product(c22_semidirect_c4(), cyclic_group(2)));
  add(direct_product(central_product_c4_d8(), cyclic_group(2)));
  add(extraspecial_plus_32());   // D8 o D8
  add(extraspecial_minus_32());  // D8 o Q8
  add(semidirect_cyclic(8, 4, 3));
  add(semidirect_cyclic(8, 4, 5));
  add(semidirect_cyclic(8, 4, 7));
  std::stable_sort(cat.begin(), cat.end(),
                   [](auto& a, auto& b) { return a.group.n < b.group.n; });
  return cat;
}

FiniteGroup group_from_name(const std::string& name) {
  // direct products via 'x'
  auto xpos = name.find('x');
  if (xpos != std::string::npos && name.find('(') == std::string::npos) {
    FiniteGroup a = group_from_name(name.substr(0, xpos));
    FiniteGroup b = group_from_name(name.substr(xpos + 1));
    return direct_product(a, b);
  }
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  if (name == "S3") return symmetric_group_3();
  if (name == "A4") return alternating_group_4();
  if (name == "Q8") return dicyclic_group(2);
  if (name == "Q16") return dicyclic_group(4);
  if (name == "Q32") return dicyclic_group(8);
  if (name == "SD16") return semidihedral_group_16();
  if (name == "SD32") return semidirect_cyclic(16, 2, 7);
  if (name == "M16") return modular_group_16();
  if (name == "M32") return semidirect_cyclic(16, 2, 9);
  if (name == "C4:C4") return c4_semidirect_c4();
  if (name == "C2^2:C4") return c22_semidirect_c4();
  if (name == "C4oD8") return central_product_c4_d8();
  if (name == "D8oD8") return extraspecial_plus_32();
  if (name == "D8oQ8") return extraspecial_minus_32();
  if (starts("Heis")) return heisenberg_group(std::stoi(name.substr(4)));
  if (starts("Dic")) return dicyclic_group(std::stoi(name.substr(3)));
  if (starts("E")) {
    auto caret = name.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("bad elementary abelian name: " + name);
    int p = std::stoi(name.substr(1, caret - 1));
    int k = std::stoi(name.substr(caret + 1));
    return elementary_abelian_group(p, k);
  }
  if (starts("D") && name.size() > 1 && isdigit(name[1])) return dihedral_group(std::stoi(name.substr(1)));
  if (starts("C") && name.size() > 1 && isdigit(name[1])) return cyclic_group(std::stoi(name.substr(1)));
  throw std::invalid_argument("unknown group name: " + name);
}

}  // namespace sk1lab
