#include <doctest.h>

#include <numeric>
#include <set>
#include <map>

#include "sk1lab/group.hpp"

using namespace sk1lab;

TEST_CASE("trivial and cyclic groups") {
  FiniteGroup c1 = group_from_name("C1");
  CHECK(c1.n == 1);
  FiniteGroup c6 = group_from_name("C6");
  CHECK(c6.n == 6);
  CHECK(c6.is_abelian());
  CHECK(c6.order(1) == 6);
}

TEST_CASE("Q8 order census") {
  FiniteGroup q8 = group_from_name("Q8");
  CHECK(q8.n == 8);
  // brute-force order census: 1 identity, 1 of order 2, 6 of order 4
  std::map<int, int> census;
  for (int g = 0; g < q8.n; ++g) census[q8.order(g)]++;
  CHECK(census[1] == 1);
  CHECK(census[2] == 1);
  CHECK(census[4] == 6);
}

TEST_CASE("permutation closure gives S3") {
  FiniteGroup g = group_from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(g.n == 6);
  CHECK_FALSE(g.is_abelian());
  ConjugacyData cd = conjugacy_classes(g);
  std::multiset<int> sizes(cd.class_sizes.begin(), cd.class_sizes.end());
  CHECK(sizes == std::multiset<int>{1, 2, 3});
}

TEST_CASE("permutation closure bound error") {
  CHECK_THROWS(group_from_permutations({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 16));
}

TEST_CASE("conjugacy classes") {
  SUBCASE("abelian groups have singleton classes") {
    FiniteGroup g = group_from_name("C4xC2");
    ConjugacyData cd = conjugacy_classes(g);
    CHECK(cd.num_classes() == g.n);
  }
  SUBCASE("Q8 classes") {
    FiniteGroup g = group_from_name("Q8");
    ConjugacyData cd = conjugacy_classes(g);
    std::multiset<int> sizes(cd.class_sizes.begin(), cd.class_sizes.end());
    CHECK(sizes == std::multiset<int>{1, 1, 2, 2, 2});
  }
  SUBCASE("class size times centralizer order equals group order") {
    for (auto& entry : group_catalog_upto_16()) {
      const FiniteGroup& g = entry.group;
      ConjugacyData cd = conjugacy_classes(g);
      int total = 0;
      for (int c = 0; c < cd.num_classes(); ++c) {
        total += cd.class_sizes[c];
        Subgroup z = centralizer(g, cd.reps[c]);
        CHECK((int)z.members.size() * cd.class_sizes[c] == g.n);
      }
      CHECK(total == g.n);
    }
  }
}

TEST_CASE("centralizer basics") {
  FiniteGroup q8 = group_from_name("Q8");
  CHECK((int)centralizer(q8, 0).members.size() == 8);
  // central element of order 2
  int z = -1;
  for (int g = 1; g < 8; ++g)
    if (q8.order(g) == 2) z = g;
  CHECK((int)centralizer(q8, z).members.size() == 8);
  // non-central: centralizer is cyclic of order 4 (exhaustive check)
  for (int g = 0; g < 8; ++g) {
    if (q8.order(g) != 4) continue;
    Subgroup c = centralizer(q8, g);
    CHECK((int)c.members.size() == 4);
    FiniteGroup cg = subgroup_as_group(q8, c, "centralizer");
    bool cyclic = false;
    for (int h = 0; h < cg.n; ++h) cyclic |= (cg.order(h) == 4);
    CHECK(cyclic);
  }
}

TEST_CASE("p_parts") {
  FiniteGroup c6 = group_from_name("C6");
  SUBCASE("identity and p-power cases") {
    auto [r0, p0] = p_parts(c6, 0, 2);
    CHECK(r0 == 0);
    CHECK(p0 == 0);
    auto [r3, p3] = p_parts(c6, 3, 2);  // a^3 has order 2
    CHECK(r3 == 0);
    CHECK(p3 == 3);
  }
  SUBCASE("generator of C6 at p=2 splits as (a^4, a^3)") {
    auto [gr, gp] = p_parts(c6, 1, 2);
    CHECK(gr == 4);
    CHECK(gp == 3);
  }
  SUBCASE("exhaustive uniqueness oracle on catalog groups") {
    for (auto& entry : group_catalog_upto_16()) {
      const FiniteGroup& g = entry.group;
      for (i64 p : {2, 3}) {
        for (int a = 0; a < g.n; ++a) {
          auto [gr, gp] = p_parts(g, a, p);
          CHECK(g.op(gr, gp) == a);
          CHECK(g.op(gr, gp) == g.op(gp, gr));
          CHECK(g.order(gr) % p != 0);
          int og = g.order(gp);
          while (og % p == 0) og /= p;
          CHECK(og == 1);
          // uniqueness: brute force over powers of a
          int found = 0;
          int o = g.order(a);
          for (int i = 0; i < o; ++i)
            for (int j = 0; j < o; ++j) {
              int x = g.power(a, i), y = g.power(a, j);
              if (g.op(x, y) != a || g.op(x, y) != g.op(y, x)) continue;
              if (g.order(x) % p == 0) continue;
              int oy = g.order(y);
              while (oy % p == 0) oy /= p;
              if (oy != 1) continue;
              ++found;
              CHECK(x == gr);
              CHECK(y == gp);
            }
          CHECK(found == 1);
        }
      }
    }
  }
}

TEST_CASE("p_regular_classes") {
  SUBCASE("p-group: only identity") {
    FiniteGroup g = group_from_name("D8");
    ConjugacyData cd = conjugacy_classes(g);
    auto pr = p_regular_classes(g, cd, 2);
    CHECK(pr == std::vector<int>{0});
  }
  SUBCASE("C6 at p=2") {
    FiniteGroup g = group_from_name("C6");
    ConjugacyData cd = conjugacy_classes(g);
    auto pr = p_regular_classes(g, cd, 2);
    std::set<int> elems;
    for (int c : pr) elems.insert(cd.reps[c]);
    CHECK(elems == std::set<int>{0, 2, 4});
  }
  SUBCASE("p coprime to the order: all classes") {
    FiniteGroup g = group_from_name("D8");
    ConjugacyData cd = conjugacy_classes(g);
    CHECK((int)p_regular_classes(g, cd, 3).size() == cd.num_classes());
  }
}

TEST_CASE("special set S") {
  SUBCASE("abelian: empty") {
    FiniteGroup g = group_from_name("C4");
    SpecialSet s = special_set_s(g, 2, 2);  // c = a^2 central of order 2
    CHECK(s.elements.empty());
  }
  SUBCASE("Q8 with c = -1") {
    FiniteGroup g = group_from_name("Q8");
    int c = -1;
    for (int x = 1; x < 8; ++x)
      if (g.order(x) == 2) c = x;
    SpecialSet s = special_set_s(g, c, 2);
    // the six elements of order 4
    CHECK((int)s.elements.size() == 6);
    for (int x : s.elements) CHECK(g.order(x) == 4);
    // S is a union of classes and stable under multiplication by c
    ConjugacyData cd = conjugacy_classes(g);
    std::set<int> se(s.elements.begin(), s.elements.end());
    for (int x : s.elements) {
      CHECK(se.count(g.op(c, x)));
      for (int h = 0; h < g.n; ++h) CHECK(se.count(g.conj(h, x)));
    }
    (void)cd;
  }
  SUBCASE("c not a commutator: S empty") {
    // Q8 x C2 with c = (e, t): central of order 2, not a commutator
    FiniteGroup g = group_from_name("Q8xC2");
    int c = 1;  // (e, t) under the product indexing = index 1
    CHECK(g.order(c) == 2);
    auto comm = commutator_subgroup_members(g);
    CHECK(!std::binary_search(comm.begin(), comm.end(), c));
    SpecialSet s = special_set_s(g, c, 2);
    CHECK(s.elements.empty());
    CHECK(s.classes.empty());
  }
  SUBCASE("errors") {
    FiniteGroup g = group_from_name("D8");
    CHECK_THROWS(special_set_s(g, 1, 2));  // rotation of order 4
  }
}

TEST_CASE("abelianization") {
  SUBCASE("abelian groups are their own abelianization") {
    FiniteGroup g = group_from_name("C4xC2");
    Abelianization ab = abelianization(g);
    CHECK(ab.group.torsion == std::vector<i64>{2, 4});
  }
  SUBCASE("Q8 and D8 abelianize to (Z/2)^2") {
    for (const char* name : {"Q8", "D8"}) {
      Abelianization ab = abelianization(group_from_name(name));
      CHECK(ab.group.torsion == std::vector<i64>{2, 2});
    }
  }
  SUBCASE("order equals |G| / |[G,G]| on the catalog") {
    for (auto& entry : group_catalog_upto_16()) {
      const FiniteGroup& g = entry.group;
      Abelianization ab = abelianization(g);
      auto comm = commutator_subgroup_members(g);
      CHECK(ab.group.order() * (i64)comm.size() == (i64)g.n);
      // projection is a homomorphism killing commutators
      for (int a = 0; a < g.n; a += 3)
        for (int b = 0; b < g.n; b += 2) {
          DenseVec pa = ab.proj[a], pb = ab.proj[b], pab = ab.proj[g.op(a, b)];
          for (size_t k = 0; k < pab.size(); ++k)
            CHECK(pab[k] == mod_floor(pa[k] + pb[k], ab.group.torsion[k]));
        }
    }
  }
}

TEST_CASE("normal abelian subgroup with cyclic quotient") {
  SUBCASE("cyclic: the whole group") {
    FiniteGroup g = group_from_name("C8");
    auto w = normal_abelian_cyclic_quotient_witness(g);
    REQUIRE(w.has_value());
    CHECK((int)w->members.size() == 8);
  }
  SUBCASE("D8: the rotation C4") {
    FiniteGroup g = group_from_name("D8");
    auto w = normal_abelian_cyclic_quotient_witness(g);
    REQUIRE(w.has_value());
    CHECK((int)w->members.size() == 4);
    CHECK(subgroup_is_abelian(g, *w));
    CHECK(is_normal(g, *w));
    CHECK(quotient_is_cyclic(g, *w));
  }
  SUBCASE("elementary abelian (Z/2)^3 has an index-2 witness") {
    FiniteGroup g = group_from_name("E2^3");
    auto w = normal_abelian_cyclic_quotient_witness(g);
    REQUIRE(w.has_value());
    CHECK((int)w->members.size() == 8);  // abelian: whole group
  }
}

TEST_CASE("catalog counts per order") {
  std::map<int, int> counts;
  for (auto& e : group_catalog_upto_16()) {
    e.group.validate();
    counts[e.group.n]++;
  }
  std::map<int, int> expected{{1, 1}, {2, 1},  {3, 1}, {4, 2},  {5, 1}, {6, 2},
                              {7, 1}, {8, 5},  {9, 2}, {10, 2}, {11, 1}, {12, 5},
                              {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  CHECK(counts == expected);
}

TEST_CASE("abelian group generator") {
  CHECK(abelian_groups_of_order(1).size() == 1);
  CHECK(abelian_groups_of_order(24).size() == 3);   // C24, C2xC12, C2xC2xC6
  CHECK(abelian_groups_of_order(32).size() == 7);
  for (auto& g : abelian_groups_of_order(24)) CHECK(g.is_abelian());
}

TEST_CASE("two-group catalog basics") {
  for (auto& e : two_group_catalog_upto_32()) {
    CHECK((e.group.n & (e.group.n - 1)) == 0);
    CHECK(e.group.n <= 32);
  }
}
