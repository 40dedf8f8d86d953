#include <doctest.h>

#include <random>
#include <set>
#include <map>

#include "sk1lab/lattice.hpp"

using namespace sk1lab;

namespace {

// brute-force the quotient Z^n/(cols + m Z^n) by enumerating the subgroup of
// (Z/m)^n generated by the columns, for tiny n
i64 brute_quotient_order(int n, const std::vector<DenseVec>& cols, i64 m) {
  std::set<DenseVec> span;
  DenseVec zero(n, 0);
  span.insert(zero);
  std::vector<DenseVec> frontier{zero};
  while (!frontier.empty()) {
    DenseVec v = frontier.back();
    frontier.pop_back();
    for (auto& c : cols) {
      DenseVec w = v;
      for (int i = 0; i < n; ++i) w[i] = mod_floor(w[i] + c[i], m);
      if (span.insert(w).second) frontier.push_back(w);
    }
  }
  i64 total = 1;
  for (int i = 0; i < n; ++i) total *= m;
  return total / (i64)span.size();
}

}  // namespace

TEST_CASE("tribasis absorbs and solves") {
  TriBasis t(3, 0);
  t.absorb({{0, 2}, {1, 1}});
  t.absorb({{1, 3}});
  CHECK(t.contains({{0, 2}, {1, 4}}));
  CHECK(t.contains({{0, 4}, {1, 2}}));       // 2*(2,1,0) + 0*(0,3,0)
  CHECK_FALSE(t.contains({{0, 1}}));
  auto c = t.solve({{0, 2}, {1, 4}});
  REQUIRE(c.has_value());
  CHECK(*c == SparseVec{{0, 1}, {1, 1}});
}

TEST_CASE("tribasis with modulus keeps wrap-around residuals reducible") {
  // pivot 2 with tail at row 1, m = 8: 4*(col) = (8, 4) == (0, 4) must be a member
  TriBasis t(2, 8);
  t.absorb({{0, 2}, {1, 1}});
  CHECK(t.contains({{1, 4}}));
  CHECK_FALSE(t.contains({{1, 2}}));
}

TEST_CASE("presentation of simple quotients") {
  // Z^2 / <(2,0),(0,3)> with floor 6: canonically Z/6
  TriBasis t(2, 6);
  t.absorb({{0, 2}});
  t.absorb({{1, 3}});
  Presentation p = present(t);
  CHECK(p.group().torsion == std::vector<i64>{6});
  DenseVec c0 = p.coords({{0, 1}});
  DenseVec c1 = p.coords({{1, 1}});
  CHECK(c0 == DenseVec{3});                 // the order-2 element of Z/6
  CHECK((c1 == DenseVec{2} || c1 == DenseVec{4}));
  CHECK(p.coords({{0, 2}}) == DenseVec{0});
}

TEST_CASE("presentation with mixing relations") {
  // Z^2 / <(2,2),(0,4)>, floor 8: group is Z/2 + Z/4 of order 8
  TriBasis t(2, 8);
  t.absorb({{0, 2}, {1, 2}});
  t.absorb({{1, 4}});
  Presentation p = present(t);
  CHECK(p.group().order() == 8);
  CHECK(p.group().torsion == std::vector<i64>{2, 4});
  // generator sanity: coords of each generator must be a unit basis vector
  for (size_t j = 0; j < p.generators().size(); ++j) {
    DenseVec c = p.coords(p.generators()[j]);
    for (size_t k = 0; k < c.size(); ++k) CHECK(c[k] == (k == j ? 1 : 0));
  }
}

TEST_CASE("random presentations match brute force order") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + (int)(rng() % 4);
    i64 m = std::vector<i64>{4, 8, 9, 12, 16}[rng() % 5];
    int k = 1 + (int)(rng() % 4);
    std::vector<DenseVec> cols;
    TriBasis t(n, m);
    for (int j = 0; j < k; ++j) {
      DenseVec c(n);
      for (int i = 0; i < n; ++i) c[i] = (i64)(rng() % (2 * m)) - (i64)m;
      cols.push_back(c);
      t.absorb(to_sparse(c));
    }
    Presentation p = present(t);
    CHECK(p.group().order() == brute_quotient_order(n, cols, m));
    // coords of every relation must vanish
    for (auto& c : cols) {
      DenseVec z = p.coords(to_sparse(c));
      for (i64 v : z) CHECK(v == 0);
    }
    // coords are additive: coords(a+b) == coords(a)+coords(b) mod factors
    DenseVec a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = (i64)(rng() % m);
      b[i] = (i64)(rng() % m);
    }
    DenseVec ab(n);
    for (int i = 0; i < n; ++i) ab[i] = a[i] + b[i];
    DenseVec ca = p.coords(to_sparse(a)), cb = p.coords(to_sparse(b)), cab = p.coords(to_sparse(ab));
    for (size_t i = 0; i < cab.size(); ++i)
      CHECK(cab[i] == mod_floor(ca[i] + cb[i], p.factors()[i]));
  }
}

TEST_CASE("kernel lattice over Z") {
  // A = [1 1 1] -> kernel of rank 2
  std::vector<SparseVec> cols = {{{0, 1}}, {{0, 1}}, {{0, 1}}};
  TriBasis k = kernel_lattice(1, 3, cols, 0);
  CHECK(k.contains({{0, 1}, {1, -1}}));
  CHECK(k.contains({{1, 1}, {2, -1}}));
  CHECK_FALSE(k.contains({{0, 1}}));
}

TEST_CASE("kernel lattice mod m") {
  // x = 2y mod 4 kernel of [1 -2] over Z/4
  std::vector<SparseVec> cols = {{{0, 1}}, {{0, -2}}};
  TriBasis k = kernel_lattice(1, 2, cols, 4);
  CHECK(k.contains({{0, 2}, {1, 1}}));
  CHECK(k.contains({{0, 2}, {1, -1}}));
  CHECK_FALSE(k.contains({{0, 1}, {1, 1}}));
  CHECK(k.contains({{0, 4}}));  // floor
}

TEST_CASE("random kernels mod m verified by membership") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + (int)(rng() % 3);
    int n = 1 + (int)(rng() % 5);
    i64 m = std::vector<i64>{4, 8, 9, 27}[rng() % 4];
    std::vector<SparseVec> cols(n);
    std::vector<DenseVec> dense(rows, DenseVec(n, 0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < rows; ++i) {
        i64 v = (i64)(rng() % m);
        dense[i][j] = v;
        if (v) cols[j].emplace_back(i, v);
      }
    TriBasis ker = kernel_lattice(rows, n, cols, m);
    // every x in {0..m-1}^n (sampled) is in ker iff A x == 0 mod m
    for (int s = 0; s < 50; ++s) {
      DenseVec x(n);
      for (int j = 0; j < n; ++j) x[j] = (i64)(rng() % m);
      bool in = true;
      for (int i = 0; i < rows; ++i) {
        i64 acc = 0;
        for (int j = 0; j < n; ++j) acc += dense[i][j] * x[j];
        if (mod_floor(acc, m) != 0) in = false;
      }
      CHECK(ker.contains(to_sparse(x)) == in);
    }
  }
}

TEST_CASE("quotient_by collapses a span") {
  // (Z/4)^2 / <(2,2)>: order 8
  SubQuotient q = quotient_by({4, 4}, {{2, 2}});
  i64 order = 1;
  for (i64 f : q.factors) order *= f;
  CHECK(order == 8);
  DenseVec img = q.apply({2, 2});
  for (i64 v : img) CHECK(v == 0);
}
