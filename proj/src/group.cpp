#include "sk1lab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sk1lab {

namespace {

std::string default_name(int i) { return "g" + std::to_string(i); }

std::vector<std::string> make_names(int n) {
  std::vector<std::string> names(n);
  names[0] = "e";
  for (int i = 1; i < n; ++i) names[i] = default_name(i);
  return names;
}

}  // namespace

int FiniteGroup::power(int g, i64 e) const {
  int o = order(g);
  e %= o;
  if (e < 0) e += o;
  int acc = 0;
  int base = g;
  while (e > 0) {
    if (e & 1) acc = op(acc, base);
    base = op(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::order(int g) const {
  int o = 1;
  int x = g;
  while (x != 0) {
    x = op(x, g);
    ++o;
    if (o > n) throw std::logic_error("order: runaway (corrupt table)");
  }
  return o;
}

i64 FiniteGroup::exponent() const {
  i64 e = 1;
  for (int g = 0; g < n; ++g) e = std::lcm(e, (i64)order(g));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

void FiniteGroup::validate() const {
  if (n <= 0 || (int)mult.size() != n * n || (int)inv.size() != n || (int)names.size() != n)
    throw std::invalid_argument("group: malformed table data");
  for (int v : mult)
    if (v < 0 || v >= n) throw std::invalid_argument("group: table entry out of range");
  for (int a = 0; a < n; ++a) {
    if (op(0, a) != a || op(a, 0) != a) throw std::invalid_argument("group: 0 is not an identity");
    if (op(a, inv[a]) != 0 || op(inv[a], a) != 0)
      throw std::invalid_argument("group: inverse table wrong");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c)))
          throw std::invalid_argument("group: multiplication not associative");
  std::set<std::string> uniq(names.begin(), names.end());
  if ((int)uniq.size() != n) throw std::invalid_argument("group: element names not unique");
}

std::uint64_t FiniteGroup::table_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix((std::uint64_t)n);
  for (int v : mult) mix((std::uint64_t)v);
  return h;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

// ---------------------------------------------------------------------------
// constructors

FiniteGroup group_from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> names, std::string label) {
  int n = (int)table.size();
  FiniteGroup g;
  g.n = n;
  g.label = std::move(label);
  g.mult.assign(n * n, 0);
  for (int a = 0; a < n; ++a) {
    if ((int)table[a].size() != n) throw std::invalid_argument("group table is not square");
    for (int b = 0; b < n; ++b) g.mult[a * n + b] = table[a][b];
  }
  // locate the identity and move it to index 0
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (g.mult[e * n + a] != a || g.mult[a * n + e] != a) {
        ok = false;
        break;
      }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw std::invalid_argument("group table has no identity");
  if (names.empty()) names = make_names(n);
  if (id != 0) {
    std::vector<int> perm(n);  // old -> new
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[0], perm[id]);
    FiniteGroup h;
    h.n = n;
    h.label = g.label;
    h.mult.assign(n * n, 0);
    h.names.assign(n, "");
    std::vector<int> inv_perm(n);
    for (int i = 0; i < n; ++i) inv_perm[perm[i]] = i;
    for (int a = 0; a < n; ++a) {
      h.names[inv_perm[a]] = names[a];
      for (int b = 0; b < n; ++b)
        h.mult[inv_perm[a] * n + inv_perm[b]] = inv_perm[g.mult[a * n + b]];
    }
    g = std::move(h);
  } else {
    g.names = std::move(names);
  }
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.mult[a * n + b] == 0) g.inv[a] = b;
  g.validate();
  return g;
}

FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                    int max_order, std::string label) {
  if (gens.empty()) return cyclic_group(1);
  size_t k = gens[0].size();
  for (auto& p : gens)
    if (p.size() != k) throw std::invalid_argument("permutation generators of unequal degree");
  std::vector<int> identity(k);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = a[b[i]];
    return c;
  };
  for (size_t at = 0; at < elems.size(); ++at) {
    for (auto& gen : gens) {
      for (auto prod : {compose(elems[at], gen), compose(gen, elems[at])}) {
        if (!index.count(prod)) {
          if ((int)elems.size() >= max_order)
            throw std::invalid_argument("permutation closure exceeds the configured bound");
          index[prod] = (int)elems.size();
          elems.push_back(prod);
        }
      }
    }
  }
  int n = (int)elems.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return group_from_table(std::move(table), {}, std::move(label));
}

FiniteGroup cyclic_group(int m) {
  if (m < 1) throw std::invalid_argument("cyclic_group: order must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  std::vector<std::string> names(m);
  names[0] = "e";
  for (int i = 1; i < m; ++i) names[i] = "a" + std::to_string(i);
  return group_from_table(std::move(t), std::move(names), "C" + std::to_string(m));
}

FiniteGroup dihedral_group(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("dihedral_group: order must be even");
  int m = two_n / 2;
  // elements: i < m rotations r^i; m + i reflections s r^i
  int n = two_n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto idx = [&](int flip, int rot) { return flip * m + ((rot % m) + m) % m; };
  for (int f1 = 0; f1 < 2; ++f1)
    for (int r1 = 0; r1 < m; ++r1)
      for (int f2 = 0; f2 < 2; ++f2)
        for (int r2 = 0; r2 < m; ++r2) {
          // (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(r2 + r1*(-1)^f2)
          int f = (f1 + f2) % 2;
          int r = f2 ? (r2 - r1) : (r2 + r1);
          t[idx(f1, r1)][idx(f2, r2)] = idx(f, r);
        }
  std::vector<std::string> names(n);
  for (int i = 0; i < m; ++i) names[i] = i == 0 ? "e" : "r" + std::to_string(i);
  for (int i = 0; i < m; ++i) names[m + i] = i == 0 ? "s" : "sr" + std::to_string(i);
  return group_from_table(std::move(t), std::move(names), "D" + std::to_string(two_n));
}

FiniteGroup dicyclic_group(int m) {
  // order 4m: a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1
  if (m < 1) throw std::invalid_argument("dicyclic_group: parameter must be positive");
  int n = 4 * m;
  auto idx = [&](int j, int i) { return j * 2 * m + ((i % (2 * m)) + 2 * m) % (2 * m); };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < 2 * m; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < 2 * m; ++i2) {
          // (a^i1 b^j1)(a^i2 b^j2): move b^j1 past a^i2
          int i = j1 ? i1 - i2 : i1 + i2;
          int j = j1 + j2;
          if (j == 2) {
            i += m;  // b^2 = a^m
            j = 0;
          }
          t[idx(j1, i1)][idx(j2, i2)] = idx(j, i);
        }
  std::vector<std::string> names(n);
  for (int i = 0; i < 2 * m; ++i) names[idx(0, i)] = i == 0 ? "e" : "a" + std::to_string(i);
  for (int i = 0; i < 2 * m; ++i) names[idx(1, i)] = "a" + std::to_string(i) + "b";
  std::string label = (m == 2) ? "Q8" : (m == 4 ? "Q16" : (m == 8 ? "Q32" : "Dic" + std::to_string(m)));
  return group_from_table(std::move(t), std::move(names), std::move(label));
}

FiniteGroup elementary_abelian_group(int p, int k) {
  FiniteGroup g = cyclic_group(p);
  for (int i = 1; i < k; ++i) g = direct_product(g, cyclic_group(p));
  g.label = "E" + std::to_string(p) + "^" + std::to_string(k);
  return g;
}

FiniteGroup heisenberg_group(int p) {
  // triples (a,b,c), (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b')
  int n = p * p * p;
  auto idx = [&](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              t[idx(a1, b1, c1)][idx(a2, b2, c2)] =
                  idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
  return group_from_table(std::move(t), {}, "Heis" + std::to_string(p));
}

FiniteGroup symmetric_group_3() {
  FiniteGroup g = group_from_permutations({{1, 0, 2}, {1, 2, 0}}, 8, "S3");
  return g;
}

FiniteGroup alternating_group_4() {
  // generators (0 1)(2 3) and (0 1 2)
  FiniteGroup g = group_from_permutations({{1, 0, 3, 2}, {1, 2, 0, 3}}, 16, "A4");
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n * b.n;
  auto idx = [&](int x, int y) { return x * b.n + y; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = idx(a.op(x1, x2), b.op(y1, y2));
  std::vector<std::string> names(n);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < b.n; ++y)
      names[idx(x, y)] = "(" + a.names[x] + "," + b.names[y] + ")";
  return group_from_table(std::move(t), std::move(names), a.label + "x" + b.label);
}

FiniteGroup semidirect_cyclic(int n, int m, int k) {
  // check k^m == 1 mod n
  i64 kk = 1;
  for (int i = 0; i < m; ++i) kk = (kk * k) % n;
  if (kk % n != 1 % n) throw std::invalid_argument("semidirect_cyclic: action order does not divide m");
  int nn = n * m;
  auto idx = [&](int a, int b) { return a * m + b; };  // a^a b^b, a in C_n, b in C_m
  auto actpow = [&](int a, int e) {
    i64 r = a % n;
    for (int i = 0; i < e; ++i) r = (r * k) % n;
    return (int)r;
  };
  std::vector<std::vector<int>> t(nn, std::vector<int>(nn));
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = 0; b1 < m; ++b1)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < m; ++b2) {
          // (a^a1 b^b1)(a^a2 b^b2) = a^(a1 + k^b1*a2) b^(b1+b2)
          int a = (a1 + actpow(a2, b1)) % n;
          int b = (b1 + b2) % m;
          t[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
        }
  return group_from_table(std::move(t), {},
                          "C" + std::to_string(n) + ":" + std::to_string(k) + ":C" + std::to_string(m));
}

FiniteGroup semidirect_by_automorphism(const FiniteGroup& normal, int m,
                                       const std::vector<int>& action, std::string label) {
  // action: image of each element of `normal` under the automorphism phi,
  // with phi^m = id required.
  if ((int)action.size() != normal.n) throw std::invalid_argument("semidirect: bad action length");
  for (int a = 0; a < normal.n; ++a)
    for (int b = 0; b < normal.n; ++b)
      if (action[normal.op(a, b)] != normal.op(action[a], action[b]))
        throw std::invalid_argument("semidirect: action is not an automorphism");
  std::vector<int> phi_m(normal.n);
  std::iota(phi_m.begin(), phi_m.end(), 0);
  for (int i = 0; i < m; ++i) {
    std::vector<int> nx(normal.n);
    for (int a = 0; a < normal.n; ++a) nx[a] = action[phi_m[a]];
    phi_m = nx;
  }
  for (int a = 0; a < normal.n; ++a)
    if (phi_m[a] != a) throw std::invalid_argument("semidirect: automorphism order does not divide m");

  int nn = normal.n * m;
  auto idx = [&](int a, int b) { return a * m + b; };
  auto act = [&](int a, int e) {
    int r = a;
    for (int i = 0; i < e; ++i) r = action[r];
    return r;
  };
  std::vector<std::vector<int>> t(nn, std::vector<int>(nn));
  for (int a1 = 0; a1 < normal.n; ++a1)
    for (int b1 = 0; b1 < m; ++b1)
      for (int a2 = 0; a2 < normal.n; ++a2)
        for (int b2 = 0; b2 < m; ++b2)
          t[idx(a1, b1)][idx(a2, b2)] = idx(normal.op(a1, act(a2, b1)), (b1 + b2) % m);
  return group_from_table(std::move(t), {}, std::move(label));
}

FiniteGroup quotient_by_central(const FiniteGroup& g, const std::vector<int>& centre,
                                std::string label) {
  Subgroup z = generated_subgroup(g, centre);
  for (int c : z.members)
    for (int a = 0; a < g.n; ++a)
      if (g.op(c, a) != g.op(a, c)) throw std::invalid_argument("quotient_by_central: subgroup not central");
  // cosets
  std::vector<int> coset_of(g.n, -1);
  std::vector<int> reps;
  for (int a = 0; a < g.n; ++a) {
    if (coset_of[a] >= 0) continue;
    int c = (int)reps.size();
    reps.push_back(a);
    for (int zz : z.members) coset_of[g.op(a, zz)] = c;
  }
  int n = (int)reps.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = coset_of[g.op(reps[i], reps[j])];
  return group_from_table(std::move(t), {}, std::move(label));
}

// ---------------------------------------------------------------------------
// structure

ConjugacyData conjugacy_classes(const FiniteGroup& g) {
  ConjugacyData cd;
  cd.class_of.assign(g.n, -1);
  for (int a = 0; a < g.n; ++a) {
    if (cd.class_of[a] >= 0) continue;
    int c = (int)cd.reps.size();
    cd.reps.push_back(a);  // minimal index representative by scan order
    int size = 0;
    for (int h = 0; h < g.n; ++h) {
      int x = g.conj(h, a);
      if (cd.class_of[x] < 0) {
        cd.class_of[x] = c;
        ++size;
      }
    }
    cd.class_sizes.push_back(size);
  }
  return cd;
}

Subgroup centralizer(const FiniteGroup& g, int elem) {
  Subgroup s;
  s.parent = &g;
  for (int h = 0; h < g.n; ++h)
    if (g.op(h, elem) == g.op(elem, h)) s.members.push_back(h);
  return s;
}

Subgroup center(const FiniteGroup& g) {
  Subgroup s;
  s.parent = &g;
  for (int h = 0; h < g.n; ++h) {
    bool central = true;
    for (int a = 0; a < g.n; ++a)
      if (g.op(h, a) != g.op(a, h)) {
        central = false;
        break;
      }
    if (central) s.members.push_back(h);
  }
  return s;
}

std::pair<int, int> p_parts(const FiniteGroup& g, int elem, i64 p) {
  int o = g.order(elem);
  i64 q = 1;
  i64 r = o;
  while (r % p == 0) {
    r /= p;
    q *= p;
  }
  // g_p = elem^(r * s) with r*s == 1 mod q; g_r = elem^(q * t) with q*t == 1 mod r
  i64 s = q == 1 ? 0 : inv_mod(r % q, q);
  i64 t = r == 1 ? 0 : inv_mod(q % r, r);
  int gp = g.power(elem, r * s);
  int gr = g.power(elem, q * t);
  if (g.op(gr, gp) != elem || g.op(gr, gp) != g.op(gp, gr))
    throw std::logic_error("p_parts: factorization check failed");
  return {gr, gp};
}

std::vector<int> p_regular_classes(const FiniteGroup& g, const ConjugacyData& cd, i64 p) {
  std::vector<int> out;
  for (int c = 0; c < cd.num_classes(); ++c)
    if (g.order(cd.reps[c]) % p != 0) out.push_back(c);
  return out;
}

SpecialSet special_set_s(const FiniteGroup& g, int c, i64 p) {
  if (g.order(c) != p) throw std::invalid_argument("special_set_s: c must have order p");
  for (int a = 0; a < g.n; ++a)
    if (g.op(c, a) != g.op(a, c)) throw std::invalid_argument("special_set_s: c must be central");
  ConjugacyData cd = conjugacy_classes(g);
  SpecialSet out;
  for (int a = 0; a < g.n; ++a) {
    bool ok = true;
    int x = a;
    for (i64 m = 1; m < p; ++m) {
      x = g.op(c, x);
      if (cd.class_of[x] != cd.class_of[a]) {
        ok = false;
        break;
      }
    }
    if (ok) out.elements.push_back(a);
  }
  std::set<int> cls;
  for (int a : out.elements) cls.insert(cd.class_of[a]);
  out.classes.assign(cls.begin(), cls.end());
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> elems{0};
  std::vector<int> todo{0};
  for (int x : gens)
    if (!elems.count(x)) {
      elems.insert(x);
      todo.push_back(x);
    }
  while (!todo.empty()) {
    int a = todo.back();
    todo.pop_back();
    for (int b : std::vector<int>(elems.begin(), elems.end())) {
      for (int x : {g.op(a, b), g.op(b, a), g.inv[a]}) {
        if (!elems.count(x)) {
          elems.insert(x);
          todo.push_back(x);
        }
      }
    }
  }
  Subgroup s;
  s.parent = &g;
  s.members.assign(elems.begin(), elems.end());
  return s;
}

std::vector<int> commutator_subgroup_members(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      comms.push_back(g.op(g.op(a, b), g.op(g.inv[a], g.inv[b])));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return generated_subgroup(g, comms).members;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int a = 0; a < g.n; ++a)
    for (int x : h.members)
      if (!h.contains(g.conj(a, x))) return false;
  return true;
}

bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& h) {
  for (int a : h.members)
    for (int b : h.members)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

bool quotient_is_cyclic(const FiniteGroup& g, const Subgroup& h) {
  int q = g.n / (int)h.members.size();
  for (int a = 0; a < g.n; ++a) {
    // order of aH in G/H
    int x = a;
    int o = 1;
    while (!h.contains(x)) {
      x = g.op(x, a);
      ++o;
    }
    if (o == q) return true;
  }
  return q == 1;
}

Abelianization abelianization(const FiniteGroup& g) {
  // Z^n (one generator per element) modulo e_a + e_b - e_{ab} and the
  // exponent floor; coordinates come straight from the presentation.
  TriBasis rels(g.n, g.n == 1 ? 1 : (i64)g.n);
  rels.absorb({{0, 1}});  // identity generator dies
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      int ab = g.op(a, b);
      std::map<int, i64> ent;
      ent[a] += 1;
      ent[b] += 1;
      ent[ab] -= 1;
      SparseVec v;
      for (auto& [r, val] : ent)
        if (val != 0) v.emplace_back(r, val);
      rels.absorb(std::move(v));
    }
  Presentation p = present(rels);
  Abelianization out;
  out.group = p.group();
  out.proj.reserve(g.n);
  for (int a = 0; a < g.n; ++a) out.proj.push_back(p.coords({{a, 1}}));
  out.gens = p.generators();
  return out;
}

std::optional<Subgroup> normal_abelian_cyclic_quotient_witness(const FiniteGroup& g) {
  if (g.is_abelian()) {
    Subgroup whole;
    whole.parent = &g;
    whole.members.resize(g.n);
    std::iota(whole.members.begin(), whole.members.end(), 0);
    return whole;
  }
  // exhaustive over subgroups generated by up to 3 elements (enough at the
  // supported orders: any larger abelian normal subgroup with cyclic
  // quotient would force |G| > 16 in the non-abelian case)
  std::set<std::vector<int>> seen;
  std::optional<Subgroup> best;
  auto consider = [&](Subgroup s) {
    if (!seen.insert(s.members).second) return;
    if ((int)s.members.size() == g.n) return;
    if (best && s.members.size() <= best->members.size()) return;
    if (!subgroup_is_abelian(g, s)) return;
    if (!is_normal(g, s)) return;
    if (!quotient_is_cyclic(g, s)) return;
    best = std::move(s);
  };
  for (int a = 0; a < g.n; ++a) consider(generated_subgroup(g, {a}));
  for (int a = 0; a < g.n; ++a)
    for (int b = a; b < g.n; ++b) consider(generated_subgroup(g, {a, b}));
  for (int a = 0; a < g.n; ++a)
    for (int b = a; b < g.n; ++b)
      for (int c = b; c < g.n; ++c) consider(generated_subgroup(g, {a, b, c}));
  return best;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label) {
  int n = (int)h.members.size();
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[h.members[i]] = i;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = g.names[h.members[i]];
    for (int j = 0; j < n; ++j) {
      auto it = pos.find(g.op(h.members[i], h.members[j]));
      if (it == pos.end()) throw std::invalid_argument("subgroup_as_group: set not closed");
      t[i][j] = it->second;
    }
  }
  return group_from_table(std::move(t), std::move(names), std::move(label));
}

}  // namespace sk1lab
