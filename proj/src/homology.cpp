#include "sk1lab/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace sk1lab {

namespace {

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Indexer {
  int q;    // |G|
  int d;    // module dimension
  int k;    // degree

  int dim() const {
    i64 n = d;
    for (int i = 0; i < k; ++i) n *= (q - 1);
    return (int)n;
  }
  // tuple entries are elements in 1..q-1
  int index(const std::vector<int>& tuple, int b) const {
    i64 at = 0;
    for (int t : tuple) at = at * (q - 1) + (t - 1);
    return (int)(at * d + b);
  }
  void unpack(int idx, std::vector<int>& tuple, int& b) const {
    b = idx % d;
    i64 at = idx / d;
    tuple.assign(k, 0);
    for (int i = k - 1; i >= 0; --i) {
      tuple[i] = (int)(at % (q - 1)) + 1;
      at /= (q - 1);
    }
  }
};

int module_act(const FiniteGroup& g, const CoeffModule& m, int elem, int b) {
  if (!m.conjugation || m.basis.empty()) return b;
  int x = m.basis[b];
  int y = g.conj(elem, x);
  auto it = std::lower_bound(m.basis.begin(), m.basis.end(), y);
  if (it == m.basis.end() || *it != y) throw std::logic_error("module_act: basis not closed");
  return (int)(it - m.basis.begin());
}

void add_entry(std::map<int, i64>& acc, int row, i64 v) {
  acc[row] += v;
  if (acc[row] == 0) acc.erase(row);
}

SparseVec finish(std::map<int, i64>& acc, i64 modulus) {
  SparseVec out;
  for (auto& [r, v] : acc) {
    i64 x = modulus > 0 ? mod_floor(v, modulus) : v;
    if (x != 0) out.emplace_back(r, x);
  }
  return out;
}

}  // namespace

CoeffModule CoeffModule::trivial_mod(i64 p, int N) {
  CoeffModule m;
  m.p = p;
  m.modulus = ipow(p, N);
  return m;
}

CoeffModule CoeffModule::conjugation_mod(const FiniteGroup& g, i64 p, int N) {
  CoeffModule m;
  m.p = p;
  m.modulus = ipow(p, N);
  m.conjugation = true;
  for (int x = 0; x < g.n; ++x)
    if (g.order(x) % p != 0) m.basis.push_back(x);
  return m;
}

int bar_dim(const FiniteGroup& g, const CoeffModule& m, int k) {
  Indexer ix{g.n, m.dim(), k};
  return ix.dim();
}

SparseVec bar_boundary_column(const FiniteGroup& g, const CoeffModule& m, int k, int col) {
  if (k < 1 || k > 3) throw std::invalid_argument("bar_boundary: degree must be 1..3");
  const int d = m.dim();
  const int q1 = g.n - 1;
  const int b = col % d;
  int at = col / d;
  int t[3] = {0, 0, 0};
  for (int i = k - 1; i >= 0; --i) {
    t[i] = at % q1 + 1;
    at /= q1;
  }
  // up to 4 terms; merge in place
  std::pair<int, i64> e[4];
  int ne = 0;
  if (k == 1) {
    e[ne++] = {b, 1};
    e[ne++] = {module_act(g, m, t[0], b), -1};
  } else if (k == 2) {
    int gh = g.op(t[0], t[1]);
    e[ne++] = {(t[1] - 1) * d + b, 1};
    if (gh != 0) e[ne++] = {(gh - 1) * d + b, -1};
    e[ne++] = {(t[0] - 1) * d + module_act(g, m, t[1], b), 1};
  } else {
    int gh = g.op(t[0], t[1]);
    int hk = g.op(t[1], t[2]);
    e[ne++] = {((t[1] - 1) * q1 + t[2] - 1) * d + b, 1};
    if (gh != 0) e[ne++] = {((gh - 1) * q1 + t[2] - 1) * d + b, -1};
    if (hk != 0) e[ne++] = {((t[0] - 1) * q1 + hk - 1) * d + b, 1};
    e[ne++] = {((t[0] - 1) * q1 + t[1] - 1) * d + module_act(g, m, t[2], b), -1};
  }
  std::sort(e, e + ne);
  SparseVec out;
  out.reserve(ne);
  for (int i = 0; i < ne;) {
    int r = e[i].first;
    i64 v = 0;
    while (i < ne && e[i].first == r) v += e[i++].second;
    if (m.modulus > 0) v = mod_floor(v, m.modulus);
    if (v != 0) out.emplace_back(r, v);
  }
  return out;
}

std::vector<SparseVec> bar_boundary(const FiniteGroup& g, const CoeffModule& m, int k) {
  int n = bar_dim(g, m, k);
  std::vector<SparseVec> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = bar_boundary_column(g, m, k, j);
  return cols;
}

HomologyPresentation homology(const FiniteGroup& g, int degree, const CoeffModule& m,
                              const HomologyOptions& opt) {
  if (degree < 1 || degree > 2) throw std::invalid_argument("homology: degree must be 1 or 2");
  if (degree == 2 && m.modulus == 0) {
    int bound = opt.allow_large ? 64 : opt.max_order_deg2_int;
    if (g.n > bound)
      throw std::invalid_argument("homology: group order " + std::to_string(g.n) +
                                  " exceeds the degree-2 bound " + std::to_string(bound));
  }
  HomologyPresentation h;
  h.g_ = g;
  h.module_ = m;
  h.degree_ = degree;

  const int nk = bar_dim(g, m, degree);
  const int nk1 = bar_dim(g, m, degree - 1);
  std::vector<SparseVec> dk(nk);
  for (int j = 0; j < nk; ++j) dk[j] = bar_boundary_column(g, m, degree, j);

  // For integral coefficients the exact quotient is recovered from bounded
  // arithmetic: with e = |G| (which kills positive-degree homology and the
  // torsion of the relevant cokernels),
  //   H_k = {x : d x == 0 mod e^2} / (im d_{k+1} + e * {x : d x == 0 mod e}).
  const i64 e = (i64)g.n;
  const i64 mker = m.modulus > 0 ? m.modulus : e * e;
  h.cycles_ = kernel_lattice(nk1, nk, dk, mker);
  for (auto& [r, col] : h.cycles_.columns()) h.coord_rows_.push_back(r);

  const int z = (int)h.coord_rows_.size();
  const i64 floor_m = m.modulus > 0 ? m.modulus : std::max<i64>(1, e);

  // Gather the relation lattice in chain coordinates first (the boundary
  // columns are 4-sparse, so this absorbs cheaply), then express the
  // deduplicated basis in cycle coordinates.
  TriBasis bd(nk, mker);
  const int nk2 = bar_dim(g, m, degree + 1);
  for (int j = 0; j < nk2; ++j) {
    SparseVec col = bar_boundary_column(g, m, degree + 1, j);
    if (!col.empty()) bd.absorb(std::move(col));
  }
  if (m.modulus == 0) {
    TriBasis ke = kernel_lattice(nk1, nk, dk, e);
    for (auto& [r, col] : ke.columns()) {
      SparseVec scaled;
      for (auto& [row, v] : col) scaled.emplace_back(row, mod_floor(e * v, mker));
      bd.absorb(std::move(scaled));
    }
  }

  TriBasis rels(z, floor_m);
  for (auto& [r, col] : bd.columns()) {
    auto y = h.cycles_.solve(col);
    if (!y) throw std::logic_error("homology: relation column is not a cycle");
    rels.absorb(h.compact(*y));
  }
  // working-modulus relations mker * e_j (the implicit part of bd's lattice)
  for (int j = 0; j < nk; ++j) {
    auto y = h.cycles_.solve({{j, mker}});
    if (!y) throw std::logic_error("homology: modulus floor escapes the cycle lattice");
    rels.absorb(h.compact(*y));
  }
  h.pres_ = present(rels);
  for (auto& gen : h.pres_.generators()) {
    std::map<int, i64> acc;
    for (auto& [ri, c] : gen) {
      auto it = h.cycles_.columns().find(h.coord_rows_[ri]);
      if (it == h.cycles_.columns().end())
        throw std::logic_error("homology: generator row has no cycle column");
      for (auto& [row, v] : it->second) add_entry(acc, row, c * v);
    }
    h.gen_chains_.push_back(finish(acc, h.cycles_.modulus()));
  }
  return h;
}

SparseVec HomologyPresentation::compact(const SparseVec& coords) const {
  SparseVec out;
  out.reserve(coords.size());
  for (auto& [r, v] : coords) {
    auto it = std::lower_bound(coord_rows_.begin(), coord_rows_.end(), r);
    if (it == coord_rows_.end() || *it != r)
      throw std::logic_error("homology: coordinate outside the cycle pivot rows");
    out.emplace_back((int)(it - coord_rows_.begin()), v);
  }
  return out;
}

DenseVec HomologyPresentation::class_of_cycle(const SparseVec& chain) const {
  std::map<int, i64> acc;
  for (auto& [j, c] : chain) {
    SparseVec col = bar_boundary_column(g_, module_, degree_, j);
    for (auto& [r, v] : col) add_entry(acc, r, c * v);
  }
  SparseVec img = finish(acc, module_.modulus);
  if (!img.empty()) throw std::invalid_argument("class_of_cycle: chain is not a cycle");
  auto y = cycles_.solve(chain);
  if (!y) throw std::logic_error("class_of_cycle: cycle not in the computed cycle lattice");
  return pres_.coords(compact(*y));
}

SparseVec HomologyPresentation::generator_chain(int j) const { return gen_chains_.at(j); }

SparseVec HomologyPresentation::psi_chain(const SparseVec& chain) const {
  if (!module_.conjugation || module_.basis.empty()) return chain;  // trivial coefficients
  Indexer ix{g_.n, module_.dim(), degree_};
  std::map<int, i64> acc;
  std::vector<int> t;
  int b;
  for (auto& [j, c] : chain) {
    ix.unpack(j, t, b);
    int x = module_.basis[b];
    int xp = g_.power(x, module_.p);
    auto it = std::lower_bound(module_.basis.begin(), module_.basis.end(), xp);
    if (it == module_.basis.end() || *it != xp)
      throw std::logic_error("psi_chain: p-th power left the p-regular basis");
    add_entry(acc, ix.index(t, (int)(it - module_.basis.begin())), c);
  }
  return finish(acc, module_.modulus);
}

std::vector<DenseVec> HomologyPresentation::induced_psi() const {
  const int h = (int)factors().size();
  std::vector<DenseVec> p(h, DenseVec(h, 0));
  for (int j = 0; j < h; ++j) {
    SparseVec moved = psi_chain(gen_chains_[j]);
    DenseVec cls = class_of_cycle(moved);  // throws if not a cycle
    for (int i = 0; i < h; ++i) p[i][j] = cls[i];
  }
  // boundary-to-boundary sample check
  const int nk2 = bar_dim(g_, module_, degree_ + 1);
  int step = std::max(1, nk2 / 16);
  for (int j = 0; j < nk2; j += step) {
    SparseVec col = bar_boundary_column(g_, module_, degree_ + 1, j);
    if (col.empty()) continue;
    DenseVec cls = class_of_cycle(psi_chain(col));
    for (i64 v : cls)
      if (v != 0) throw std::logic_error("induced_psi: boundary not sent to a boundary");
  }
  return p;
}

AbelianGroupPresentation exterior_square(const AbelianGroupPresentation& a) {
  if (a.free_rank != 0) throw std::invalid_argument("exterior_square: finite groups only");
  std::vector<i64> orders;
  for (size_t i = 0; i < a.torsion.size(); ++i)
    for (size_t j = i + 1; j < a.torsion.size(); ++j)
      orders.push_back(gcd_i64(a.torsion[i], a.torsion[j]));
  return invariant_factors_from_orders(std::move(orders));
}

std::vector<SparseVec> abelian_span_cycles(const FiniteGroup& g, const CoeffModule& m) {
  std::vector<SparseVec> out;
  Indexer ix{g.n, m.dim(), 2};
  const int d = m.dim();
  auto commutes = [&](int a, int b) { return g.op(a, b) == g.op(b, a); };

  for (int b = 0; b < d; ++b) {
    int x = m.basis.empty() ? -1 : m.basis[b];
    // commuting-pair cycles z(a,c) (x) basis_b with a, c, x pairwise commuting
    for (int a = 1; a < g.n; ++a) {
      if (x >= 0 && !commutes(a, x)) continue;
      for (int c = a + 1; c < g.n; ++c) {
        if (!commutes(a, c)) continue;
        if (x >= 0 && !commutes(c, x)) continue;
        SparseVec z;
        int i1 = ix.index({a, c}, b), i2 = ix.index({c, a}, b);
        z.emplace_back(std::min(i1, i2), i1 < i2 ? 1 : -1);
        z.emplace_back(std::max(i1, i2), i1 < i2 ? -1 : 1);
        out.push_back(std::move(z));
      }
    }
    // cyclic torsion witnesses at finite precision
    if (m.modulus > 0) {
      for (int a = 1; a < g.n; ++a) {
        if (x >= 0 && !commutes(a, x)) continue;
        int o = g.order(a);
        i64 v = 1;
        i64 oo = o;
        while (oo % m.p == 0) {
          oo /= m.p;
          v *= m.p;
        }
        i64 mu = m.modulus / gcd_i64(v, m.modulus);  // p^(max(0, N - v_p(ord a)))
        std::map<int, i64> acc;
        int ai = a;
        for (int i = 1; i < o; ++i) {
          acc[ix.index({ai, a}, b)] += mu;
          ai = g.op(ai, a);
        }
        SparseVec t = finish(acc, m.modulus);
        if (!t.empty()) out.push_back(std::move(t));
      }
    }
  }
  return out;
}

H2AbResult h2_ab(const HomologyPresentation& h2) {
  if (h2.degree() != 2) throw std::invalid_argument("h2_ab: needs a degree-2 presentation");
  H2AbResult res;
  res.h2 = h2.group();
  for (auto& z : abelian_span_cycles(h2.ambient_group(), h2.module()))
    res.span_coords.push_back(h2.class_of_cycle(z));
  res.quotient = quotient_by(h2.factors(), res.span_coords);
  res.h2bar.free_rank = 0;
  res.h2bar.torsion = res.quotient.factors;

  // structure of the span subgroup inside (+) Z/d_i
  const auto& d = h2.factors();
  if (d.empty() || res.span_coords.empty()) {
    res.h2ab = AbelianGroupPresentation{};
    return res;
  }
  i64 m = 1;
  for (i64 x : d) m = std::lcm(m, x);
  std::vector<SparseVec> cols(res.span_coords.size());
  for (size_t j = 0; j < res.span_coords.size(); ++j)
    for (size_t i = 0; i < d.size(); ++i) {
      i64 v = mod_floor(res.span_coords[j][i] * (m / d[i]), m);
      if (v != 0) cols[j].emplace_back((int)i, v);
    }
  // span subgroup = Z^cols / kernel of the coordinate map into (+) Z/d_i
  TriBasis ker = kernel_lattice((int)d.size(), (int)cols.size(), cols, m);
  Presentation sub = present(ker);
  res.h2ab = sub.group();
  return res;
}

ShapiroH1 shapiro_h1(const FiniteGroup& g, i64 p, int N) {
  ShapiroH1 out;
  CoeffModule m = CoeffModule::conjugation_mod(g, p, N);
  HomologyPresentation direct = homology(g, 1, m);
  out.direct = direct.group();

  ConjugacyData cd = conjugacy_classes(g);
  std::vector<int> prc = p_regular_classes(g, cd, p);
  std::vector<DenseVec> image_cols;
  std::vector<i64> oracle_orders;
  for (int c : prc) {
    int rep = cd.reps[c];
    Subgroup z = centralizer(g, rep);
    FiniteGroup zg = subgroup_as_group(g, z, "centralizer");
    Abelianization ab = abelianization(zg);
    AbelianGroupPresentation comp = tensor_with_cyclic(ab.group, m.modulus);
    out.component_class.push_back(c);
    out.components.push_back(comp);
    for (i64 f : comp.torsion) oracle_orders.push_back(f);
    // identification: the j-th generator of Z_i^ab lifts to a 1-chain with
    // coefficient line through the class representative
    auto bit = std::lower_bound(m.basis.begin(), m.basis.end(), rep);
    int bidx = (int)(bit - m.basis.begin());
    Indexer ix{g.n, m.dim(), 1};
    for (size_t j = 0; j < ab.group.torsion.size(); ++j) {
      if (gcd_i64(ab.group.torsion[j], m.modulus) == 1) continue;  // dies in the tensor
      std::map<int, i64> acc;
      for (auto& [local, coeff] : ab.gens[j]) {
        if (local == 0) continue;
        int elem = z.members[local];
        acc[ix.index({elem}, bidx)] += coeff;
      }
      SparseVec chain;
      for (auto& [r, v] : acc)
        if (v != 0) chain.emplace_back(r, v);
      image_cols.push_back(direct.class_of_cycle(chain));
    }
  }
  out.oracle = invariant_factors_from_orders(oracle_orders);

  bool onto = coker_factors(direct.group().torsion, image_cols).empty();
  out.identification_iso = onto && out.oracle == out.direct;
  return out;
}

}  // namespace sk1lab
