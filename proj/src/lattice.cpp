#include "sk1lab/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace sk1lab {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("integer overflow in lattice arithmetic"); }

i64 checked_mul(i64 a, i64 b) {
  __int128 p = (__int128)a * b;
  if (p > INT64_MAX || p < INT64_MIN) overflow();
  return (i64)p;
}

i64 checked_add(i64 a, i64 b) {
  if ((b > 0 && a > INT64_MAX - b) || (b < 0 && a < INT64_MIN - b)) overflow();
  return a + b;
}

// out = v + k*w, entries reduced mod m when m > 0.
SparseVec axpy(const SparseVec& v, i64 k, const SparseVec& w, i64 m) {
  SparseVec out;
  out.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    int rv = i < v.size() ? v[i].first : INT32_MAX;
    int rw = j < w.size() ? w[j].first : INT32_MAX;
    int r;
    i64 val;
    if (rv < rw) {
      r = rv;
      val = v[i++].second;
    } else if (rw < rv) {
      r = rw;
      val = checked_mul(k, w[j++].second);
    } else {
      r = rv;
      val = checked_add(v[i++].second, checked_mul(k, w[j++].second));
    }
    if (m > 0) val = mod_floor(val, m);
    if (val != 0) out.emplace_back(r, val);
  }
  return out;
}

SparseVec scale(const SparseVec& v, i64 k, i64 m) {
  SparseVec out;
  out.reserve(v.size());
  for (auto& [r, val] : v) {
    i64 x = checked_mul(val, k);
    if (m > 0) x = mod_floor(x, m);
    if (x != 0) out.emplace_back(r, x);
  }
  return out;
}

SparseVec reduce_mod(SparseVec v, i64 m) {
  if (m <= 0) return v;
  SparseVec out;
  out.reserve(v.size());
  for (auto& [r, val] : v) {
    i64 x = mod_floor(val, m);
    if (x != 0) out.emplace_back(r, x);
  }
  return out;
}

// x with x*v == gcd(v, m) (mod m) and gcd(x, m) == 1, so that scaling a
// column by x is invertible mod m.
i64 unit_solution(i64 v, i64 m) {
  i64 x, y;
  i64 g = ext_gcd(mod_floor(v, m), m, x, y);
  i64 step = m / g;
  x = mod_floor(x, m);
  for (int t = 0; t < 64; ++t) {
    if (std::gcd(x, m) == 1) return x;
    x = mod_floor(x + step, m);
  }
  throw std::logic_error("unit_solution: no unit representative found");
}

}  // namespace

i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    if (a < 0) {
      x = -1;
      y = 0;
      return -a;
    }
    x = 1;
    y = 0;
    return a;
  }
  i64 x1, y1;
  i64 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 inv_mod(i64 a, i64 m) {
  i64 x, y;
  i64 g = ext_gcd(mod_floor(a, m), m, x, y);
  if (g != 1) throw std::domain_error("inv_mod: not a unit");
  return mod_floor(x, m);
}

SparseVec to_sparse(const DenseVec& v) {
  SparseVec s;
  for (int i = 0; i < (int)v.size(); ++i)
    if (v[i] != 0) s.emplace_back(i, v[i]);
  return s;
}

DenseVec to_dense(const SparseVec& v, int n) {
  DenseVec d(n, 0);
  for (auto& [r, val] : v) d[r] = val;
  return d;
}

// ---------------------------------------------------------------------------
// TriBasis
//
// Hot paths use a dense scratch plus a lazy min-heap over touched rows so
// reductions run in O(path length * pivot column size) without allocation.

struct TriBasis::Scratch {
  std::vector<i64> val;
  std::vector<int> heap;
  std::vector<int> touched;
  std::vector<SparseVec> pending;  // deferred wrap-around residuals
  i64 m;

  explicit Scratch(int rows, i64 mod) : val(rows, 0), m(mod) {}
  void add(int r, i64 v) {
    if (val[r] == 0 && v != 0) {
      heap.push_back(r);
      std::push_heap(heap.begin(), heap.end(), std::greater<int>());
      touched.push_back(r);
    }
    i64 nv = val[r] + v;
    if (m > 0) nv = mod_floor(nv, m);
    val[r] = nv;
  }
  void scatter(const SparseVec& c) {
    for (auto& [r, v] : c) add(r, v);
  }
  // next row with a nonzero entry, in increasing order
  int pop() {
    while (!heap.empty()) {
      int r = heap.front();
      std::pop_heap(heap.begin(), heap.end(), std::greater<int>());
      heap.pop_back();
      if (val[r] != 0 && (heap.empty() || heap.front() != r)) return r;
    }
    return -1;
  }
  SparseVec gather_nonzero() {
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    SparseVec out;
    for (int r : touched)
      if (val[r] != 0) out.emplace_back(r, val[r]);
    return out;
  }
};

void TriBasis::absorb_one(Scratch& s) {
  for (int r; (r = s.pop()) >= 0;) {
    i64 v = s.val[r];
    auto it = cols_.find(r);
    if (it == cols_.end()) {
      SparseVec c = s.gather_nonzero();
      for (auto& [row, vv] : c) s.val[row] = 0;
      s.heap.clear();
      if (m_ > 0) {
        i64 g = gcd_i64(v, m_);
        if (g != v) {
          c = scale(c, unit_solution(v, m_), m_);
          if (c.empty() || c.front().first != r) c.insert(c.begin(), {r, g});
          c.front().second = g;
        }
        SparseVec resid = scale(c, m_ / g, m_);
        cols_.emplace(r, std::move(c));
        s.scatter(resid);  // wrap-around residual must stay reducible
        continue;
      }
      if (v < 0) c = scale(c, -1, 0);
      cols_.emplace(r, std::move(c));
      return;
    }
    SparseVec& b = it->second;
    i64 pv = b.front().second;
    if (v % pv == 0) {
      i64 q = v / pv;
      for (auto& [row, vv] : b) s.add(row, checked_mul(-q, vv));
      continue;
    }
    // rare: pivot refinement via a det-1 two-column combine
    SparseVec c = s.gather_nonzero();
    for (auto& [row, vv] : c) s.val[row] = 0;
    s.heap.clear();
    i64 x, y;
    i64 g = ext_gcd(pv, v, x, y);
    SparseVec nb = axpy(scale(b, x, m_), y, c, m_);
    if (nb.empty() || nb.front().first != r) nb.insert(nb.begin(), {r, g});
    nb.front().second = g;
    SparseVec nc = axpy(scale(c, pv / g, m_), -(v / g), b, m_);
    it->second = std::move(nb);
    if (m_ > 0) s.pending.push_back(scale(it->second, m_ / g, m_));
    s.scatter(nc);
  }
}

void TriBasis::absorb(SparseVec first) {
  Scratch s(rows_, m_);
  s.scatter(reduce_mod(std::move(first), m_));
  absorb_one(s);
  while (!s.pending.empty()) {
    SparseVec next = std::move(s.pending.back());
    s.pending.pop_back();
    s.scatter(std::move(next));
    absorb_one(s);
  }
}

SparseVec TriBasis::remainder(SparseVec c) const {
  Scratch s(rows_, m_);
  s.scatter(reduce_mod(std::move(c), m_));
  SparseVec stuck;
  for (int r; (r = s.pop()) >= 0;) {
    i64 v = s.val[r];
    auto it = cols_.find(r);
    if (it == cols_.end() || v % it->second.front().second != 0) {
      stuck.emplace_back(r, v);
      s.val[r] = 0;
      continue;
    }
    i64 q = v / it->second.front().second;
    for (auto& [row, vv] : it->second) s.add(row, checked_mul(-q, vv));
  }
  return stuck;
}

std::optional<SparseVec> TriBasis::solve(SparseVec c) const {
  Scratch s(rows_, m_);
  s.scatter(reduce_mod(std::move(c), m_));
  SparseVec coords;
  for (int r; (r = s.pop()) >= 0;) {
    i64 v = s.val[r];
    auto it = cols_.find(r);
    if (it == cols_.end()) return std::nullopt;
    i64 pv = it->second.front().second;
    if (v % pv != 0) return std::nullopt;
    i64 q = v / pv;
    coords.emplace_back(r, q);
    for (auto& [row, vv] : it->second) s.add(row, checked_mul(-q, vv));
  }
  return coords;
}

i64 TriBasis::pivot_value(int row) const {
  auto it = cols_.find(row);
  return it == cols_.end() ? 0 : it->second.front().second;
}

// ---------------------------------------------------------------------------
// small_snf: dense SNF of [a | m I] with tracked left transform.

SmallSnf small_snf(std::vector<DenseVec> a, int n, i64 m) {
  if (m <= 0) throw std::invalid_argument("small_snf: floor modulus required");
  SmallSnf res;
  res.u.assign(n, DenseVec(n, 0));
  res.uinv.assign(n, DenseVec(n, 0));
  res.diag.assign(n, m);
  for (int i = 0; i < n; ++i) res.u[i][i] = res.uinv[i][i] = 1;
  if (n == 0) return res;

  // The floor m*Z^n is handled algebraically: entries live mod m and each
  // pivot is normalized to gcd(pivot, m) by a unit column scaling.
  const int cols2 = n;
  std::vector<DenseVec> w(n, DenseVec(cols2, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = mod_floor(a[i][j], m);

  auto row_op = [&](int i, int k, i64 t) {  // row_i += t*row_k
    for (int j = 0; j < cols2; ++j) w[i][j] = mod_floor(checked_add(w[i][j], checked_mul(t, w[k][j])), m);
    for (int j = 0; j < n; ++j) res.u[i][j] = mod_floor(checked_add(res.u[i][j], checked_mul(t, res.u[k][j])), m);
    for (int r = 0; r < n; ++r) res.uinv[r][k] = mod_floor(checked_add(res.uinv[r][k], -checked_mul(t, res.uinv[r][i])), m);
  };
  auto row_swap = [&](int i, int k) {
    if (i == k) return;
    std::swap(w[i], w[k]);
    std::swap(res.u[i], res.u[k]);
    for (int r = 0; r < n; ++r) std::swap(res.uinv[r][i], res.uinv[r][k]);
  };
  // rows (i,k) <- (x*row_i + y*row_k, -(b/g)*row_i + (a/g)*row_k), det 1
  auto row_combine = [&](int i, int k, i64 x, i64 y, i64 ag, i64 bg) {
    for (int j = 0; j < cols2; ++j) {
      i64 ri = w[i][j], rk = w[k][j];
      w[i][j] = mod_floor(checked_add(checked_mul(x, ri), checked_mul(y, rk)), m);
      w[k][j] = mod_floor(checked_add(checked_mul(-bg, ri), checked_mul(ag, rk)), m);
    }
    for (int j = 0; j < n; ++j) {
      i64 ri = res.u[i][j], rk = res.u[k][j];
      res.u[i][j] = mod_floor(checked_add(checked_mul(x, ri), checked_mul(y, rk)), m);
      res.u[k][j] = mod_floor(checked_add(checked_mul(-bg, ri), checked_mul(ag, rk)), m);
    }
    for (int r = 0; r < n; ++r) {
      // inverse transpose action on uinv columns: inv([[x,y],[-bg,ag]]) = [[ag,-y],[bg,x]]
      i64 ci = res.uinv[r][i], ck = res.uinv[r][k];
      res.uinv[r][i] = mod_floor(checked_add(checked_mul(ag, ci), checked_mul(bg, ck)), m);
      res.uinv[r][k] = mod_floor(checked_add(checked_mul(-y, ci), checked_mul(x, ck)), m);
    }
  };
  auto col_op = [&](int j, int k, i64 t) {
    for (int i = 0; i < n; ++i) w[i][j] = mod_floor(checked_add(w[i][j], checked_mul(t, w[i][k])), m);
  };
  auto col_swap = [&](int j, int k) {
    if (j == k) return;
    for (int i = 0; i < n; ++i) std::swap(w[i][j], w[i][k]);
  };
  auto col_combine = [&](int j, int k, i64 x, i64 y, i64 ag, i64 bg) {
    for (int i = 0; i < n; ++i) {
      i64 cj = w[i][j], ck = w[i][k];
      w[i][j] = mod_floor(checked_add(checked_mul(x, cj), checked_mul(y, ck)), m);
      w[i][k] = mod_floor(checked_add(checked_mul(-bg, cj), checked_mul(ag, ck)), m);
    }
  };

  auto clear_at = [&](int t) {
    for (int guard = 0;; ++guard) {
      if (guard > 4096) throw std::logic_error("small_snf: no convergence");
      // normalize pivot to gcd with m (unit column scaling)
      i64 piv = w[t][t];
      i64 g = gcd_i64(piv, m);
      if (g != piv) {
        i64 x = unit_solution(piv, m);
        for (int i = 0; i < n; ++i) w[i][t] = mod_floor(checked_mul(w[i][t], x), m);
        w[t][t] = g;
      }
      bool dirty = false;
      for (int i = t + 1; i < n; ++i) {
        i64 v = w[i][t];
        if (v == 0) continue;
        i64 piv2 = w[t][t];
        if (v % piv2 == 0) {
          row_op(i, t, -(v / piv2));
        } else {
          i64 x, y;
          i64 gg = ext_gcd(piv2, v, x, y);
          row_combine(t, i, x, y, piv2 / gg, v / gg);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols2; ++j) {
        i64 v = w[t][j];
        if (v == 0) continue;
        i64 piv2 = w[t][t];
        if (v % piv2 == 0) {
          col_op(j, t, -(v / piv2));
        } else {
          i64 x, y;
          i64 gg = ext_gcd(piv2, v, x, y);
          col_combine(t, j, x, y, piv2 / gg, v / gg);
          dirty = true;
        }
      }
      if (!dirty) {
        // column ops may have reintroduced entries below the pivot
        bool below = false;
        for (int i = t + 1; i < n; ++i)
          if (w[i][t] != 0) below = true;
        if (!below) return;
      }
    }
  };

  for (int t = 0; t < n; ++t) {
    int pi = -1, pj = -1;
    i64 best = 0;
    for (int i = t; i < n; ++i)
      for (int j = t; j < cols2; ++j)
        if (w[i][j] != 0) {
          i64 g = gcd_i64(w[i][j], m);
          if (pi < 0 || g < best) {
            pi = i;
            pj = j;
            best = g;
          }
        }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    clear_at(t);
  }

  for (int i = 0; i < n; ++i) {
    i64 d = w[i][i];
    res.diag[i] = d == 0 ? m : gcd_i64(d, m);
  }

  // divisibility chain via local 2x2 fixes
  for (bool changed = true; changed;) {
    changed = false;
    for (int t = 0; t + 1 < n; ++t) {
      i64 a2 = res.diag[t], b2 = res.diag[t + 1];
      if (b2 % a2 == 0) continue;
      changed = true;
      i64 x, y;
      i64 g = ext_gcd(a2, b2, x, y);
      // tracked row op r_t += r_{t+1} on the (conceptually diagonal) pair,
      // untracked column ops, then a tracked row op to clear below:
      //   diag(a,b) -> [[a,b],[0,b]] -> [[g,0],[y*b,l]] -> diag(g,l)
      for (int j = 0; j < n; ++j) res.u[t][j] = mod_floor(checked_add(res.u[t][j], res.u[t + 1][j]), m);
      for (int r = 0; r < n; ++r) res.uinv[r][t + 1] = mod_floor(checked_add(res.uinv[r][t + 1], -res.uinv[r][t]), m);
      i64 k = checked_mul(y, b2) / g;
      for (int j = 0; j < n; ++j) res.u[t + 1][j] = mod_floor(checked_add(res.u[t + 1][j], -checked_mul(k, res.u[t][j])), m);
      for (int r = 0; r < n; ++r) res.uinv[r][t] = mod_floor(checked_add(res.uinv[r][t], checked_mul(k, res.uinv[r][t + 1])), m);
      res.diag[t] = g;
      i64 lc = a2 / g * b2;
      res.diag[t + 1] = gcd_i64(lc, m);
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// present

Presentation present(const TriBasis& rels) {
  if (rels.modulus() <= 0) throw std::invalid_argument("present: requires a floor modulus");
  Presentation p;
  p.n_ = rels.rows();
  p.m_ = rels.modulus();
  const i64 m = p.m_;

  std::map<int, SparseVec> cols;
  for (auto& [r, col] : rels.columns()) cols[r] = col;
  for (int r = 0; r < p.n_; ++r)
    if (!cols.count(r)) cols[r] = {{r, m == 1 ? 1 : m}};

  if (m == 1) {
    // everything dies
    for (int r = 0; r < p.n_; ++r) p.subst_.emplace_back(r, SparseVec{});
    return p;
  }

  std::map<int, std::set<int>> row_use;  // row -> pivot rows of columns touching it
  for (auto& [pr, col] : cols)
    for (auto& [r, v] : col)
      if (r != pr) row_use[r].insert(pr);

  std::vector<int> qrows;
  for (auto it = cols.begin(); it != cols.end(); ++it) {
    int r = it->first;
    SparseVec& col = it->second;
    if (col.front().second != 1) {
      qrows.push_back(r);
      continue;
    }
    SparseVec tail(col.begin() + 1, col.end());
    if (auto ru = row_use.find(r); ru != row_use.end()) {
      std::vector<int> users(ru->second.begin(), ru->second.end());
      for (int pc : users) {
        SparseVec& other = cols[pc];
        i64 k = 0;
        for (auto& [rr, vv] : other)
          if (rr == r) {
            k = vv;
            break;
          }
        if (k == 0) continue;
        SparseVec updated = axpy(other, -k, col, m);
        for (auto& [rr, vv] : other)
          if (rr != pc && rr != r) row_use[rr].erase(pc);
        for (auto& [rr, vv] : updated)
          if (rr != pc) row_use[rr].insert(pc);
        other = std::move(updated);
      }
      row_use.erase(r);
    }
    for (auto& [rr, vv] : tail) row_use[rr].erase(r);
    p.subst_.emplace_back(r, std::move(tail));
    col.clear();
  }

  const int q = (int)qrows.size();
  std::map<int, int> qpos;
  for (int i = 0; i < q; ++i) qpos[qrows[i]] = i;
  std::vector<DenseVec> a(q, DenseVec(q, 0));
  for (int j = 0; j < q; ++j) {
    for (auto& [r, v] : cols[qrows[j]]) {
      auto it = qpos.find(r);
      if (it == qpos.end()) throw std::logic_error("present: stray entry outside surviving rows");
      a[it->second][j] = v;
    }
  }
  SmallSnf snf = q > 0 ? small_snf(std::move(a), q, m) : SmallSnf{};
  p.qrows_ = std::move(qrows);
  p.uq_ = std::move(snf.u);
  p.qdiag_ = std::move(snf.diag);
  for (int i = 0; i < q; ++i)
    if (p.qdiag_[i] > 1) p.keep_.push_back(i);
  std::stable_sort(p.keep_.begin(), p.keep_.end(),
                   [&](int x, int y) { return p.qdiag_[x] < p.qdiag_[y]; });

  p.group_.free_rank = 0;
  for (int i : p.keep_) p.group_.torsion.push_back(p.qdiag_[i]);

  for (int i : p.keep_) {
    SparseVec g;
    for (int r = 0; r < q; ++r) {
      i64 v = mod_floor(snf.uinv[r][i], m);
      if (v != 0) g.emplace_back(p.qrows_[r], v);
    }
    std::sort(g.begin(), g.end());
    p.gens_.push_back(std::move(g));
  }
  return p;
}

DenseVec Presentation::coords(const SparseVec& v) const {
  std::map<int, i64> w;
  for (auto& [r, val] : v) {
    i64 x = mod_floor(val, m_);
    if (x != 0) w[r] = x;
  }
  for (auto& [r, tail] : subst_) {
    auto it = w.find(r);
    if (it == w.end() || it->second == 0) continue;
    i64 k = it->second;
    w.erase(it);
    for (auto& [s, val] : tail) {
      i64 nv = mod_floor(w.count(s) ? w[s] - checked_mul(k, val) : -checked_mul(k, val), m_);
      if (nv == 0)
        w.erase(s);
      else
        w[s] = nv;
    }
  }
  std::map<int, int> qpos;
  for (int i = 0; i < (int)qrows_.size(); ++i) qpos[qrows_[i]] = i;
  DenseVec on_q(qrows_.size(), 0);
  for (auto& [r, val] : w) {
    if (val == 0) continue;
    auto it = qpos.find(r);
    if (it == qpos.end()) throw std::logic_error("coords: vector not reduced by substitution trace");
    on_q[it->second] = mod_floor(val, m_);
  }
  DenseVec out;
  out.reserve(keep_.size());
  for (int i : keep_) {
    __int128 acc = 0;
    for (int j = 0; j < (int)on_q.size(); ++j) acc += (__int128)uq_[i][j] * on_q[j];
    i64 d = qdiag_[i];
    out.push_back(mod_floor((i64)(acc % d), d));
  }
  return out;
}

// ---------------------------------------------------------------------------
// kernel_lattice

TriBasis kernel_lattice(int nrows, int ncols, const std::vector<SparseVec>& cols, i64 m) {
  // Column echelon of [A | m I] tracking combinations. With m > 0 all
  // arithmetic stays in [0, m): reductions mod m on the A side come for free
  // from the m I block, and the tracked combination coordinates may be
  // reduced mod m because m Z^ncols lies in the kernel lattice.
  struct Col {
    SparseVec a;
    SparseVec v;  // combination in terms of the original ncols columns
  };
  std::vector<Col> work;
  work.reserve(ncols + (m > 0 ? nrows : 0));
  for (int j = 0; j < ncols; ++j) {
    work.push_back({reduce_mod(cols[j], m), {{j, 1}}});
  }
  if (m > 0)
    for (int r = 0; r < nrows; ++r) work.push_back({{{r, m}}, {}});

  std::vector<char> is_pivot(work.size(), 0);
  std::vector<std::set<int>> at_row(nrows);
  for (int j = 0; j < (int)work.size(); ++j)
    for (auto& [r, v] : work[j].a) at_row[r].insert(j);

  auto entry = [&](int j, int r) -> i64 {
    for (auto& [rr, vv] : work[j].a)
      if (rr == r) return vv;
    return 0;
  };
  auto add_mult = [&](int j, int k, i64 t) {  // col_j += t*col_k
    SparseVec na = axpy(work[j].a, t, work[k].a, m);
    SparseVec nv = axpy(work[j].v, t, work[k].v, m);
    for (auto& [r, v] : work[j].a) at_row[r].erase(j);
    work[j].a = std::move(na);
    work[j].v = std::move(nv);
    for (auto& [r, v] : work[j].a) at_row[r].insert(j);
  };

  for (int r = 0; r < nrows; ++r) {
    while (true) {
      int best = -1;
      i64 bestv = 0;
      auto size_of = [&](i64 v) { return m > 0 ? gcd_i64(v, m) : std::abs(v); };
      for (int j : at_row[r]) {
        if (is_pivot[j]) continue;
        i64 v = entry(j, r);
        if (v != 0 && (best < 0 || size_of(v) < size_of(bestv))) {
          best = j;
          bestv = v;
        }
      }
      if (best < 0) break;
      if (m > 0 && gcd_i64(bestv, m) != bestv) {
        // normalize the pivot entry to a divisor of m by a unit scaling
        i64 u = unit_solution(bestv, m);
        work[best].a = scale(work[best].a, u, m);
        work[best].v = scale(work[best].v, u, m);
        bestv = entry(best, r);
      }
      bool clean = true;
      std::vector<int> others(at_row[r].begin(), at_row[r].end());
      for (int j : others) {
        if (j == best || is_pivot[j]) continue;
        i64 v = entry(j, r);
        if (v == 0) continue;
        add_mult(j, best, -(v / bestv));
        if (v % bestv != 0) clean = false;
      }
      if (clean) {
        is_pivot[best] = 1;
        break;
      }
    }
  }

  TriBasis out(ncols, m);
  for (int j = 0; j < (int)work.size(); ++j) {
    if (!work[j].a.empty()) continue;
    if (!work[j].v.empty()) out.absorb(work[j].v);
  }
  if (m > 0)
    for (int j = 0; j < ncols; ++j) out.absorb({{j, m}});
  return out;
}

// ---------------------------------------------------------------------------

SubQuotient quotient_by(const std::vector<i64>& d, const std::vector<DenseVec>& span_cols) {
  SubQuotient out;
  int n = (int)d.size();
  if (n == 0) return out;
  i64 m = 1;
  for (i64 x : d) m = std::lcm(m, x);
  TriBasis t(n, m);
  for (int i = 0; i < n; ++i) t.absorb({{i, d[i]}});
  for (auto& col : span_cols) {
    SparseVec c;
    for (int i = 0; i < n; ++i)
      if (col[i] != 0) c.emplace_back(i, col[i]);
    t.absorb(std::move(c));
  }
  Presentation p = present(t);
  out.factors = p.factors();
  for (auto& g : p.generators()) out.gen_lift.push_back(to_dense(g, n));
  out.proj.assign(out.factors.size(), DenseVec(n, 0));
  for (int i = 0; i < n; ++i) {
    DenseVec c = p.coords({{i, 1}});
    for (int k = 0; k < (int)c.size(); ++k) out.proj[k][i] = c[k];
  }
  return out;
}

DenseVec SubQuotient::apply(const DenseVec& old_coords) const {
  DenseVec out(factors.size(), 0);
  for (int k = 0; k < (int)factors.size(); ++k) {
    __int128 acc = 0;
    for (int i = 0; i < (int)old_coords.size() && i < (int)proj[k].size(); ++i)
      acc += (__int128)proj[k][i] * old_coords[i];
    out[k] = mod_floor((i64)(acc % factors[k]), factors[k]);
  }
  return out;
}

std::vector<i64> coker_factors(const std::vector<i64>& d, const std::vector<DenseVec>& cols) {
  return quotient_by(d, cols).factors;
}

}  // namespace sk1lab
