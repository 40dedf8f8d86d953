#include "sk1lab/rings.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sk1lab {

namespace {

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) {
    if (r > ((i64)1 << 40)) throw std::overflow_error("ring modulus too large");
    r *= b;
  }
  return r;
}

// --- F_p polynomial helpers for choosing the Witt minimal polynomial -------

using Poly = std::vector<i64>;  // little-endian coefficients

Poly poly_trim(Poly a, i64 p) {
  for (auto& v : a) v = mod_floor(v, p);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mod(Poly a, const Poly& m, i64 p) {
  a = poly_trim(std::move(a), p);
  int dm = (int)m.size() - 1;
  while ((int)a.size() > dm) {
    i64 lead = a.back();
    int sh = (int)a.size() - 1 - dm;
    if (lead != 0)
      for (int i = 0; i <= dm; ++i) a[sh + i] = mod_floor(a[sh + i] - lead * m[i], p);
    a.pop_back();
    a = poly_trim(std::move(a), p);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, i64 p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = mod_floor(c[i + j] + a[i] * b[j], p);
  return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, i64 e, const Poly& m, i64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
  a = poly_trim(std::move(a), p);
  b = poly_trim(std::move(b), p);
  while (!b.empty()) {
    Poly m = b;
    i64 inv = inv_mod(m.back(), p);
    for (auto& v : m) v = mod_floor(v * inv, p);
    a = poly_mod(std::move(a), m, p);
    std::swap(a, b);
  }
  return a;
}

Poly poly_sub_x(Poly a, i64 p) {  // a - x
  a.resize(std::max<size_t>(a.size(), 2), 0);
  a[1] = mod_floor(a[1] - 1, p);
  return poly_trim(std::move(a), p);
}

bool is_irreducible(const Poly& m, i64 p) {
  int f = (int)m.size() - 1;
  Poly x{0, 1};
  Poly xq = poly_powmod(x, ipow(p, f), m, p);
  if (!poly_sub_x(xq, p).empty()) return false;  // x^(p^f) != x mod m
  for (int q = 2; q <= f; ++q) {
    if (f % q != 0) continue;
    bool isprime = true;
    for (int d = 2; d * d <= q; ++d)
      if (q % d == 0) isprime = false;
    if (!isprime) continue;
    Poly xr = poly_powmod(x, ipow(p, f / q), m, p);
    Poly g = poly_gcd(m, poly_sub_x(xr, p), p);
    if ((int)g.size() > 1) return false;
  }
  return true;
}

// deterministic minimal irreducible monic polynomial of degree f over F_p
std::vector<i64> choose_min_poly(i64 p, int f) {
  if (f == 1) return {0, 1};  // x itself; the Witt base collapses to Zp
  i64 total = ipow(p, f);
  for (i64 code = 0; code < total; ++code) {
    Poly m(f + 1, 0);
    m[f] = 1;
    i64 c = code;
    for (int i = 0; i < f; ++i) {
      m[i] = c % p;
      c /= p;
    }
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

// unit-pivot linear solve A z = rhs over Z/mod (A invertible mod p)
DenseVec solve_unit_system(std::vector<DenseVec> a, DenseVec rhs, i64 p, i64 mod) {
  int n = (int)rhs.size();
  std::vector<int> piv(n, -1);
  for (int col = 0; col < n; ++col) {
    int pr = -1;
    for (int r = 0; r < n && pr < 0; ++r) {
      bool used = false;
      for (int cc = 0; cc < col; ++cc) used |= (piv[cc] == r);
      if (!used && a[r][col] % p != 0) pr = r;
    }
    if (pr < 0) throw std::domain_error("linear system is singular mod p");
    piv[col] = pr;
    i64 inv = inv_mod(a[pr][col], mod);
    for (int cc = 0; cc < n; ++cc) a[pr][cc] = mod_floor(a[pr][cc] * inv % mod, mod);
    rhs[pr] = mod_floor(rhs[pr] * inv % mod, mod);
    for (int r = 0; r < n; ++r) {
      if (r == pr || a[r][col] == 0) continue;
      i64 k = a[r][col];
      for (int cc = 0; cc < n; ++cc) a[r][cc] = mod_floor(a[r][cc] - k * a[pr][cc] % mod, mod);
      rhs[r] = mod_floor(rhs[r] - k * rhs[pr] % mod, mod);
    }
  }
  DenseVec z(n, 0);
  for (int cc = 0; cc < n; ++cc) z[cc] = rhs[piv[cc]];
  return z;
}

}  // namespace

std::string to_string(CoinvariantComparison c) {
  switch (c) {
    case CoinvariantComparison::iso: return "isomorphism";
    case CoinvariantComparison::surjective_only: return "surjective";
    case CoinvariantComparison::injective_torsion_free_cokernel:
      return "injective-torsion-free-cokernel";
    default: return "none";
  }
}

std::string RingDescriptor::str() const {
  std::string base;
  switch (kind) {
    case RingKind::Zp: base = "Zp"; break;
    case RingKind::Witt: base = "Witt"; break;
    case RingKind::PowerSeries: base = "PowerSeries"; break;
    case RingKind::Laurent: base = "Laurent"; break;
    case RingKind::InverseVar: base = "InverseVar"; break;
  }
  std::string s = base + "(p=" + std::to_string(p) + ",N=" + std::to_string(N);
  if (kind != RingKind::Zp) s += ",f=" + std::to_string(f);
  if (kind == RingKind::PowerSeries || kind == RingKind::Laurent || kind == RingKind::InverseVar)
    s += ",D=" + std::to_string(D);
  return s + ")";
}

RingModel::RingModel(RingDescriptor d) : d_(d) {
  if (d_.p < 2 || d_.N < 1 || d_.f < 1) throw std::invalid_argument("ring descriptor invalid");
  if (d_.kind == RingKind::Zp) d_.f = 1;
  mod_ = ipow(d_.p, d_.N);
  switch (d_.kind) {
    case RingKind::Zp:
    case RingKind::Witt: lo_ = hi_ = 0; break;
    case RingKind::PowerSeries: lo_ = 0; hi_ = d_.D; break;
    case RingKind::Laurent: lo_ = -d_.D; hi_ = d_.D; break;
    case RingKind::InverseVar: lo_ = -d_.D; hi_ = 0; break;
  }
  if ((d_.kind == RingKind::PowerSeries || d_.kind == RingKind::Laurent ||
       d_.kind == RingKind::InverseVar) &&
      d_.D < 1)
    throw std::invalid_argument("series ring needs a positive window");
  dim_ = (hi_ - lo_ + 1) * d_.f;

  Poly m0 = choose_min_poly(d_.p, d_.f);
  minpoly_.assign(m0.begin(), m0.end());
  minpoly_.resize(d_.f + 1, 0);
  if (d_.f == 1) {
    // model x = 0: minpoly x, so the basis is {1}
    minpoly_ = {0, 1};
  }
  const int f = d_.f;

  xpow_.assign(std::max(1, 2 * f - 1), DenseVec(f, 0));
  DenseVec cur(f, 0);
  cur[0] = 1;
  xpow_[0] = cur;
  for (int k = 1; k <= 2 * f - 2; ++k) {
    DenseVec nx(f, 0);
    i64 top = cur[f - 1];
    for (int i = f - 1; i >= 1; --i) nx[i] = cur[i - 1];
    nx[0] = 0;
    if (top != 0)
      for (int i = 0; i < f; ++i) nx[i] = mod_floor(nx[i] - top * minpoly_[i], mod_);
    cur = nx;
    xpow_[k] = cur;
  }

  // Hensel: the root of m congruent to x^p mod p gives the Frobenius lift
  DenseVec y(f, 0);
  if (f == 1) {
    y[0] = 0;  // unused
  } else {
    Poly xp = poly_powmod({0, 1}, d_.p, m0, d_.p);
    for (size_t i = 0; i < xp.size(); ++i) y[i] = xp[i];
    auto eval_poly = [&](const DenseVec& at, const std::vector<i64>& poly) {
      DenseVec acc(f, 0);
      DenseVec pw(f, 0);
      pw[0] = 1;
      for (size_t k = 0; k < poly.size(); ++k) {
        for (int i = 0; i < f; ++i) acc[i] = mod_floor(acc[i] + poly[k] * pw[i] % mod_, mod_);
        if (k + 1 < poly.size()) pw = witt_mul(pw, at);
      }
      return acc;
    };
    std::vector<i64> mprime(f, 0);
    for (int k = 1; k <= f; ++k) mprime[k - 1] = mod_floor((i64)k * minpoly_[k], mod_);
    for (int iter = 0; iter < 4 * d_.N + 8; ++iter) {
      DenseVec val = eval_poly(y, minpoly_);
      bool zero = true;
      for (i64 v : val) zero &= (v == 0);
      if (zero) break;
      DenseVec der = eval_poly(y, mprime);
      std::vector<DenseVec> mm(f, DenseVec(f, 0));
      for (int j = 0; j < f; ++j) {
        DenseVec ej(f, 0);
        ej[j] = 1;
        DenseVec col = witt_mul(der, ej);
        for (int i = 0; i < f; ++i) mm[i][j] = col[i];
      }
      DenseVec z = solve_unit_system(mm, val, d_.p, mod_);
      for (int i = 0; i < f; ++i) y[i] = mod_floor(y[i] - z[i], mod_);
    }
    DenseVec check = eval_poly(y, minpoly_);
    for (i64 v : check)
      if (v != 0) throw std::logic_error("hensel iteration did not converge");
  }
  frob_root_ = y;

  // Frobenius matrix: x^i -> y^i on Witt coords, t^k -> t^(p*k) with clips
  std::vector<DenseVec> ypow(f, DenseVec(f, 0));
  ypow[0][0] = 1;
  for (int k = 1; k < f; ++k) ypow[k] = witt_mul(ypow[k - 1], y);
  fmat_.assign(dim_, DenseVec(dim_, 0));
  for (int k = lo_; k <= hi_; ++k) {
    i64 pk = (i64)d_.p * k;
    if (pk < lo_ || pk > hi_) continue;
    for (int wi = 0; wi < f; ++wi)
      for (int i = 0; i < f; ++i) {
        i64 v = ypow[wi][i];
        if (v != 0) fmat_[slot((int)pk) * f + i][slot(k) * f + wi] = v;
      }
  }
}

DenseVec RingModel::witt_mul(const DenseVec& a, const DenseVec& b) const {
  const int f = d_.f;
  if (f == 1) return {mod_floor(a[0] * b[0] % mod_, mod_)};
  DenseVec conv(2 * f - 1, 0);
  for (int i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f; ++j) {
      if (b[j] == 0) continue;
      conv[i + j] = mod_floor(conv[i + j] + a[i] * b[j] % mod_, mod_);
    }
  }
  DenseVec out(f, 0);
  for (int k = 0; k < 2 * f - 1; ++k) {
    if (conv[k] == 0) continue;
    for (int i = 0; i < f; ++i) out[i] = mod_floor(out[i] + conv[k] * xpow_[k][i] % mod_, mod_);
  }
  return out;
}

RingElem RingModel::from_int(i64 v) const {
  RingElem e = zero();
  e.c[slot(0) * d_.f] = mod_floor(v, mod_);
  return e;
}

RingElem RingModel::monomial(int witt_pow, int tdeg, i64 coeff) const {
  if (witt_pow < 0 || witt_pow >= d_.f || tdeg < lo_ || tdeg > hi_)
    throw std::invalid_argument("monomial out of range");
  RingElem e = zero();
  e.c[slot(tdeg) * d_.f + witt_pow] = mod_floor(coeff, mod_);
  return e;
}

RingElem RingModel::add(const RingElem& a, const RingElem& b) const {
  RingElem o = a;
  for (int i = 0; i < dim_; ++i) o.c[i] = mod_floor(o.c[i] + b.c[i], mod_);
  return o;
}

RingElem RingModel::sub(const RingElem& a, const RingElem& b) const {
  RingElem o = a;
  for (int i = 0; i < dim_; ++i) o.c[i] = mod_floor(o.c[i] - b.c[i], mod_);
  return o;
}

RingElem RingModel::neg(const RingElem& a) const {
  RingElem o = a;
  for (int i = 0; i < dim_; ++i) o.c[i] = mod_floor(-o.c[i], mod_);
  return o;
}

RingElem RingModel::scalar_mul(i64 k, const RingElem& a) const {
  RingElem o = a;
  k = mod_floor(k, mod_);
  for (int i = 0; i < dim_; ++i) o.c[i] = mod_floor(o.c[i] * k % mod_, mod_);
  return o;
}

RingElem RingModel::mul(const RingElem& a, const RingElem& b) const {
  const int f = d_.f;
  RingElem o = zero();
  DenseVec wa(f), wb(f);
  for (int ka = lo_; ka <= hi_; ++ka) {
    bool anza = false;
    for (int i = 0; i < f; ++i) anza |= a.c[slot(ka) * f + i] != 0;
    if (!anza) continue;
    for (int i = 0; i < f; ++i) wa[i] = a.c[slot(ka) * f + i];
    for (int kb = lo_; kb <= hi_; ++kb) {
      int k = ka + kb;
      if (k < lo_ || k > hi_) continue;  // window truncation
      bool anzb = false;
      for (int i = 0; i < f; ++i) anzb |= b.c[slot(kb) * f + i] != 0;
      if (!anzb) continue;
      for (int i = 0; i < f; ++i) wb[i] = b.c[slot(kb) * f + i];
      DenseVec prod = witt_mul(wa, wb);
      for (int i = 0; i < f; ++i)
        o.c[slot(k) * f + i] = mod_floor(o.c[slot(k) * f + i] + prod[i], mod_);
    }
  }
  return o;
}

RingElem RingModel::pow(const RingElem& a, i64 e) const {
  RingElem r = one();
  RingElem base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool RingModel::is_zero(const RingElem& a) const {
  for (i64 v : a.c)
    if (v != 0) return false;
  return true;
}

bool RingModel::is_unit(const RingElem& a) const {
  DenseVec w(d_.f);
  for (int i = 0; i < d_.f; ++i) w[i] = a.c[slot(0) * d_.f + i];
  bool nz = false;
  for (i64 v : w) nz |= mod_floor(v, d_.p) != 0;
  if (!nz) return false;
  if (lo_ < 0) {
    // window-module units carry no negative-degree support
    for (int k = lo_; k < 0; ++k)
      for (int i = 0; i < d_.f; ++i)
        if (a.c[slot(k) * d_.f + i] != 0) return false;
  }
  return true;
}

RingElem RingModel::inverse(const RingElem& a) const {
  if (!is_unit(a)) throw std::domain_error("inverse: not a unit in the model");
  const int f = d_.f;
  // invert the constant Witt slot, then the 1+z tail by geometric series
  DenseVec c(f);
  for (int i = 0; i < f; ++i) c[i] = a.c[slot(0) * f + i];
  std::vector<DenseVec> mm(f, DenseVec(f, 0));
  for (int j = 0; j < f; ++j) {
    DenseVec ej(f, 0);
    ej[j] = 1;
    DenseVec col = witt_mul(c, ej);
    for (int i = 0; i < f; ++i) mm[i][j] = col[i];
  }
  DenseVec rhs(f, 0);
  rhs[0] = 1;
  DenseVec cinv = solve_unit_system(mm, rhs, d_.p, mod_);
  RingElem cinv_e = zero();
  for (int i = 0; i < f; ++i) cinv_e.c[slot(0) * f + i] = cinv[i];
  RingElem z = sub(mul(cinv_e, a), one());
  RingElem inv = one();
  RingElem term = one();
  int cap = 4 * (d_.N + hi_ - lo_ + 2);
  for (int k = 1; k <= cap; ++k) {
    term = mul(term, z);
    if (is_zero(term)) break;
    inv = (k % 2 == 1) ? sub(inv, term) : add(inv, term);
    if (k == cap) throw std::domain_error("inverse: geometric series did not terminate");
  }
  RingElem out = mul(inv, cinv_e);
  if (!(mul(out, a) == one())) throw std::logic_error("inverse: verification failed");
  return out;
}

RingElem RingModel::frobenius(const RingElem& a) const {
  RingElem o = zero();
  for (int j = 0; j < dim_; ++j) {
    if (a.c[j] == 0) continue;
    for (int i = 0; i < dim_; ++i) {
      i64 v = fmat_[i][j];
      if (v != 0) o.c[i] = mod_floor(o.c[i] + v * a.c[j] % mod_, mod_);
    }
  }
  return o;
}

bool RingModel::frobenius_in_window(int basis_index) const {
  int k = basis_index / d_.f + lo_;
  return (i64)d_.p * k >= lo_;
}

int RingModel::val_p(const RingElem& a) const {
  int best = d_.N;
  for (i64 v : a.c) {
    if (v == 0) continue;
    int val = 0;
    i64 x = v;
    while (x % d_.p == 0) {
      x /= d_.p;
      ++val;
    }
    best = std::min(best, val);
  }
  return best;
}

RingElem RingModel::exact_div_p(const RingElem& a, int k) const {
  RingElem o = a;
  i64 pk = ipow(d_.p, k);
  for (auto& v : o.c) {
    if (v % pk != 0) throw std::domain_error("exact_div_p: not divisible");
    v /= pk;
  }
  return o;
}

RingModel RingModel::with_precision(int N2) const {
  RingDescriptor d = d_;
  d.N = N2;
  return RingModel(d);
}

RingElem RingModel::convert(const RingElem& a, const RingModel& from) const {
  if (from.dim_ != dim_) throw std::invalid_argument("convert: incompatible models");
  RingElem o = zero();
  for (int i = 0; i < dim_; ++i) o.c[i] = mod_floor(a.c[i], mod_);
  return o;
}

Coinvariants RingModel::coinvariants() const {
  TriBasis rels(dim_, mod_);
  for (int j = 0; j < dim_; ++j) {
    if (!frobenius_in_window(j)) continue;  // image below the window: no relation
    SparseVec col;
    for (int i = 0; i < dim_; ++i) {
      i64 v = mod_floor((i == j ? 1 : 0) - fmat_[i][j], mod_);
      if (v != 0) col.emplace_back(i, v);
    }
    rels.absorb(std::move(col));
  }
  Coinvariants out;
  out.pres = present(rels);
  out.group = out.pres.group();
  return out;
}

UnitGroupDescription RingModel::frobenius_fixed_units() const {
  if (d_.kind != RingKind::Zp && d_.kind != RingKind::Witt)
    throw std::invalid_argument("frobenius_fixed_units: series models unsupported");
  UnitGroupDescription out;
  i64 q = ipow(d_.p, d_.f);
  if (q - 1 == 1) {
    out.generators.push_back(one());
    out.orders.push_back(1);
    return out;
  }
  Poly gen;
  if (d_.f == 1) {
    for (i64 g = 2; g < q && gen.empty(); ++g) {
      bool primitive = true;
      i64 v = 1;
      for (i64 e = 1; e < q - 1; ++e) {
        v = v * g % q;
        if (v == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) gen = {g};
    }
  } else {
    Poly m0(minpoly_.size());
    for (size_t i = 0; i < minpoly_.size(); ++i) m0[i] = mod_floor(minpoly_[i], d_.p);
    for (i64 code = 2; code < q && gen.empty(); ++code) {
      Poly cand;
      i64 c = code;
      for (int i = 0; i < d_.f; ++i) {
        cand.push_back(c % d_.p);
        c /= d_.p;
      }
      cand = poly_trim(std::move(cand), d_.p);
      if (cand.empty()) continue;
      bool ok = true;
      for (i64 e = 1; e < q - 1 && ok; ++e) {
        if ((q - 1) % e != 0) continue;
        Poly pw = poly_powmod(cand, e, m0, d_.p);
        if (pw.size() == 1 && pw[0] == 1) ok = false;
      }
      if (ok) gen = cand;
    }
  }
  if (gen.empty()) throw std::logic_error("no generator of the residue field found");
  RingElem u = zero();
  for (size_t i = 0; i < gen.size(); ++i) u.c[slot(0) * d_.f + i] = gen[i];
  for (int it = 0; it < d_.N + 2; ++it) u = pow(u, q);  // Teichmueller iteration
  if (!(pow(u, q - 1) == one())) throw std::logic_error("Teichmueller lift failed");
  if (!(frobenius(u) == pow(u, d_.p))) throw std::logic_error("fixed-unit check F(u)=u^p failed");
  out.generators.push_back(u);
  out.orders.push_back(q - 1);
  return out;
}

RingElem RingModel::frobenius_quotient_log(const RingElem& u) const {
  if (!is_unit(u)) throw std::domain_error("frobenius_quotient_log: not a unit");
  int guard = 2;
  while (ipow(d_.p, guard) < (i64)(d_.N + guard) + 2) ++guard;
  RingModel big = with_precision(d_.N + guard);
  RingElem ub = big.convert(u, *this);
  RingElem z = big.sub(big.mul(big.pow(ub, d_.p), big.inverse(big.frobenius(ub))), big.one());
  if (!big.is_zero(z) && big.val_p(z) < 1)
    throw std::logic_error("u^p/F(u) is not congruent to 1 mod p");
  RingElem acc = big.zero();
  RingElem zk = big.one();
  int cap = (big.desc().N + 2) * (hi_ - lo_ + 1);
  for (int k = 1; k <= cap; ++k) {
    zk = big.mul(zk, z);
    if (big.is_zero(zk)) break;
    int vk = 0;
    i64 kk = k;
    while (kk % d_.p == 0) {
      kk /= d_.p;
      ++vk;
    }
    RingElem term = big.exact_div_p(zk, vk);
    term = big.scalar_mul(inv_mod(kk, big.modulus()), term);
    acc = (k % 2 == 1) ? big.add(acc, term) : big.sub(acc, term);
    if (k == cap) throw std::logic_error("frobenius_quotient_log: series did not terminate");
  }
  RingElem out = convert(acc, big);
  if (!is_zero(out) && val_p(out) < 1)
    throw std::logic_error("frobenius_quotient_log: result not divisible by p");
  return out;
}

CoinvariantComparisonReport compare_coinvariants(const RingModel& r, const RingModel& s,
                                                 const std::vector<int>& embedding) {
  if ((int)embedding.size() != r.dim()) throw std::invalid_argument("embedding size mismatch");
  if (r.desc().p != s.desc().p || r.desc().N != s.desc().N)
    throw std::invalid_argument("compare_coinvariants: prime/precision mismatch");
  for (int j = 0; j < r.dim(); ++j) {
    RingElem b{DenseVec(r.dim(), 0)};
    b.c[j] = 1;
    RingElem fr = r.frobenius(b);
    RingElem es{DenseVec(s.dim(), 0)};
    es.c[embedding[j]] = 1;
    RingElem fs = s.frobenius(es);
    RingElem fr_mapped{DenseVec(s.dim(), 0)};
    for (int i = 0; i < r.dim(); ++i)
      fr_mapped.c[embedding[i]] = mod_floor(fr_mapped.c[embedding[i]] + fr.c[i], s.modulus());
    if (!(fr_mapped == fs)) {
      bool both_clipped = r.is_zero(fr) && s.is_zero(fs);
      if (!both_clipped)
        throw std::invalid_argument("embedding does not commute with the Frobenius lifts");
    }
  }

  Coinvariants cr = r.coinvariants();
  Coinvariants cs = s.coinvariants();
  CoinvariantComparisonReport rep;
  rep.source = cr.group;
  rep.target = cs.group;

  std::vector<DenseVec> cols;
  for (auto& gen : cr.pres.generators()) {
    SparseVec mapped;
    for (auto& [i, v] : gen) mapped.emplace_back(embedding[i], v);
    std::sort(mapped.begin(), mapped.end());
    cols.push_back(cs.pres.coords(mapped));
  }
  rep.coker_factors = coker_factors(cs.group.torsion, cols);

  auto expsum = [&](const std::vector<i64>& fac) {
    i64 s2 = 0;
    for (i64 d : fac) {
      i64 x = d;
      while (x % r.desc().p == 0) {
        x /= r.desc().p;
        ++s2;
      }
      if (x != 1) throw std::logic_error("coinvariant factor is not a p-power");
    }
    return s2;
  };
  i64 src = expsum(cr.group.torsion), tgt = expsum(cs.group.torsion),
      cok = expsum(rep.coker_factors);
  bool surjective = rep.coker_factors.empty();
  bool injective = (src + cok == tgt);
  bool coker_free = true;
  for (i64 d : rep.coker_factors) coker_free &= (d == r.modulus());
  if (surjective && src == tgt)
    rep.verdict = CoinvariantComparison::iso;
  else if (surjective)
    rep.verdict = CoinvariantComparison::surjective_only;
  else if (injective && coker_free)
    rep.verdict = CoinvariantComparison::injective_torsion_free_cokernel;
  else
    rep.verdict = CoinvariantComparison::none;
  return rep;
}

std::vector<int> natural_embedding(const RingModel& r, const RingModel& s) {
  std::vector<int> emb(r.dim());
  if (r.desc().f != s.desc().f) throw std::invalid_argument("natural_embedding: base mismatch");
  const int f = r.desc().f;
  for (int k = r.tdeg_lo(); k <= r.tdeg_hi(); ++k) {
    if (k < s.tdeg_lo() || k > s.tdeg_hi())
      throw std::invalid_argument("natural_embedding: window not contained");
    for (int i = 0; i < f; ++i)
      emb[(k - r.tdeg_lo()) * f + i] = (k - s.tdeg_lo()) * f + i;
  }
  return emb;
}

AbelianGroupPresentation tensor_with_finite(const AbelianGroupPresentation& m, const RingModel& r) {
  if (m.free_rank != 0) throw std::invalid_argument("tensor_with_finite: finite input required");
  for (i64 d : m.torsion) {
    i64 x = d;
    while (x % r.desc().p == 0) x /= r.desc().p;
    i64 ppart = d / x;
    if (ppart > r.modulus())
      throw std::invalid_argument("tensor_with_finite: precision too low to resolve the tensor");
  }
  return tensor_finite(m, r.coinvariants().group);
}

}  // namespace sk1lab
