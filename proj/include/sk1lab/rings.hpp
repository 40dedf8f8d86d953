#pragma once

#include <string>
#include <vector>

#include "sk1lab/abelian.hpp"
#include "sk1lab/lattice.hpp"

namespace sk1lab {

/// Concrete truncated models of the coefficient rings:
///   Zp            Z/p^N
///   Witt          W(F_{p^f}) mod p^N, modelled as Z/p^N[x]/(m(x)) for a
///                 fixed irreducible m, Frobenius = Hensel-lifted power map
///   PowerSeries   W[[t]] windowed to degrees 0..D (an honest quotient ring
///                 by the ideal (t^{D+1}))
///   Laurent       W{{t}} windowed to degrees -D..D
///   InverseVar    W<<t^-1>> windowed to degrees -D..0
///
/// Window conventions: products and Frobenius images beyond the positive
/// edge are dropped (a ring quotient); terms falling below the negative
/// edge are dropped as module truncation, and maps whose image would fall
/// below the window contribute no relation to coinvariants.
enum class RingKind { Zp, Witt, PowerSeries, Laurent, InverseVar };

struct RingDescriptor {
  RingKind kind = RingKind::Zp;
  i64 p = 2;
  int N = 4;
  int f = 1;
  int D = 0;

  static RingDescriptor zp(i64 p, int N) { return {RingKind::Zp, p, N, 1, 0}; }
  static RingDescriptor witt(i64 p, int N, int f) { return {RingKind::Witt, p, N, f, 0}; }
  static RingDescriptor power_series(i64 p, int N, int f, int D) {
    return {RingKind::PowerSeries, p, N, f, D};
  }
  static RingDescriptor laurent(i64 p, int N, int f, int D) {
    return {RingKind::Laurent, p, N, f, D};
  }
  static RingDescriptor inverse_var(i64 p, int N, int f, int D) {
    return {RingKind::InverseVar, p, N, f, D};
  }
  std::string str() const;
  bool operator==(const RingDescriptor&) const = default;
};

struct RingElem {
  DenseVec c;  // coords mod p^N: index = tslot * f + witt_power
  bool operator==(const RingElem&) const = default;
};

struct Coinvariants {
  AbelianGroupPresentation group;
  Presentation pres;  // over the model basis, for mapping elements
};

struct UnitGroupDescription {
  std::vector<RingElem> generators;
  std::vector<i64> orders;
};

enum class CoinvariantComparison { iso, surjective_only, injective_torsion_free_cokernel, none };
std::string to_string(CoinvariantComparison c);

class RingModel {
 public:
  explicit RingModel(RingDescriptor d);

  const RingDescriptor& desc() const { return d_; }
  i64 modulus() const { return mod_; }
  int dim() const { return dim_; }
  int tdeg_lo() const { return lo_; }
  int tdeg_hi() const { return hi_; }

  RingElem zero() const { return {DenseVec(dim_, 0)}; }
  RingElem one() const { return from_int(1); }
  RingElem from_int(i64 v) const;
  RingElem monomial(int witt_pow, int tdeg, i64 coeff) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem scalar_mul(i64 k, const RingElem& a) const;
  RingElem pow(const RingElem& a, i64 e) const;
  bool is_zero(const RingElem& a) const;

  /// Invertibility in the model (the constant Witt slot must be a unit mod
  /// p and inversion succeeds within the window).
  bool is_unit(const RingElem& a) const;
  RingElem inverse(const RingElem& a) const;

  RingElem frobenius(const RingElem& a) const;
  /// False when the Frobenius image of this basis vector falls below the
  /// window (then the coinvariant relation is omitted).
  bool frobenius_in_window(int basis_index) const;
  const std::vector<DenseVec>& frobenius_matrix() const { return fmat_; }

  /// min p-valuation over coordinates (N for zero)
  int val_p(const RingElem& a) const;
  RingElem exact_div_p(const RingElem& a, int k) const;

  RingModel with_precision(int N2) const;
  /// Reinterpret coordinates between precisions of the same structure.
  RingElem convert(const RingElem& a, const RingModel& from) const;

  Coinvariants coinvariants() const;

  /// Hensel-lifted units with F(u) = u^p (Zp and Witt models only): the
  /// prime-to-p roots of unity, returned by generators.
  UnitGroupDescription frobenius_fixed_units() const;

  /// log(u^p / F(u)) for a unit u; the result is divisible by p.
  RingElem frobenius_quotient_log(const RingElem& u) const;

  const std::vector<i64>& witt_min_poly() const { return minpoly_; }

 private:
  RingDescriptor d_;
  i64 mod_ = 0;
  int lo_ = 0, hi_ = 0, dim_ = 0;
  std::vector<i64> minpoly_;            // monic, length f+1, coeffs mod p^N
  std::vector<DenseVec> xpow_;          // x^k mod m for k <= 2f-2, coords len f
  DenseVec frob_root_;                  // y with m(y) = 0, y = x^p mod p
  std::vector<DenseVec> fmat_;          // frobenius matrix dim x dim

  int slot(int tdeg) const { return tdeg - lo_; }
  DenseVec witt_mul(const DenseVec& a, const DenseVec& b) const;  // length-f vectors
  DenseVec witt_eval_at_root(const DenseVec& a) const;
};

/// Classification of R_F -> S_F along a basis embedding, with the map's
/// cokernel factors attached.
struct CoinvariantComparisonReport {
  CoinvariantComparison verdict = CoinvariantComparison::none;
  std::vector<i64> coker_factors;
  AbelianGroupPresentation source, target;
};
/// embedding: target basis index for each source basis index.
CoinvariantComparisonReport compare_coinvariants(const RingModel& r, const RingModel& s,
                                                 const std::vector<int>& embedding);

/// Natural embeddings used by the ring-comparison reports.
std::vector<int> natural_embedding(const RingModel& r, const RingModel& s);

/// M (x) R/(1-F)R for a finite p-group M; errors when the precision cannot
/// resolve the tensor.
AbelianGroupPresentation tensor_with_finite(const AbelianGroupPresentation& m, const RingModel& r);

}  // namespace sk1lab
