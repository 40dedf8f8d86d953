#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sk1lab/abelian.hpp"

namespace sk1lab {

/// Sparse integer vector, sorted by row index, no zero entries.
using SparseVec = std::vector<std::pair<int, i64>>;
using DenseVec = std::vector<i64>;

SparseVec to_sparse(const DenseVec& v);
DenseVec to_dense(const SparseVec& v, int n);

/// Triangular basis of an integer lattice L in Z^rows, maintained by
/// absorption of generators. One column per pivot row; the pivot is the
/// topmost nonzero entry of its column. With modulus m > 0 the lattice
/// implicitly contains m*Z^rows and all entries are kept in [0, m); pivots
/// are normalized to divisors of m. With m == 0 arithmetic is plain Z.
class TriBasis {
 public:
  TriBasis(int rows, i64 modulus) : rows_(rows), m_(modulus) {}

  void absorb(SparseVec v);

  /// Reduce v by the basis. Returns the irreducible remainder (empty iff v
  /// is a lattice member).
  SparseVec remainder(SparseVec v) const;

  bool contains(SparseVec v) const { return remainder(std::move(v)).empty(); }

  /// Write v as an integer combination of basis columns (mod m*Z^rows when
  /// m > 0): coords keyed by pivot row. Returns nullopt if v is not in L.
  std::optional<SparseVec> solve(SparseVec v) const;

  i64 pivot_value(int row) const;  // 0 when the row has no explicit column
  const std::map<int, SparseVec>& columns() const { return cols_; }
  int rows() const { return rows_; }
  i64 modulus() const { return m_; }

 private:
  int rows_;
  i64 m_;
  std::map<int, SparseVec> cols_;  // pivot row -> column

  struct Scratch;
  void absorb_one(Scratch& s);
};

/// Quotient Z^n / (relations + m*Z^n) with coordinate support. Produced by
/// present(); keeps only what is needed to map ambient vectors to
/// coordinates in the reduced group and to lift generators back.
class Presentation {
 public:
  const AbelianGroupPresentation& group() const { return group_; }
  const std::vector<i64>& factors() const { return group_.torsion; }

  /// Coordinates of the class of v, one entry per invariant factor, reduced
  /// mod that factor.
  DenseVec coords(const SparseVec& v) const;

  /// Ambient lifts of the reduced generators (one per invariant factor).
  const std::vector<SparseVec>& generators() const { return gens_; }

  i64 floor_modulus() const { return m_; }
  int ambient_dim() const { return n_; }

 private:
  friend Presentation present(const TriBasis& rels);
  int n_ = 0;
  i64 m_ = 0;
  AbelianGroupPresentation group_;
  // Substitution trace from unit-pivot elimination, applied in order.
  std::vector<std::pair<int, SparseVec>> subst_;
  std::vector<int> qrows_;               // surviving generator rows
  std::vector<DenseVec> uq_;             // |Q| x |Q| left transform
  std::vector<i64> qdiag_;               // SNF diagonal on Q (divisors of m)
  std::vector<int> keep_;                // indices into Q with qdiag > 1
  std::vector<SparseVec> gens_;
};

/// Reduce a triangular relation basis to invariant factors + coordinate
/// data. Requires modulus > 0 (every quotient we compute is finite or
/// precision-bounded).
Presentation present(const TriBasis& rels);

/// Kernel lattice {x in Z^n : A x == 0 (mod m)} for A given by sparse
/// columns over rows ambient rows. m == 0 gives the exact integer kernel.
/// The result includes m*Z^n when m > 0.
TriBasis kernel_lattice(int nrows, int ncols, const std::vector<SparseVec>& cols, i64 m);

/// Smith normal form of a small dense matrix with floor modulus m > 0:
/// computes diag plus left transform U and its inverse such that the class
/// map x -> Ux diagonalizes Z^rows/(cols(A) + m Z^rows).
struct SmallSnf {
  std::vector<i64> diag;            // length rows, divisors of m, ascending divisibility
  std::vector<DenseVec> u, uinv;    // rows x rows
};
SmallSnf small_snf(std::vector<DenseVec> a, int nrows, i64 m);

/// Quotient of (+) Z/d_i by the span of the given coordinate columns:
/// returns new factors, the projection matrix on old coordinates and lifts
/// of the new generators as combinations of the old ones.
struct SubQuotient {
  std::vector<i64> factors;
  std::vector<DenseVec> proj;      // factors.size() rows, d.size() cols
  std::vector<DenseVec> gen_lift;  // d.size() rows? stored as columns: gen_lift[j] length d.size()
  DenseVec apply(const DenseVec& old_coords) const;
};
SubQuotient quotient_by(const std::vector<i64>& d, const std::vector<DenseVec>& span_cols);

/// Invariant factors of coker((+) Z/d_i <- image of columns), i.e. the same
/// as quotient_by but without transforms.
std::vector<i64> coker_factors(const std::vector<i64>& d, const std::vector<DenseVec>& cols);

i64 gcd_i64(i64 a, i64 b);
/// Extended gcd: g = a x + b y, g >= 0.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);
i64 mod_floor(i64 a, i64 m);  // representative in [0, m)
i64 inv_mod(i64 a, i64 m);    // inverse of a unit mod m

}  // namespace sk1lab
