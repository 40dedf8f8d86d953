#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sk1lab/abelian.hpp"
#include "sk1lab/group.hpp"
#include "sk1lab/lattice.hpp"

namespace sk1lab {

/// Coefficient module for the normalized bar complex. Three shapes:
///  - trivial Z            (modulus 0, empty basis)
///  - trivial Z/p^N        (modulus p^N, empty basis)
///  - (Z/p^N)[G_r]         (modulus p^N, basis = p-regular elements,
///                          conjugation action)
struct CoeffModule {
  i64 modulus = 0;
  i64 p = 0;                // prime underlying the modulus (0 for Z)
  std::vector<int> basis;   // sorted element indices; empty = rank-1 trivial
  bool conjugation = false;

  int dim() const { return basis.empty() ? 1 : (int)basis.size(); }
  static CoeffModule trivial_int() { return {}; }
  static CoeffModule trivial_mod(i64 p, int N);
  static CoeffModule conjugation_mod(const FiniteGroup& g, i64 p, int N);
};

struct HomologyOptions {
  int max_order_deg2_int = 32;  // degree-2 integral bound
  bool allow_large = false;     // permit up to 64 (slow)
};

/// Chain indexing: a degree-k basis element is a tuple of k non-identity
/// group elements plus a module basis slot.
int bar_dim(const FiniteGroup& g, const CoeffModule& m, int k);

/// Columns of the boundary map C_k -> C_{k-1}, k in 1..3.
std::vector<SparseVec> bar_boundary(const FiniteGroup& g, const CoeffModule& m, int k);
SparseVec bar_boundary_column(const FiniteGroup& g, const CoeffModule& m, int k, int col);

class HomologyPresentation {
 public:
  const AbelianGroupPresentation& group() const { return pres_.group(); }
  const std::vector<i64>& factors() const { return pres_.factors(); }
  int degree() const { return degree_; }
  const CoeffModule& module() const { return module_; }
  const FiniteGroup& ambient_group() const { return g_; }

  /// Coordinates of a cycle's homology class. Throws if the chain is not a
  /// cycle at the module's precision.
  DenseVec class_of_cycle(const SparseVec& chain) const;

  /// Explicit chain representative of the j-th reduced generator.
  SparseVec generator_chain(int j) const;

  /// Matrix of the map induced by the semilinear coefficient operator
  /// (basis element x -> x^p on permutation modules, identity on trivial
  /// ones); column j = class of the transported j-th generator. Verifies
  /// cycles map to cycles and a sample of boundaries to boundaries.
  std::vector<DenseVec> induced_psi() const;

  /// Transport a chain along the coefficient operator.
  SparseVec psi_chain(const SparseVec& chain) const;

  friend HomologyPresentation homology(const FiniteGroup& g, int degree,
                                       const CoeffModule& m, const HomologyOptions& opt);

 private:
  FiniteGroup g_;
  CoeffModule module_;
  int degree_ = 0;
  TriBasis cycles_{0, 0};
  std::vector<int> coord_rows_;  // cycle pivot rows, compacted coordinates
  Presentation pres_;
  std::vector<SparseVec> gen_chains_;

  SparseVec compact(const SparseVec& coords) const;
};

HomologyPresentation homology(const FiniteGroup& g, int degree, const CoeffModule& m,
                              const HomologyOptions& opt = {});

/// Lambda^2 of a finite abelian group by the closed gcd formula.
AbelianGroupPresentation exterior_square(const AbelianGroupPresentation& a);

/// Cycles spanning the images of H_2(A, coefficients) under corestriction
/// over all abelian subgroups A: commuting-pair cycles [a|b] - [b|a] plus,
/// at finite precision, the cyclic torsion witnesses sum_i [a^i|a] * mu with
/// ord(a) * mu = 0.
std::vector<SparseVec> abelian_span_cycles(const FiniteGroup& g, const CoeffModule& m);

struct H2AbResult {
  AbelianGroupPresentation h2;
  AbelianGroupPresentation h2ab;
  AbelianGroupPresentation h2bar;
  std::vector<DenseVec> span_coords;  // classes of the span cycles in H2
  SubQuotient quotient;               // H2 -> H2bar
};
H2AbResult h2_ab(const HomologyPresentation& h2);

/// Degree-1 Shapiro decomposition at precision p^N: the direct bar homology
/// H_1(G, (Z/p^N)[G_r]) against the per-class oracle (+)_i Z_i^ab (x) Z/p^N
/// with the inclusion-induced identification.
struct ShapiroH1 {
  AbelianGroupPresentation direct;
  AbelianGroupPresentation oracle;
  std::vector<int> component_class;           // oracle component -> class index
  std::vector<AbelianGroupPresentation> components;
  bool identification_iso = false;
};
ShapiroH1 shapiro_h1(const FiniteGroup& g, i64 p, int N);

}  // namespace sk1lab
