#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sk1lab/abelian.hpp"
#include "sk1lab/lattice.hpp"

namespace sk1lab {

/// Dense multiplication-table model of a finite group. Element 0 is always
/// the identity. Target scale is |G| <= 64 so everything downstream gets
/// constant-time products.
struct FiniteGroup {
  int n = 1;
  std::vector<int> mult;  // n*n, mult[a*n + b] = a*b
  std::vector<int> inv;
  std::vector<std::string> names;
  std::string label;  // descriptive id for reports and cache keys

  int op(int a, int b) const { return mult[a * n + b]; }
  int conj(int h, int g) const { return op(op(h, g), inv[h]); }  // h g h^-1
  int power(int g, i64 e) const;
  int order(int g) const;
  i64 exponent() const;
  bool is_abelian() const;

  /// Verify the group axioms exhaustively; throws on failure.
  void validate() const;

  /// Stable content hash of the table (for cache keys).
  std::uint64_t table_hash() const;
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted element indices

  bool contains(int g) const;
  int index() const { return parent->n / (int)members.size(); }
};

struct ConjugacyData {
  std::vector<int> class_of;     // element -> class index
  std::vector<int> reps;         // class -> minimal element index
  std::vector<int> class_sizes;  // class -> size
  int num_classes() const { return (int)reps.size(); }
};

// --- construction ----------------------------------------------------------

FiniteGroup group_from_table(std::vector<std::vector<int>> table,
                             std::vector<std::string> names = {},
                             std::string label = "table");

/// Closure of permutation generators (one-line images on 0..k-1); errors if
/// the closure exceeds max_order.
FiniteGroup group_from_permutations(const std::vector<std::vector<int>>& gens,
                                    int max_order = 64, std::string label = "perm");

FiniteGroup cyclic_group(int m);
FiniteGroup dihedral_group(int two_n);           // order 2n, n >= 1
FiniteGroup dicyclic_group(int m);               // order 4m; m = 2 gives Q8
FiniteGroup elementary_abelian_group(int p, int k);
FiniteGroup heisenberg_group(int p);             // order p^3, unitriangular model
FiniteGroup symmetric_group_3();
FiniteGroup alternating_group_4();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// C_n x| C_m with the action a -> a^k (k^m == 1 mod n required).
FiniteGroup semidirect_cyclic(int n, int m, int k);
/// Semidirect N x| C_m where the action of the C_m generator is given as an
/// automorphism of N (permutation of element indices).
FiniteGroup semidirect_by_automorphism(const FiniteGroup& normal, int m,
                                       const std::vector<int>& action,
                                       std::string label);
/// Quotient of g by a central subgroup (element indices); used for central
/// products in the catalog.
FiniteGroup quotient_by_central(const FiniteGroup& g, const std::vector<int>& centre,
                                std::string label);

/// Named families: C<n>, D<2n>, Q8/Q16/Q32, Dic<n>, SD16/SD32, M16/M32,
/// E<p>^<k>, Heis<p>, S3, A4, and 'x'-separated direct products of those.
FiniteGroup group_from_name(const std::string& name);

/// Abelian groups of order n, one per isomorphism class.
std::vector<FiniteGroup> abelian_groups_of_order(int n);

/// All groups of order <= 16 (complete up to isomorphism) plus a curated set
/// of 2-groups of order 32; used by the scan commands.
struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};
std::vector<CatalogEntry> group_catalog_upto_16();
std::vector<CatalogEntry> two_group_catalog_upto_32();

// --- structure -------------------------------------------------------------

ConjugacyData conjugacy_classes(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, int elem);
Subgroup center(const FiniteGroup& g);

/// Unique commuting factorization g = g_r * g_p with ord(g_r) coprime to p
/// and ord(g_p) a p-power.
std::pair<int, int> p_parts(const FiniteGroup& g, int elem, i64 p);

/// Classes whose representative has order coprime to p.
std::vector<int> p_regular_classes(const FiniteGroup& g, const ConjugacyData& cd, i64 p);

/// S = {g : c^m g conjugate to g for all 0 <= m < p} for a central c of
/// order p, plus the class set phi(S). Throws if c is not central of order p.
struct SpecialSet {
  std::vector<int> elements;  // sorted
  std::vector<int> classes;   // sorted class indices
};
SpecialSet special_set_s(const FiniteGroup& g, int c, i64 p);

/// Subgroup generated by the given elements.
Subgroup generated_subgroup(const FiniteGroup& g, std::vector<int> gens);
std::vector<int> commutator_subgroup_members(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
bool subgroup_is_abelian(const FiniteGroup& g, const Subgroup& h);
/// Is G/H cyclic (H normal)?
bool quotient_is_cyclic(const FiniteGroup& g, const Subgroup& h);

/// Abelianization with the coordinate map onto the invariant factors.
struct Abelianization {
  AbelianGroupPresentation group;
  std::vector<DenseVec> proj;   // element -> coordinates (length = #factors)
  std::vector<SparseVec> gens;  // generator lifts as formal Z-sums of elements
};
Abelianization abelianization(const FiniteGroup& g);

/// A normal abelian subgroup with cyclic quotient, if the exhaustive scan
/// over <=3-generated subgroups finds one.
std::optional<Subgroup> normal_abelian_cyclic_quotient_witness(const FiniteGroup& g);

/// Re-index a subgroup as a standalone FiniteGroup (identity first).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string label);

}  // namespace sk1lab
