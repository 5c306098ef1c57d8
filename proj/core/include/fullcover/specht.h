#ifndef FULLCOVER_SPECHT_H_
#define FULLCOVER_SPECHT_H_

// Incidence maps between function spaces on j- and k-subsets, and the
// standard Sym(n)-submodules of GF(2)^{C(n,k)} they generate.
//
// Orientation: a function on j-subsets is a column vector indexed by colex
// rank, and alpha_{j,k} acts by left multiplication, so its matrix has
// C(n,k) rows and C(n,j) columns with entry (w, v) = [v ⊆ w].
// beta_{k,j} sends a k-subset to the sum of its j-subsets; its matrix has
// C(n,j) rows and C(n,k) columns and is built directly from that rule.

#include <cstddef>
#include <utility>
#include <vector>

#include "fullcover/gf2.h"
#include "fullcover/kcomb.h"

namespace fullcover {

struct AlphaMap {
  int j = 0;
  int k = 0;
  int n = 0;
  gf2::Mat mat;
};

AlphaMap AlphaMatrix(int j, int k, int n);
gf2::Mat BetaMatrix(int k, int j, int n);

// Intersection of ker beta_{k,i} for i < k inside GF(2)[n]^k; the whole
// space when k == 0.
gf2::Subspace SpechtKernel(int k, int n);

// Sum of im alpha_{j,k} over j in J.
struct SubmoduleSpec {
  int k = 0;
  int n = 0;
  std::vector<int> J;  // sorted, distinct, each in [0, k]
  gf2::Subspace materialized;
};

SubmoduleSpec StandardSubmodule(std::vector<int> J, int k, int n);

// Indices j <= k with C(k-2, j-2) even.
std::vector<int> MIndices(int k);
// The sum of im alpha_{j,k} over MIndices(k); requires k >= 2.
SubmoduleSpec MSubmodule(int k, int n);

// True iff some j in spec.J has C(k-2, j-2) odd. When true, also checks that
// spec.materialized contains every column of alpha_{2,k} and throws
// ExpectationViolation otherwise.
bool HasS2Factor(const SubmoduleSpec& spec);

struct CompositionCheck {
  bool holds = false;
  int parity = 0;  // C(l-j, k-j) mod 2
};
// alpha_{k,l} * alpha_{j,k} == C(l-j, k-j) * alpha_{j,l} over GF(2).
CompositionCheck CompositionIdentityCheck(int j, int k, int l, int n);

// Permutation matrix of g on GF(2)^{C(n,k)}: e_w -> e_{g w}, so that
// (P f)(w) = f(g^{-1} w).
gf2::Mat PermutationAction(const Perm& g, const KSubsetIndexer& indexer);
// f -> (w -> f(g^{-1} w)) without building the matrix.
gf2::Vec Twist(const Perm& g, const gf2::Vec& f, const KSubsetIndexer& indexer);

// True iff the subspace is mapped into itself by the standard generators.
bool IsInvariant(const gf2::Subspace& s, const KSubsetIndexer& indexer);

struct LatticeNode {
  std::vector<std::vector<int>> Js;  // every J materializing to this node
  std::size_t dim = 0;
  bool s2_factor = false;  // HasS2Factor for some J in Js
  bool invariant = false;  // closed under the generator action
  gf2::Subspace space;
  const std::vector<int>& canonical_J() const { return Js.front(); }
};

struct Lattice {
  int k = 0;
  int n = 0;
  // Sorted by dimension, then by the first J in enumeration order.
  std::vector<LatticeNode> nodes;
  // contains[a][b] iff nodes[a] ⊆ nodes[b].
  std::vector<std::vector<bool>> contains;
  // Covering pairs (a, b): nodes[a] ⊊ nodes[b] with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
};

inline constexpr std::size_t kDefaultSizeBound = 512;

// All 2^{k+1} choices of J, deduplicated by materialized subspace. Throws
// SizeBoundError when C(n,k) exceeds size_bound.
Lattice LatticeReport(int k, int n, std::size_t size_bound = kDefaultSizeBound);

}  // namespace fullcover

#endif  // FULLCOVER_SPECHT_H_
