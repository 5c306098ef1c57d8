#ifndef FULLCOVER_COHOM_H_
#define FULLCOVER_COHOM_H_

// Low-degree cohomology of Sym(n) with coefficients in finite GF(2)-modules,
// by exact linear algebra.
//
// Conventions: the group acts on the left, a 1-cocycle satisfies
// d(hg) = d(h) + h d(g), and a 2-cochain c is a coboundary when
// c(h,g) = u(hg) + u(h) + h u(g) for some u : Sym(n) -> module.

#include <cstddef>
#include <optional>
#include <vector>

#include "fullcover/gamma.h"
#include "fullcover/gf2.h"
#include "fullcover/kcomb.h"
#include "fullcover/specht.h"

namespace fullcover {

class GModule {
 public:
  // GF(2)^dim with every element acting as the identity.
  static GModule Trivial(int n, std::size_t dim);
  static GModule Zero(int n) { return Trivial(n, 0); }
  // GF(2)^{C(n,k)} / K with the permutation action; K must be invariant.
  static GModule Quotient(const gf2::Subspace& K, int k, int n);
  // Explicit generator matrices, no origin.
  static GModule FromGenerators(int n, std::size_t dim,
                                std::vector<gf2::Mat> actions);

  int n() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const gf2::Mat& generator_action(std::size_t i) const { return actions_[i]; }

  bool has_origin() const { return origin_.has_value(); }
  int k() const { return k_; }
  // Projection and section of the quotient; has_origin() must hold.
  const gf2::QuotientMap& origin() const { return *origin_; }

  // Image of an ambient vector in the module. Without an origin the vector
  // must already have length dim().
  gf2::Vec Project(const gf2::Vec& ambient) const;

  // Matrix of g. Modules with an origin compute Q P_g L directly; others
  // multiply generator matrices along a breadth-first word for g.
  gf2::Mat Action(const Perm& g) const;
  // Action(element(i)) for every element of Sym(n), in SymmetricGroup order.
  std::vector<gf2::Mat> AllActions(const SymmetricGroup& group) const;

  // Throws std::invalid_argument when a generator matrix is singular or the
  // matrices disagree with the multiplication of Sym(n).
  void Validate() const;

 private:
  GModule(int n, std::size_t dim) : n_(n), dim_(dim) {}

  std::vector<gf2::Mat> WordActions(const SymmetricGroup& group) const;

  int n_ = 0;
  std::size_t dim_ = 0;
  int k_ = -1;
  std::vector<Perm> generators_;
  std::vector<gf2::Mat> actions_;
  std::optional<gf2::QuotientMap> origin_;
  std::optional<KSubsetIndexer> indexer_;
};

struct CoboundaryCertificate {
  bool sat = false;
  // u on the standard generators, in module coordinates.
  std::vector<gf2::Vec> witness_on_generators;
  // u on every element of Sym(n), in SymmetricGroup order; empty if UNSAT.
  std::vector<gf2::Vec> section;
  // rank [A | b] - rank A; 1 exactly when UNSAT.
  std::size_t rank_gap = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

// Decides whether the projection of c into m is a coboundary. Unknowns are
// the values of u on the generators; u is propagated along a breadth-first
// Cayley tree and the remaining generator edges give the linear constraints.
// A SAT answer is re-verified on all |G|^2 pairs before returning.
// Throws std::invalid_argument for an unnormalized cochain.
CoboundaryCertificate Is2Coboundary(const CocycleTable& c, const GModule& m);

// The same question as one linear system in all |G| * dim unknowns u(x) and
// all |G|^2 equations. Kept as an independent oracle.
CoboundaryCertificate Is2CoboundaryDense(const CocycleTable& c,
                                         const GModule& m);

struct H1Result {
  std::size_t z1_dim = 0;
  std::size_t b1_dim = 0;
  std::size_t h1_dim() const { return z1_dim - b1_dim; }
};

// Finite-group H^1(Sym(n), m); not the continuous cohomology of an infinite
// symmetric group.
H1Result H1Dim(const GModule& m);
H1Result H1DimDense(const GModule& m);

// Is there a subgroup of Gamma_k(n) meeting the kernel in K and mapping onto
// Sym(n)? Solves the coboundary equation in GF(2)^{C(n,k)} / K.
CoboundaryCertificate FullSubgroupExists(const SubmoduleSpec& K);
CoboundaryCertificate FullSubgroupExists(const SubmoduleSpec& K,
                                         const CocycleTable& cover);

}  // namespace fullcover

#endif  // FULLCOVER_COHOM_H_
