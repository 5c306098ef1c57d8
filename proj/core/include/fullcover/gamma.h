#ifndef FULLCOVER_GAMMA_H_
#define FULLCOVER_GAMMA_H_

// The cover group Gamma_k(n) = GF(2)^{C(n,k)} x Sym(n) acting on
// C_k = Z4 x [n]^k, with fibres Z4 over each k-subset.
//
// Kernel functions take values in {0, 2} ⊂ Z4 and are stored as bits
// (bit = value / 2). The order on {1..n} used by eps_2 is the natural one.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fullcover/gf2.h"
#include "fullcover/kcomb.h"

namespace fullcover {

// 0 if g preserves the order of the two points of w, else 1.
int Eps2(const Perm& g, SubsetMask w);
// Sum of Eps2 over the 2-subsets of w, reduced mod 4; |w| >= 2.
int EpsK(const Perm& g, SubsetMask w);

// Factor set of the product on Gamma_k: the function
//   hg(w) -> (eps_k(g,w) + eps_k(h,gw) - eps_k(hg,w)) / 2.
// Placing the value at hg(w) is what makes composition of the maps
// (a,w) -> (a + f(gw) + eps_k(g,w), gw) agree with the product below.
// Throws ExpectationViolation if any numerator is odd.
gf2::Vec Cocycle(const Perm& h, const Perm& g, const KSubsetIndexer& indexer);

// Values of a 2-cochain on all ordered pairs of Sym(n), indexed by
// SymmetricGroup element indices. Small instances are materialized up front;
// larger ones are evaluated on demand.
class CocycleTable {
 public:
  using Function = std::function<gf2::Vec(const Perm& h, const Perm& g)>;

  // The factor set of Gamma_k(n).
  static CocycleTable Cover(int k, int n);
  // An arbitrary cochain with values of length `len`.
  static CocycleTable FromFunction(int n, std::size_t len, Function fn);

  const SymmetricGroup& group() const { return *group_; }
  std::size_t value_size() const { return len_; }
  // k for Cover tables, -1 for custom ones.
  int k() const { return k_; }

  gf2::Vec at(std::size_t h, std::size_t g) const;

  // c(id, g) == c(g, id) == 0 for every g.
  bool IsNormalized() const;

 private:
  CocycleTable(std::shared_ptr<const SymmetricGroup> group, std::size_t len,
               int k, Function fn);

  std::shared_ptr<const SymmetricGroup> group_;
  std::size_t len_ = 0;
  int k_ = -1;
  Function fn_;
  std::size_t stride_ = 0;  // words per entry when materialized
  std::vector<std::uint64_t> values_;
};

struct GammaElement {
  int k = 0;
  int n = 0;
  gf2::Vec f;  // length C(n,k)
  Perm g;

  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

struct CoverPoint {
  int a = 0;  // residue mod 4
  SubsetMask w = 0;

  friend bool operator==(const CoverPoint&, const CoverPoint&) = default;
};

// A permutation group on the four points {0,1,2,3} of one fibre.
struct FibreGroup {
  std::vector<std::array<int, 4>> perms;  // sorted, closed under composition

  std::size_t order() const { return perms.size(); }
  // Every element is a ↦ a + t for some t.
  bool IsTranslations() const;
  // Transitive with trivial point stabilizers.
  bool IsRegular() const;
  // The translation amounts, sorted.
  std::vector<int> Translations() const;
  // "Z4", "Z2", "1", or "other".
  std::string Name() const;
};

class CoverGroup {
 public:
  // Requires 2 <= k <= n <= 62.
  CoverGroup(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  const KSubsetIndexer& indexer() const { return indexer_; }

  GammaElement Identity() const;
  GammaElement Make(gf2::Vec f, Perm g) const;
  GammaElement Random(std::mt19937_64& rng) const;

  gf2::Vec Cocycle(const Perm& h, const Perm& g) const {
    return fullcover::Cocycle(h, g, indexer_);
  }

  // (l, h)(f, g) = (l + h·f + c(h, g), hg).
  GammaElement Mult(const GammaElement& x, const GammaElement& y) const;
  // (f, g)^{-1} = (g^{-1}·f + c(g^{-1}, g), g^{-1}).
  GammaElement Inverse(const GammaElement& x) const;
  // (f, g) · (a, w) = (a + 2 f(gw) + eps_k(g, w), gw).
  CoverPoint Act(const GammaElement& x, const CoverPoint& p) const;

  std::vector<CoverPoint> Points() const;

  // Group induced on the fibre over w by its setwise stabilizer, and by the
  // kernel GF(2)^{C(n,k)} x 1. Enumerates Sym(n), so n <= 8.
  FibreGroup FibreGroupAt(SubsetMask w) const;
  FibreGroup BindingGroupAt(SubsetMask w) const;

 private:
  void Check(const GammaElement& x) const;

  int k_;
  int n_;
  KSubsetIndexer indexer_;
};

// Sign of g restricted to w; g must stabilize w.
int ChiW(const Perm& g, SubsetMask w);

// (f, g) -> (alpha_{k,l} f, g) from Gamma_k(n) to Gamma_l(n). Requires
// k <= l <= n and C(l-2, k-2) odd, which is what makes the map multiplicative.
class CoverLift {
 public:
  CoverLift(int k, int l, int n);

  int k() const { return k_; }
  int l() const { return l_; }
  const gf2::Mat& alpha() const { return alpha_; }

  GammaElement operator()(const GammaElement& x) const;

 private:
  int k_;
  int l_;
  int n_;
  gf2::Mat alpha_;
};

}  // namespace fullcover

#endif  // FULLCOVER_GAMMA_H_
