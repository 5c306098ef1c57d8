#ifndef FULLCOVER_KCOMB_H_
#define FULLCOVER_KCOMB_H_

// k-subsets of {1..n}, permutations of {1..n}, and binomial parity.
//
// Points are 1-based at the API boundary. Internally a subset of {1..n} is a
// bit mask with bit (i-1) standing for point i, which keeps the action of a
// permutation on subsets cheap.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fullcover {

using Subset = std::vector<int>;   // sorted, 1-based
using SubsetMask = std::uint64_t;  // bit i-1 <=> point i

inline constexpr int kMaxPoints = 62;

// Exact binomial coefficient; 0 when b < 0 or b > a. Throws on overflow.
std::uint64_t Binomial(std::int64_t a, std::int64_t b);

// 1 iff C(a, b) is odd (binary digits of b dominated by those of a); 0 for
// b < 0 or b > a.
int BinomParity(std::int64_t a, std::int64_t b);

SubsetMask ToMask(std::span<const int> w);
Subset FromMask(SubsetMask m);

// Colex bijection between sorted k-subsets of {1..n} and [0, C(n,k)):
// w < w' iff the largest element of the symmetric difference lies in w'.
// Ranks do not depend on n, so fixtures for nested n share indices.
class KSubsetIndexer {
 public:
  KSubsetIndexer(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return masks_.size(); }

  std::size_t Rank(std::span<const int> w) const;
  std::size_t RankMask(SubsetMask m) const;
  Subset Unrank(std::size_t r) const;
  SubsetMask UnrankMask(std::size_t r) const { return masks_.at(r); }
  const std::vector<SubsetMask>& masks() const { return masks_; }

 private:
  int n_;
  int k_;
  std::vector<SubsetMask> masks_;
  // binom_[p][i] = C(p, i) for p < n, i <= k.
  std::vector<std::vector<std::size_t>> binom_;
};

class Perm {
 public:
  Perm() = default;
  static Perm Identity(int n);
  // images[i] = g(i + 1), 1-based values.
  static Perm FromImages(std::span<const int> images);
  // Cycle notation on {1..n}, e.g. "(1 2)(3 4 5)"; "id" is the identity.
  static Perm Parse(std::string_view cycles, int n);
  // The cycle mapping points[i] to points[i + 1] (cyclically) on {1..n}.
  static Perm Cycle(int n, std::span<const int> points);

  int degree() const { return static_cast<int>(images_.size()); }
  // Image of the 1-based point i.
  int operator()(int i) const { return images_[i - 1] + 1; }
  const std::vector<std::uint8_t>& zero_based() const { return images_; }

  bool is_identity() const;
  Perm Inverse() const;
  // Parity of the permutation: 0 even, 1 odd.
  int Sign() const;

  SubsetMask Apply(SubsetMask w) const;

  // (g * h)(i) = g(h(i)).
  friend Perm operator*(const Perm& g, const Perm& h);
  friend bool operator==(const Perm& a, const Perm& b) = default;

  std::string ToString() const;

 private:
  std::vector<std::uint8_t> images_;
};

// g(w), re-sorted.
Subset Apply(const Perm& g, std::span<const int> w);

// Parity of the permutation g induces on w; g must stabilize w setwise.
int RestrictionSign(const Perm& g, std::span<const int> w);
int RestrictionSign(const Perm& g, SubsetMask w);

// The transposition (1 2) and the long cycle (1 2 ... n); a single generator
// when n == 2 and none when n < 2.
std::vector<Perm> StandardGenerators(int n);

// All n! elements of Sym(n) in lexicographic order of their image arrays.
// Index lookup goes through the Lehmer code, so no hash table is needed.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n);

  int degree() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }

  std::size_t IndexOf(const Perm& g) const;
  std::size_t Multiply(std::size_t a, std::size_t b) const {
    return IndexOf(elements_[a] * elements_[b]);
  }
  std::size_t identity_index() const { return 0; }

 private:
  int n_;
  std::vector<Perm> elements_;
  std::vector<std::size_t> factorial_;
};

}  // namespace fullcover

#endif  // FULLCOVER_KCOMB_H_
