#include "fullcover/gamma.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fullcover/errors.h"
#include "fullcover/specht.h"

namespace fullcover {

namespace {

// Entries up to this many words are computed eagerly (n <= 6 always fits).
constexpr std::size_t kEagerWordLimit = std::size_t{1} << 22;

void RequireCoverSizes(int k, int n) {
  if (k < 2 || k > n || n > kMaxPoints) {
    throw std::invalid_argument("Gamma_k(n) needs 2 <= k <= n <= 62");
  }
}

using FibrePerm = std::array<int, 4>;

FibrePerm Translation(int t) {
  FibrePerm p{};
  for (int a = 0; a < 4; ++a) p[a] = (a + t) & 3;
  return p;
}

FibreGroup Close(std::set<FibrePerm> gens) {
  std::set<FibrePerm> group = {Translation(0)};
  std::vector<FibrePerm> frontier(group.begin(), group.end());
  while (!frontier.empty()) {
    std::vector<FibrePerm> next;
    for (const FibrePerm& x : frontier) {
      for (const FibrePerm& s : gens) {
        FibrePerm y{};
        for (int a = 0; a < 4; ++a) y[a] = s[x[a]];
        if (group.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return FibreGroup{{group.begin(), group.end()}};
}

}  // namespace

int Eps2(const Perm& g, SubsetMask w) {
  if (std::popcount(w) != 2) throw std::invalid_argument("Eps2: need a 2-subset");
  const int lo = std::countr_zero(w);
  const int hi = 63 - std::countl_zero(w);
  const auto& img = g.zero_based();
  return img[lo] < img[hi] ? 0 : 1;
}

int EpsK(const Perm& g, SubsetMask w) {
  if (std::popcount(w) < 2) throw std::invalid_argument("EpsK: need |w| >= 2");
  const auto& img = g.zero_based();
  int inversions = 0;
  for (SubsetMask a = w; a != 0; a &= a - 1) {
    const int i = std::countr_zero(a);
    for (SubsetMask b = a & (a - 1); b != 0; b &= b - 1) {
      if (img[i] > img[std::countr_zero(b)]) ++inversions;
    }
  }
  return inversions & 3;
}

gf2::Vec Cocycle(const Perm& h, const Perm& g, const KSubsetIndexer& indexer) {
  if (h.degree() != indexer.n() || g.degree() != indexer.n()) {
    throw std::invalid_argument("Cocycle: degree mismatch");
  }
  const Perm hg = h * g;
  gf2::Vec out(indexer.size());
  for (SubsetMask w : indexer.masks()) {
    const SubsetMask gw = g.Apply(w);
    const int value = (EpsK(g, w) + EpsK(h, gw) - EpsK(hg, w) + 8) & 3;
    if (value & 1) {
      throw ExpectationViolation("odd cocycle entry for h=" + h.ToString() +
                                 ", g=" + g.ToString());
    }
    if (value == 2) out.set(indexer.RankMask(hg.Apply(w)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CocycleTable

CocycleTable::CocycleTable(std::shared_ptr<const SymmetricGroup> group,
                           std::size_t len, int k, Function fn)
    : group_(std::move(group)), len_(len), k_(k), fn_(std::move(fn)) {
  stride_ = (len_ + 63) / 64;
  const std::size_t order = group_->order();
  if (stride_ == 0 || order * order * stride_ > kEagerWordLimit) return;
  values_.assign(order * order * stride_, 0);
  for (std::size_t h = 0; h < order; ++h) {
    for (std::size_t g = 0; g < order; ++g) {
      const gf2::Vec v = fn_(group_->element(h), group_->element(g));
      if (v.size() != len_) {
        throw std::invalid_argument("CocycleTable: value has wrong length");
      }
      std::copy(v.words().begin(), v.words().end(),
                values_.begin() + (h * order + g) * stride_);
    }
  }
}

CocycleTable CocycleTable::Cover(int k, int n) {
  RequireCoverSizes(k, n);
  auto indexer = std::make_shared<const KSubsetIndexer>(n, k);
  return CocycleTable(
      std::make_shared<const SymmetricGroup>(n), indexer->size(), k,
      [indexer](const Perm& h, const Perm& g) {
        return Cocycle(h, g, *indexer);
      });
}

CocycleTable CocycleTable::FromFunction(int n, std::size_t len, Function fn) {
  return CocycleTable(std::make_shared<const SymmetricGroup>(n), len, -1,
                      std::move(fn));
}

gf2::Vec CocycleTable::at(std::size_t h, std::size_t g) const {
  const std::size_t order = group_->order();
  if (h >= order || g >= order) {
    throw std::out_of_range("CocycleTable::at: index out of range");
  }
  if (values_.empty()) return fn_(group_->element(h), group_->element(g));
  gf2::Vec v(len_);
  const auto src = values_.begin() + (h * order + g) * stride_;
  std::copy(src, src + stride_, v.words().begin());
  return v;
}

bool CocycleTable::IsNormalized() const {
  const std::size_t id = group_->identity_index();
  for (std::size_t g = 0; g < group_->order(); ++g) {
    if (!at(id, g).is_zero() || !at(g, id).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// FibreGroup

bool FibreGroup::IsTranslations() const {
  return std::all_of(perms.begin(), perms.end(), [](const FibrePerm& p) {
    return p == Translation(p[0]);
  });
}

bool FibreGroup::IsRegular() const {
  if (perms.size() != 4) return false;
  std::set<int> images;
  for (const FibrePerm& p : perms) images.insert(p[0]);
  return images.size() == 4;
}

std::vector<int> FibreGroup::Translations() const {
  std::vector<int> out;
  for (const FibrePerm& p : perms) {
    if (p == Translation(p[0])) out.push_back(p[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FibreGroup::Name() const {
  if (!IsTranslations()) return "other";
  switch (perms.size()) {
    case 1: return "1";
    case 2: return "Z2";
    case 4: return "Z4";
    default: return "other";
  }
}

// ---------------------------------------------------------------------------
// CoverGroup

CoverGroup::CoverGroup(int k, int n)
    : k_((RequireCoverSizes(k, n), k)), n_(n), indexer_(n, k) {}

void CoverGroup::Check(const GammaElement& x) const {
  if (x.k != k_ || x.n != n_) {
    throw std::invalid_argument("GammaElement belongs to a different Gamma_k(n)");
  }
  if (x.f.size() != indexer_.size() || x.g.degree() != n_) {
    throw std::invalid_argument("GammaElement has malformed components");
  }
}

GammaElement CoverGroup::Identity() const {
  return GammaElement{k_, n_, gf2::Vec(indexer_.size()), Perm::Identity(n_)};
}

GammaElement CoverGroup::Make(gf2::Vec f, Perm g) const {
  GammaElement x{k_, n_, std::move(f), std::move(g)};
  Check(x);
  return x;
}

GammaElement CoverGroup::Random(std::mt19937_64& rng) const {
  gf2::Vec f(indexer_.size());
  for (std::size_t i = 0; i < f.size(); ++i) f.set(i, (rng() & 1) != 0);
  std::vector<int> images(n_);
  std::iota(images.begin(), images.end(), 1);
  // Fisher-Yates driven directly by the engine keeps sequences identical
  // across standard library implementations.
  for (int i = n_ - 1; i > 0; --i) {
    std::swap(images[i], images[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  return GammaElement{k_, n_, std::move(f), Perm::FromImages(images)};
}

GammaElement CoverGroup::Mult(const GammaElement& x,
                              const GammaElement& y) const {
  Check(x);
  Check(y);
  gf2::Vec f = x.f ^ Twist(x.g, y.f, indexer_);
  f ^= Cocycle(x.g, y.g);
  return GammaElement{k_, n_, std::move(f), x.g * y.g};
}

GammaElement CoverGroup::Inverse(const GammaElement& x) const {
  Check(x);
  const Perm gi = x.g.Inverse();
  gf2::Vec f = Twist(gi, x.f, indexer_) ^ Cocycle(gi, x.g);
  return GammaElement{k_, n_, std::move(f), gi};
}

CoverPoint CoverGroup::Act(const GammaElement& x, const CoverPoint& p) const {
  Check(x);
  if (std::popcount(p.w) != k_ || p.a < 0 || p.a > 3) {
    throw std::invalid_argument("CoverPoint is not a point of C_k");
  }
  const SubsetMask gw = x.g.Apply(p.w);
  const int lift = x.f.get(indexer_.RankMask(gw)) ? 2 : 0;
  return CoverPoint{(p.a + lift + EpsK(x.g, p.w)) & 3, gw};
}

std::vector<CoverPoint> CoverGroup::Points() const {
  std::vector<CoverPoint> out;
  out.reserve(4 * indexer_.size());
  for (SubsetMask w : indexer_.masks()) {
    for (int a = 0; a < 4; ++a) out.push_back(CoverPoint{a, w});
  }
  return out;
}

FibreGroup CoverGroup::FibreGroupAt(SubsetMask w) const {
  if (n_ > 8) throw SizeBoundError("FibreGroupAt enumerates Sym(n); n <= 8");
  const std::size_t r = indexer_.RankMask(w);
  const SymmetricGroup group(n_);
  std::set<FibrePerm> gens;
  for (const Perm& g : group.elements()) {
    if (g.Apply(w) != w) continue;
    for (int bit = 0; bit < 2; ++bit) {
      gf2::Vec f(indexer_.size());
      f.set(r, bit == 1);
      const GammaElement x{k_, n_, std::move(f), g};
      FibrePerm p{};
      for (int a = 0; a < 4; ++a) p[a] = Act(x, CoverPoint{a, w}).a;
      gens.insert(p);
    }
  }
  return Close(std::move(gens));
}

FibreGroup CoverGroup::BindingGroupAt(SubsetMask w) const {
  const std::size_t r = indexer_.RankMask(w);
  std::set<FibrePerm> gens;
  // Only the coordinate at w moves the fibre over w.
  for (int bit = 0; bit < 2; ++bit) {
    gf2::Vec f(indexer_.size());
    f.set(r, bit == 1);
    const GammaElement x{k_, n_, std::move(f), Perm::Identity(n_)};
    FibrePerm p{};
    for (int a = 0; a < 4; ++a) p[a] = Act(x, CoverPoint{a, w}).a;
    gens.insert(p);
  }
  return Close(std::move(gens));
}

int ChiW(const Perm& g, SubsetMask w) { return RestrictionSign(g, w); }

// ---------------------------------------------------------------------------
// CoverLift

CoverLift::CoverLift(int k, int l, int n) : k_(k), l_(l), n_(n) {
  RequireCoverSizes(k, n);
  if (l < k || l > n) throw std::invalid_argument("CoverLift: need k <= l <= n");
  if (BinomParity(l - 2, k - 2) != 1) {
    throw std::invalid_argument(
        "CoverLift: C(l-2, k-2) = C(" + std::to_string(l - 2) + ", " +
        std::to_string(k - 2) +
        ") is even, so f -> alpha_{k,l} f does not carry the factor set of "
        "Gamma_k onto that of Gamma_l");
  }
  alpha_ = AlphaMatrix(k, l, n).mat;
}

GammaElement CoverLift::operator()(const GammaElement& x) const {
  if (x.k != k_ || x.n != n_ || x.f.size() != alpha_.cols()) {
    throw std::invalid_argument("CoverLift: element of the wrong group");
  }
  return GammaElement{l_, n_, alpha_.Apply(x.f), x.g};
}

}  // namespace fullcover
