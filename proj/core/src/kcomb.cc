#include "fullcover/kcomb.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fullcover {

std::uint64_t Binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("Binomial: negative upper index");
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    // result * (a - b + i) is divisible by i; cancel gcd(result, i) first so
    // the remaining factors divide exactly.
    const auto num = static_cast<std::uint64_t>(a - b + i);
    const auto den = static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(result, den);
    if (__builtin_mul_overflow(result / g, num / (den / g), &result)) {
      throw std::overflow_error("Binomial overflow");
    }
  }
  return result;
}

int BinomParity(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("BinomParity: negative upper index");
  if (b < 0 || b > a) return 0;
  return (b & ~a) == 0 ? 1 : 0;
}

SubsetMask ToMask(std::span<const int> w) {
  SubsetMask m = 0;
  for (int x : w) {
    if (x < 1 || x > kMaxPoints) {
      throw std::invalid_argument("subset element out of range");
    }
    const SubsetMask bit = SubsetMask{1} << (x - 1);
    if (m & bit) throw std::invalid_argument("subset has repeated element");
    m |= bit;
  }
  return m;
}

Subset FromMask(SubsetMask m) {
  Subset w;
  while (m != 0) {
    w.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return w;
}

// ---------------------------------------------------------------------------
// KSubsetIndexer

KSubsetIndexer::KSubsetIndexer(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxPoints || k < 0 || k > n) {
    throw std::invalid_argument("KSubsetIndexer: need 0 <= k <= n <= 62");
  }
  const std::uint64_t count = Binomial(n, k);
  masks_.reserve(count);
  if (k == 0) {
    masks_.push_back(0);
  } else {
    // Gosper's hack enumerates k-bit masks in increasing numeric order,
    // which is exactly colex order.
    SubsetMask m = (SubsetMask{1} << k) - 1;
    const SubsetMask limit = SubsetMask{1} << n;
    while (m < limit) {
      masks_.push_back(m);
      const SubsetMask c = m & (~m + 1);
      const SubsetMask r = m + c;
      m = (((r ^ m) >> 2) / c) | r;
    }
  }
  binom_.assign(n, std::vector<std::size_t>(k + 1, 0));
  for (int p = 0; p < n; ++p) {
    for (int i = 0; i <= k; ++i) binom_[p][i] = Binomial(p, i);
  }
}

std::size_t KSubsetIndexer::RankMask(SubsetMask m) const {
  const bool in_range = n_ == 64 || (m >> n_) == 0;
  if (!in_range || std::popcount(m) != k_) {
    throw std::invalid_argument("KSubsetIndexer: not a " + std::to_string(k_) +
                                "-subset of {1.." + std::to_string(n_) + "}");
  }
  // Colex rank: sum over the i-th smallest element p (0-based) of C(p, i).
  std::size_t rank = 0;
  for (int i = 1; m != 0; ++i) {
    rank += binom_[std::countr_zero(m)][i];
    m &= m - 1;
  }
  return rank;
}

std::size_t KSubsetIndexer::Rank(std::span<const int> w) const {
  if (static_cast<int>(w.size()) != k_) {
    throw std::invalid_argument("KSubsetIndexer::Rank: wrong subset size");
  }
  return RankMask(ToMask(w));
}

Subset KSubsetIndexer::Unrank(std::size_t r) const {
  if (r >= masks_.size()) {
    throw std::out_of_range("KSubsetIndexer::Unrank: rank out of range");
  }
  return FromMask(masks_[r]);
}

// ---------------------------------------------------------------------------
// Perm

Perm Perm::Identity(int n) {
  if (n < 0 || n > kMaxPoints) throw std::invalid_argument("Perm: bad degree");
  Perm p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), 0);
  return p;
}

Perm Perm::FromImages(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxPoints) throw std::invalid_argument("Perm: bad degree");
  Perm p;
  p.images_.resize(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int x = images[i];
    if (x < 1 || x > n || seen[x - 1]) {
      throw std::invalid_argument("Perm::FromImages: not a bijection");
    }
    seen[x - 1] = true;
    p.images_[i] = static_cast<std::uint8_t>(x - 1);
  }
  return p;
}

Perm Perm::Cycle(int n, std::span<const int> points) {
  Perm p = Identity(n);
  std::vector<bool> seen(n, false);
  for (int x : points) {
    if (x < 1 || x > n || seen[x - 1]) {
      throw std::invalid_argument("Perm::Cycle: bad cycle");
    }
    seen[x - 1] = true;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const int from = points[i];
    const int to = points[(i + 1) % points.size()];
    p.images_[from - 1] = static_cast<std::uint8_t>(to - 1);
  }
  return p;
}

Perm Perm::Parse(std::string_view text, int n) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  Perm result = Identity(n);
  if (trimmed == "id" || trimmed == "()") return result;

  std::size_t pos = 0;
  while (pos < trimmed.size()) {
    const char c = trimmed[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') {
      throw std::invalid_argument("Perm::Parse: expected '(' in \"" +
                                  std::string(text) + "\"");
    }
    const std::size_t close = trimmed.find(')', pos);
    if (close == std::string_view::npos) {
      throw std::invalid_argument("Perm::Parse: unbalanced parentheses");
    }
    std::vector<int> points;
    std::size_t i = pos + 1;
    while (i < close) {
      const char d = trimmed[i];
      if (std::isspace(static_cast<unsigned char>(d)) || d == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(d))) {
        throw std::invalid_argument("Perm::Parse: unexpected character");
      }
      int value = 0;
      while (i < close && std::isdigit(static_cast<unsigned char>(trimmed[i]))) {
        value = value * 10 + (trimmed[i] - '0');
        if (value > kMaxPoints) {
          throw std::invalid_argument("Perm::Parse: point out of range");
        }
        ++i;
      }
      points.push_back(value);
    }
    // Cycles compose right to left, as in (1 2)(2 3).
    result = result * Cycle(n, points);
    pos = close + 1;
  }
  return result;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::Inverse() const {
  Perm inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return inv;
}

int Perm::Sign() const {
  std::vector<bool> seen(images_.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    parity ^= static_cast<int>((len + 1) & 1);
  }
  return parity;
}

SubsetMask Perm::Apply(SubsetMask w) const {
  SubsetMask out = 0;
  while (w != 0) {
    const int i = std::countr_zero(w);
    out |= SubsetMask{1} << images_[i];
    w &= w - 1;
  }
  return out;
}

Perm operator*(const Perm& g, const Perm& h) {
  if (g.images_.size() != h.images_.size()) {
    throw std::invalid_argument("Perm: degree mismatch");
  }
  Perm out;
  out.images_.resize(h.images_.size());
  for (std::size_t i = 0; i < h.images_.size(); ++i) {
    out.images_[i] = g.images_[h.images_[i]];
  }
  return out;
}

std::string Perm::ToString() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (out.back() != '(') out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

// ---------------------------------------------------------------------------

Subset Apply(const Perm& g, std::span<const int> w) {
  Subset out;
  out.reserve(w.size());
  for (int x : w) out.push_back(g(x));
  std::sort(out.begin(), out.end());
  return out;
}

int RestrictionSign(const Perm& g, SubsetMask w) {
  if (g.Apply(w) != w) {
    throw std::invalid_argument(
        "RestrictionSign: permutation does not stabilize the subset");
  }
  // Parity of the induced permutation = parity of its inversion count.
  const Subset points = FromMask(w);
  int inversions = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (g(points[i]) > g(points[j])) ++inversions;
    }
  }
  return inversions & 1;
}

int RestrictionSign(const Perm& g, std::span<const int> w) {
  return RestrictionSign(g, ToMask(w));
}

std::vector<Perm> StandardGenerators(int n) {
  std::vector<Perm> gens;
  if (n < 2) return gens;
  const int swap[] = {1, 2};
  gens.push_back(Perm::Cycle(n, swap));
  if (n > 2) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    gens.push_back(Perm::Cycle(n, all));
  }
  return gens;
}

// ---------------------------------------------------------------------------
// SymmetricGroup

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 0 || n > 10) {
    throw std::invalid_argument("SymmetricGroup: degree must be in [0, 10]");
  }
  factorial_.assign(n + 1, 1);
  for (int i = 1; i <= n; ++i) factorial_[i] = factorial_[i - 1] * i;

  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  elements_.reserve(factorial_[n]);
  do {
    elements_.push_back(Perm::FromImages(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

std::size_t SymmetricGroup::IndexOf(const Perm& g) const {
  if (g.degree() != n_) {
    throw std::invalid_argument("SymmetricGroup::IndexOf: degree mismatch");
  }
  const auto& img = g.zero_based();
  std::size_t index = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n_; ++i) {
    const std::uint32_t below = used & ((1u << img[i]) - 1);
    const auto smaller_unused = img[i] - std::popcount(below);
    index += static_cast<std::size_t>(smaller_unused) * factorial_[n_ - 1 - i];
    used |= 1u << img[i];
  }
  return index;
}

}  // namespace fullcover
