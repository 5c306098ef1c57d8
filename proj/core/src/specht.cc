#include "fullcover/specht.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fullcover/errors.h"

namespace fullcover {

namespace {

void RequireSizes(int j, int k, int n, const char* what) {
  if (j < 0 || j > k || k > n || n > kMaxPoints) {
    throw std::invalid_argument(std::string(what) +
                                ": need 0 <= j <= k <= n <= 62");
  }
}

// Calls visit(mask) for every size-j subset of the points of w.
template <typename Visit>
void ForEachSubsetOf(SubsetMask w, int j, Visit&& visit) {
  const Subset points = FromMask(w);
  const int m = static_cast<int>(points.size());
  if (j > m) return;
  std::vector<int> idx(j);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    SubsetMask v = 0;
    for (int i : idx) v |= SubsetMask{1} << (points[i] - 1);
    visit(v);
    int pos = j - 1;
    while (pos >= 0 && idx[pos] == m - j + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int q = pos + 1; q < j; ++q) idx[q] = idx[q - 1] + 1;
  }
}

std::vector<int> NormalizeJ(std::vector<int> J, int k) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  for (int j : J) {
    if (j < 0 || j > k) {
      throw std::invalid_argument("submodule index j=" + std::to_string(j) +
                                  " outside [0, k]");
    }
  }
  return J;
}

}  // namespace

AlphaMap AlphaMatrix(int j, int k, int n) {
  RequireSizes(j, k, n, "AlphaMatrix");
  const KSubsetIndexer rows(n, k);
  const KSubsetIndexer cols(n, j);
  AlphaMap out{j, k, n, gf2::Mat(rows.size(), cols.size())};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const SubsetMask w = rows.UnrankMask(r);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if ((cols.UnrankMask(c) & ~w) == 0) out.mat.set(r, c);
    }
  }
  return out;
}

gf2::Mat BetaMatrix(int k, int j, int n) {
  RequireSizes(j, k, n, "BetaMatrix");
  const KSubsetIndexer source(n, k);
  const KSubsetIndexer target(n, j);
  gf2::Mat out(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    ForEachSubsetOf(source.UnrankMask(c), j, [&](SubsetMask v) {
      out.set(target.RankMask(v), c);
    });
  }
  return out;
}

gf2::Subspace SpechtKernel(int k, int n) {
  RequireSizes(0, k, n, "SpechtKernel");
  const std::size_t dim = Binomial(n, k);
  gf2::Subspace result = gf2::Subspace::Full(dim);
  for (int i = 0; i < k; ++i) {
    result = gf2::Intersect(result, gf2::KernelBasis(BetaMatrix(k, i, n)));
  }
  return result;
}

SubmoduleSpec StandardSubmodule(std::vector<int> J, int k, int n) {
  RequireSizes(0, k, n, "StandardSubmodule");
  SubmoduleSpec spec{k, n, NormalizeJ(std::move(J), k),
                     gf2::Subspace::Zero(Binomial(n, k))};
  for (int j : spec.J) {
    spec.materialized =
        gf2::Sum(spec.materialized, gf2::ImageBasis(AlphaMatrix(j, k, n).mat));
  }
  return spec;
}

std::vector<int> MIndices(int k) {
  if (k < 2) throw std::invalid_argument("MIndices: need k >= 2");
  std::vector<int> J;
  for (int j = 0; j <= k; ++j) {
    if (BinomParity(k - 2, j - 2) == 0) J.push_back(j);
  }
  return J;
}

SubmoduleSpec MSubmodule(int k, int n) {
  return StandardSubmodule(MIndices(k), k, n);
}

bool HasS2Factor(const SubmoduleSpec& spec) {
  if (spec.k < 2) return false;
  const bool factor = std::any_of(spec.J.begin(), spec.J.end(), [&](int j) {
    return BinomParity(spec.k - 2, j - 2) == 1;
  });
  if (factor) {
    const gf2::Mat a2 = AlphaMatrix(2, spec.k, spec.n).mat;
    for (std::size_t c = 0; c < a2.cols(); ++c) {
      if (!spec.materialized.Contains(a2.column(c))) {
        throw ExpectationViolation(
            "submodule with an S2 composition factor does not contain "
            "im alpha_{2,k}");
      }
    }
  }
  return factor;
}

CompositionCheck CompositionIdentityCheck(int j, int k, int l, int n) {
  RequireSizes(j, k, n, "CompositionIdentityCheck");
  RequireSizes(k, l, n, "CompositionIdentityCheck");
  CompositionCheck out;
  out.parity = BinomParity(l - j, k - j);
  const gf2::Mat product = AlphaMatrix(k, l, n).mat * AlphaMatrix(j, k, n).mat;
  if (out.parity == 1) {
    out.holds = product == AlphaMatrix(j, l, n).mat;
  } else {
    out.holds = product.is_zero();
  }
  return out;
}

gf2::Mat PermutationAction(const Perm& g, const KSubsetIndexer& indexer) {
  gf2::Mat p(indexer.size(), indexer.size());
  for (std::size_t c = 0; c < indexer.size(); ++c) {
    p.set(indexer.RankMask(g.Apply(indexer.UnrankMask(c))), c);
  }
  return p;
}

gf2::Vec Twist(const Perm& g, const gf2::Vec& f, const KSubsetIndexer& indexer) {
  if (f.size() != indexer.size()) {
    throw std::invalid_argument("Twist: vector length does not match C(n,k)");
  }
  gf2::Vec out(f.size());
  for (std::size_t c : f.support()) {
    out.set(indexer.RankMask(g.Apply(indexer.UnrankMask(c))));
  }
  return out;
}

bool IsInvariant(const gf2::Subspace& s, const KSubsetIndexer& indexer) {
  for (const Perm& g : StandardGenerators(indexer.n())) {
    for (const gf2::Vec& b : s.basis()) {
      if (!s.Contains(Twist(g, b, indexer))) return false;
    }
  }
  return true;
}

Lattice LatticeReport(int k, int n, std::size_t size_bound) {
  RequireSizes(0, k, n, "LatticeReport");
  const std::uint64_t dim = Binomial(n, k);
  if (dim > size_bound) {
    throw SizeBoundError("C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") = " + std::to_string(dim) +
                         " exceeds the size bound " +
                         std::to_string(size_bound));
  }
  if (k + 1 >= 31) throw SizeBoundError("LatticeReport: k too large");

  const KSubsetIndexer indexer(n, k);
  std::vector<gf2::Subspace> images;
  for (int j = 0; j <= k; ++j) {
    images.push_back(gf2::ImageBasis(AlphaMatrix(j, k, n).mat));
  }

  Lattice lattice{k, n, {}, {}, {}};
  for (std::uint32_t mask = 0; mask < (1u << (k + 1)); ++mask) {
    std::vector<int> J;
    gf2::Subspace space = gf2::Subspace::Zero(dim);
    for (int j = 0; j <= k; ++j) {
      if (mask >> j & 1u) {
        J.push_back(j);
        space = gf2::Sum(space, images[j]);
      }
    }
    const bool s2 = HasS2Factor(SubmoduleSpec{k, n, J, space});
    auto it = std::find_if(lattice.nodes.begin(), lattice.nodes.end(),
                           [&](const LatticeNode& node) {
                             return node.space == space;
                           });
    if (it != lattice.nodes.end()) {
      it->Js.push_back(std::move(J));
      it->s2_factor = it->s2_factor || s2;
      continue;
    }
    LatticeNode node;
    node.Js.push_back(std::move(J));
    node.dim = space.dim();
    node.s2_factor = s2;
    node.invariant = IsInvariant(space, indexer);
    node.space = std::move(space);
    lattice.nodes.push_back(std::move(node));
  }
  // Nodes were created in mask order, so a stable sort by dimension keeps
  // the first J as the tie-breaker.
  std::stable_sort(lattice.nodes.begin(), lattice.nodes.end(),
                   [](const LatticeNode& a, const LatticeNode& b) {
                     return a.dim < b.dim;
                   });

  const std::size_t count = lattice.nodes.size();
  lattice.contains.assign(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      lattice.contains[a][b] =
          lattice.nodes[a].space.IsSubspaceOf(lattice.nodes[b].space);
    }
  }
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b || !lattice.contains[a][b]) continue;
      bool covered = true;
      for (std::size_t m = 0; m < count && covered; ++m) {
        if (m == a || m == b) continue;
        if (lattice.contains[a][m] && lattice.contains[m][b]) covered = false;
      }
      if (covered) lattice.hasse.emplace_back(a, b);
    }
  }
  return lattice;
}

}  // namespace fullcover
