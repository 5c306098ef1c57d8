#include "fullcover/classify.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "fullcover/errors.h"
#include "fullcover/gamma.h"

namespace fullcover {

namespace {

void RequireWithin(std::uint64_t size, std::size_t bound, const std::string& what) {
  if (size > bound) {
    throw SizeBoundError(what + " = " + std::to_string(size) +
                         " exceeds the size bound " + std::to_string(bound));
  }
}

}  // namespace

bool VerifyEll(int k, int ell) {
  if (ell < k) return false;
  for (int j = 0; j <= k; ++j) {
    if (BinomParity(k - 2, j - 2) == 0 && BinomParity(ell - j, k - j) != 0) {
      return false;
    }
  }
  return BinomParity(ell - 2, k - 2) == 1;
}

EllCertificate FindEll(int k) {
  if (k < 3) throw std::invalid_argument("FindEll: need k >= 3");
  const unsigned a = static_cast<unsigned>(k - 2);
  const int width = std::bit_width(a);
  const unsigned low = (1u << width) - 1;
  const unsigned e = (1u << width) | (~a & low);

  EllCertificate cert;
  cert.k = k;
  cert.ell = k + static_cast<int>(e);
  for (int j = 0; j <= k; ++j) {
    cert.checks_i.push_back(EllCheck{j, BinomParity(k - 2, j - 2),
                                     BinomParity(cert.ell - j, k - j)});
  }
  cert.check_ii = BinomParity(cert.ell - 2, k - 2);
  const bool cond_i =
      std::all_of(cert.checks_i.begin(), cert.checks_i.end(),
                  [](const EllCheck& c) { return c.parity_k != 0 || c.parity_l == 0; });
  cert.verified = cond_i && cert.check_ii == 1 && VerifyEll(k, cert.ell);
  return cert;
}

KernelCheckResult KernelCheck(int k, int ell, int n, std::size_t size_bound) {
  if (k < 2 || ell < k || ell > n || n > kMaxPoints) {
    throw std::invalid_argument("KernelCheck: need 2 <= k <= l <= n");
  }
  RequireWithin(Binomial(n, k), size_bound, "C(n,k)");
  RequireWithin(Binomial(n, ell), size_bound, "C(n,l)");
  const gf2::Subspace kernel = gf2::KernelBasis(AlphaMatrix(k, ell, n).mat);
  const SubmoduleSpec m = MSubmodule(k, n);
  return KernelCheckResult{kernel == m.materialized, kernel.dim(),
                           m.materialized.dim()};
}

bool ClassifyReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.pass; });
}

ClassifyReport Classify(int k, int n, const ClassifyOptions& options) {
  if (k < 2 || k > n) throw std::invalid_argument("Classify: need 2 <= k <= n");
  if (n > 7) throw SizeBoundError("Classify enumerates Sym(n); n <= 7");
  const Lattice lattice = LatticeReport(k, n, options.size_bound);
  const CocycleTable cover = CocycleTable::Cover(k, n);
  const gf2::Subspace alpha2 = gf2::ImageBasis(AlphaMatrix(2, k, n).mat);
  const std::size_t ambient = Binomial(n, k);

  ClassifyReport report;
  report.k = k;
  report.n = n;
  if (k >= 3) {
    report.ell = FindEll(k).ell;
    report.below_regime = n < *report.ell;
  }
  report.hasse = lattice.hasse;

  for (const LatticeNode& node : lattice.nodes) {
    ClassifyRow row;
    row.J = node.canonical_J();
    row.Js = node.Js;
    row.dim = node.dim;
    row.s2_factor = node.s2_factor;
    row.contains_alpha2 = alpha2.IsSubspaceOf(node.space);
    const GModule module = GModule::Quotient(node.space, k, n);
    const CoboundaryCertificate cert = Is2Coboundary(cover, module);
    row.exists = cert.sat;
    row.rank_gap = cert.rank_gap;
    if (cover.group().order() * module.dim() <= options.dense_limit) {
      row.dense_agrees = Is2CoboundaryDense(cover, module).sat == cert.sat;
    }
    if (options.compute_h1) row.h1 = H1Dim(module).h1_dim();
    report.rows.push_back(std::move(row));
  }

  const std::size_t count = report.rows.size();
  for (std::size_t a = 0; a < count; ++a) {
    if (!report.rows[a].exists) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < count && minimal; ++b) {
      if (b != a && report.rows[b].exists && lattice.contains[b][a]) minimal = false;
    }
    if (minimal) report.minimal_sat.push_back(a);
  }

  const bool a_pass = std::all_of(
      report.rows.begin(), report.rows.end(),
      [](const ClassifyRow& r) { return r.exists == r.contains_alpha2; });
  report.verdicts.push_back(
      {"a", "a full subgroup with kernel K exists iff K contains im alpha_{2,k}",
       a_pass});

  const bool b_pass = report.minimal_sat.size() == 1 &&
                      lattice.nodes[report.minimal_sat.front()].space == alpha2;
  report.verdicts.push_back(
      {"b", "the unique minimal kernel of a full subgroup is im alpha_{2,k}",
       b_pass});

  if (k == 2) {
    const bool c_pass = std::all_of(
        report.rows.begin(), report.rows.end(), [&](const ClassifyRow& r) {
          return r.exists == (r.dim == ambient);
        });
    report.verdicts.push_back(
        {"c", "for k = 2 only K = K0 admits a full subgroup", c_pass});
  }
  return report;
}

CoboundaryCertificate SplitCheck(int k, int n) {
  return FullSubgroupExists(StandardSubmodule({}, k, n));
}

SubgroupCheck BuildFullSubgroup(const SubmoduleSpec& K,
                                const CoboundaryCertificate& cert) {
  if (!cert.sat) throw std::invalid_argument("BuildFullSubgroup: UNSAT certificate");
  const CoverGroup gamma(K.k, K.n);
  const SymmetricGroup group(K.n);
  const std::size_t kdim = K.materialized.dim();
  if (gamma.indexer().size() > 64 || kdim + std::bit_width(group.order()) > 20) {
    throw SizeBoundError("BuildFullSubgroup: |K| * n! exceeds 2^20");
  }
  if (cert.section.size() != group.order()) {
    throw std::invalid_argument("BuildFullSubgroup: certificate has no section");
  }
  const GModule module = GModule::Quotient(K.materialized, K.k, K.n);
  std::vector<gf2::Vec> lift;
  for (const gf2::Vec& u : cert.section) {
    lift.push_back(module.origin().section.Apply(u));
  }

  std::vector<GammaElement> gens;
  for (const Perm& s : StandardGenerators(K.n)) {
    gens.push_back(gamma.Make(lift[group.IndexOf(s)], s));
  }
  for (const gf2::Vec& b : K.materialized.basis()) {
    gens.push_back(gamma.Make(b, Perm::Identity(K.n)));
  }

  auto key = [&](const GammaElement& x) {
    return std::pair<std::uint64_t, std::size_t>(
        x.f.size() == 0 ? 0 : x.f.words()[0], group.IndexOf(x.g));
  };
  std::set<std::pair<std::uint64_t, std::size_t>> seen;
  std::vector<GammaElement> queue = {gamma.Identity()};
  seen.insert(key(queue.front()));
  SubgroupCheck out;
  out.members_ok = true;
  out.kernel_size = std::size_t{1} << kdim;
  out.expected_order = out.kernel_size * group.order();
  // A wrong witness can generate far more than |K| * n! elements.
  const std::size_t cap = 2 * out.expected_order;
  for (std::size_t head = 0; head < queue.size() && queue.size() <= cap; ++head) {
    const GammaElement x = queue[head];
    const std::size_t gi = group.IndexOf(x.g);
    if (!K.materialized.Contains(x.f ^ lift[gi])) out.members_ok = false;
    if (x.g.is_identity()) ++out.kernel_part;
    for (const GammaElement& s : gens) {
      GammaElement y = gamma.Mult(s, x);
      if (seen.insert(key(y)).second) queue.push_back(std::move(y));
    }
  }
  out.order = queue.size();
  return out;
}

}  // namespace fullcover
