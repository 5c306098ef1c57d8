// Acceptance checks. Prints one PASS/FAIL line per criterion; with an
// argument N runs only criterion N. Exit status is nonzero if any selected
// criterion fails.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fullcover/classify.h"
#include "fullcover/cohom.h"
#include "fullcover/errors.h"
#include "fullcover/gamma.h"
#include "fullcover/specht.h"
#include "oracle.h"

namespace fullcover {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Str(std::size_t v) { return std::to_string(v); }

int OracleParity(int a, int b) { return static_cast<int>(oracle::Choose(a, b) % 2); }

Outcome LucasOracle() {
  std::size_t cases = 0;
  std::size_t matches = 0;
  for (int a = 0; a <= 64; ++a) {
    for (int b = 0; b <= a; ++b) {
      ++cases;
      if (BinomParity(a, b) == OracleParity(a, b)) ++matches;
    }
  }
  return {cases == 2145 && matches == cases, Str(matches) + "/" + Str(cases) + " match"};
}

Outcome Duality() {
  std::size_t checked = 0;
  std::size_t failed = 0;
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int j = 0; j <= k; ++j) {
        ++checked;
        if (BetaMatrix(k, j, n) != AlphaMatrix(j, k, n).mat.Transpose()) ++failed;
      }
    }
  }
  return {failed == 0, Str(checked) + " triples, " + Str(failed) + " mismatches"};
}

Outcome Composition() {
  std::size_t checked = 0;
  std::size_t failed = 0;
  for (int n = 0; n <= 7; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (int k = 0; k <= l; ++k) {
        const gf2::Mat akl = AlphaMatrix(k, l, n).mat;
        for (int j = 0; j <= k; ++j) {
          const gf2::Mat lhs = akl * AlphaMatrix(j, k, n).mat;
          const gf2::Mat ajl = AlphaMatrix(j, l, n).mat;
          const gf2::Mat rhs = OracleParity(l - j, k - j) ? ajl : gf2::Mat(ajl.rows(), ajl.cols());
          ++checked;
          if (lhs != rhs) ++failed;
        }
      }
    }
  }
  return {failed == 0, Str(checked) + " quadruples, " + Str(failed) + " mismatches"};
}

Outcome CocycleSoundness() {
  std::size_t failed = 0;
  std::size_t triples = 0;
  std::size_t pairs = 0;
  for (auto [n, k] : {std::pair{5, 2}, {5, 3}, {6, 2}, {6, 3}}) {
    const SymmetricGroup group(n);
    const KSubsetIndexer idx(n, k);
    std::mt19937_64 rng(1000 + 10 * n + k);
    for (int t = 0; t < 500; ++t) {
      const Perm& h = group.element(rng() % group.order());
      const Perm& g = group.element(rng() % group.order());
      const Perm& f = group.element(rng() % group.order());
      ++triples;
      try {
        const gf2::Vec lhs = Twist(h, Cocycle(g, f, idx), idx) ^ Cocycle(h, g * f, idx);
        const gf2::Vec rhs = Cocycle(h, g, idx) ^ Cocycle(h * g, f, idx);
        if (lhs != rhs) ++failed;
      } catch (const ExpectationViolation&) {
        ++failed;
      }
    }
    // Building the table evaluates every pair and raises on an odd entry.
    try {
      const CocycleTable table = CocycleTable::Cover(k, n);
      pairs += group.order() * group.order();
      if (!table.IsNormalized()) ++failed;
    } catch (const ExpectationViolation&) {
      ++failed;
    }
  }
  return {failed == 0, Str(triples) + " triples, " + Str(pairs) +
                           " pairs evaluated, " + Str(failed) + " failures"};
}

Outcome Pushforward() {
  const int n = 6;
  const SymmetricGroup group(n);
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::mt19937_64 rng(2024);
  const KSubsetIndexer idx2(n, 2);
  for (int k = 3; k <= 6; ++k) {
    const KSubsetIndexer idx(n, k);
    const gf2::Mat a2 = AlphaMatrix(2, k, n).mat;
    for (int t = 0; t < 200; ++t) {
      const Perm& h = group.element(rng() % group.order());
      const Perm& g = group.element(rng() % group.order());
      ++checked;
      if (a2.Apply(Cocycle(h, g, idx2)) != Cocycle(h, g, idx)) ++failed;
    }
  }
  for (int k = 2; k <= n; ++k) {
    const KSubsetIndexer idxk(n, k);
    for (int l = k + 1; l <= n; ++l) {
      const KSubsetIndexer idxl(n, l);
      const gf2::Mat akl = AlphaMatrix(k, l, n).mat;
      const int parity = OracleParity(l - 2, k - 2);
      for (int t = 0; t < 200; ++t) {
        const Perm& h = group.element(rng() % group.order());
        const Perm& g = group.element(rng() % group.order());
        const gf2::Vec expected = parity ? Cocycle(h, g, idxl) : gf2::Vec(idxl.size());
        ++checked;
        if (akl.Apply(Cocycle(h, g, idxk)) != expected) ++failed;
      }
    }
  }
  return {failed == 0, Str(checked) + " pairs, " + Str(failed) + " mismatches"};
}

std::vector<GammaElement> AllElements(const CoverGroup& gamma) {
  const SymmetricGroup group(gamma.n());
  const std::size_t dim = gamma.indexer().size();
  std::vector<GammaElement> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << dim); ++bits) {
    gf2::Vec f(dim);
    for (std::size_t i = 0; i < dim; ++i) f.set(i, (bits >> i & 1u) != 0);
    for (const Perm& g : group.elements()) out.push_back(gamma.Make(f, g));
  }
  return out;
}

Outcome GroupAxioms() {
  std::size_t failed = 0;
  const CoverGroup small(2, 3);
  const std::vector<GammaElement> all = AllElements(small);
  const std::vector<CoverPoint> points = small.Points();
  std::vector<std::vector<CoverPoint>> images;
  for (const GammaElement& x : all) {
    if (small.Mult(x, small.Identity()) != x || small.Mult(small.Identity(), x) != x) ++failed;
    if (small.Mult(x, small.Inverse(x)) != small.Identity()) ++failed;
    std::vector<CoverPoint> image;
    for (const CoverPoint& p : points) image.push_back(small.Act(x, p));
    images.push_back(image);
    for (const GammaElement& y : all) {
      const GammaElement xy = small.Mult(x, y);
      for (const CoverPoint& p : points) {
        if (small.Act(xy, p) != small.Act(x, small.Act(y, p))) ++failed;
      }
      for (const GammaElement& z : all) {
        if (small.Mult(xy, z) != small.Mult(x, small.Mult(y, z))) ++failed;
      }
    }
  }
  std::size_t distinct = 0;
  for (std::size_t a = 0; a < images.size(); ++a) {
    bool unique = true;
    for (std::size_t b = 0; b < a && unique; ++b) unique = images[a] != images[b];
    if (unique) ++distinct;
  }
  if (distinct != all.size()) ++failed;

  std::size_t sampled = 0;
  for (auto [n, k] : {std::pair{5, 2}, {5, 3}}) {
    const CoverGroup gamma(k, n);
    const std::vector<CoverPoint> pts = gamma.Points();
    std::mt19937_64 rng(3000 + k);
    for (int t = 0; t < 500; ++t) {
      const GammaElement x = gamma.Random(rng);
      const GammaElement y = gamma.Random(rng);
      const GammaElement z = gamma.Random(rng);
      const CoverPoint& p = pts[rng() % pts.size()];
      ++sampled;
      if (gamma.Mult(gamma.Mult(x, y), z) != gamma.Mult(x, gamma.Mult(y, z))) ++failed;
      if (gamma.Mult(x, gamma.Inverse(x)) != gamma.Identity()) ++failed;
      if (gamma.Act(gamma.Mult(x, y), p) != gamma.Act(x, gamma.Act(y, p))) ++failed;
    }
  }
  return {failed == 0, Str(all.size()) + " elements at (3,2), " + Str(distinct) +
                           " distinct actions, " + Str(sampled) + " sampled triples, " +
                           Str(failed) + " failures"};
}

// Adjacent transpositions inside w and inside its complement.
std::vector<Perm> StabilizerGenerators(SubsetMask w, int n) {
  std::vector<int> in;
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) (w >> (i - 1) & 1u ? in : out).push_back(i);
  std::vector<Perm> gens;
  for (const auto* part : {&in, &out}) {
    for (std::size_t i = 0; i + 1 < part->size(); ++i) {
      const int pair[] = {(*part)[i], (*part)[i + 1]};
      gens.push_back(Perm::Cycle(n, pair));
    }
  }
  return gens;
}

Outcome FibreData() {
  std::size_t fibres = 0;
  std::size_t generators = 0;
  std::size_t failed = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= 3 && k <= n; ++k) {
      const CoverGroup gamma(k, n);
      for (SubsetMask w : gamma.indexer().masks()) {
        ++fibres;
        const FibreGroup fibre = gamma.FibreGroupAt(w);
        const FibreGroup binding = gamma.BindingGroupAt(w);
        if (fibre.Name() != "Z4" || !fibre.IsRegular()) ++failed;
        if (binding.Name() != "Z2" || binding.Translations() != std::vector<int>{0, 2}) ++failed;
        for (const Perm& s : StabilizerGenerators(w, n)) {
          ++generators;
          const int chi = ChiW(s, w);
          // Shift of the fibre under (0, s), read modulo the binding group.
          const CoverPoint moved = gamma.Act(gamma.Make(gf2::Vec(gamma.indexer().size()), s), {0, w});
          if (chi != RestrictionSign(s, w) || chi != EpsK(s, w) % 2 || chi != moved.a % 2) {
            ++failed;
          }
        }
      }
    }
  }
  return {failed == 0, Str(fibres) + " fibres, " + Str(generators) +
                           " stabilizer generators, " + Str(failed) + " failures"};
}

Outcome NonSplitting() {
  std::string detail;
  bool pass = true;
  for (auto [n, k] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
    const CoboundaryCertificate cert = SplitCheck(k, n);
    const bool ok = !cert.sat && cert.rank_gap == 1;
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += "(" + Str(n) + "," + Str(k) + ") gap " + Str(cert.rank_gap) + (ok ? "" : " BAD");
  }
  return {pass, detail};
}

Outcome Dichotomy() {
  const ClassifyReport report = Classify(3, 5);
  std::size_t sat = 0;
  bool matches = true;
  for (const ClassifyRow& row : report.rows) {
    if (row.exists) ++sat;
    if (row.exists != row.contains_alpha2) matches = false;
  }
  const gf2::Subspace alpha2 = gf2::ImageBasis(AlphaMatrix(2, 3, 5).mat);
  bool minimal_ok = report.minimal_sat.size() == 1;
  if (minimal_ok) {
    const ClassifyRow& row = report.rows[report.minimal_sat.front()];
    minimal_ok = StandardSubmodule(row.J, 3, 5).materialized == alpha2;
  }
  const bool m_unsat = !FullSubgroupExists(MSubmodule(3, 5)).sat;
  return {matches && minimal_ok && m_unsat,
          Str(report.rows.size()) + " kernels, " + Str(sat) + " SAT, minimal = im alpha_{2,3}: " +
              (minimal_ok ? "yes" : "no") + ", M UNSAT: " + (m_unsat ? "yes" : "no")};
}

Outcome Rigidity() {
  bool pass = true;
  std::string detail;
  for (int n : {5, 6}) {
    ClassifyOptions options;
    options.compute_h1 = false;
    options.dense_limit = 0;
    const ClassifyReport report = Classify(2, n, options);
    const std::size_t full = Binomial(n, 2);
    std::size_t proper = 0;
    std::size_t proper_sat = 0;
    for (const ClassifyRow& row : report.rows) {
      if (row.dim == full) continue;
      ++proper;
      if (row.exists) ++proper_sat;
    }
    pass = pass && proper_sat == 0;
    if (!detail.empty()) detail += "; ";
    detail += "n=" + Str(n) + ": " + Str(proper_sat) + "/" + Str(proper) + " proper SAT";
  }
  return {pass, detail};
}

Outcome EllFinder() {
  bool pass = true;
  std::string detail;
  for (auto [k, ell] : {std::pair{3, 5}, {4, 9}, {5, 9}}) {
    const EllCertificate cert = FindEll(k);
    const bool ok = cert.ell == ell && cert.verified && VerifyEll(k, cert.ell);
    pass = pass && ok;
    detail += "l(" + Str(k) + ")=" + Str(cert.ell) + (ok ? "" : " BAD") + "; ";
  }
  const KernelCheckResult r = KernelCheck(3, 5, 7);
  const bool kernel_ok = r.equal && r.kernel_dim == r.m_dim;
  pass = pass && kernel_ok;
  detail += "kernel_check(3,5,7): dim ker " + Str(r.kernel_dim) + " vs dim M " + Str(r.m_dim);
  const KernelCheckResult eight = KernelCheck(3, 5, 8);
  std::printf("info kernel_check(3,5,8): equal=%s dim ker %zu vs dim M %zu\n",
              eight.equal ? "true" : "false", eight.kernel_dim, eight.m_dim);
  return {pass, detail};
}

Outcome SolverAgreement() {
  std::size_t instances = 0;
  std::size_t disagreements = 0;
  for (auto [n, k] : {std::pair{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
    const CocycleTable cover = CocycleTable::Cover(k, n);
    const GModule m = GModule::Quotient(gf2::Subspace::Zero(Binomial(n, k)), k, n);
    ++instances;
    if (Is2Coboundary(cover, m).sat != Is2CoboundaryDense(cover, m).sat) ++disagreements;
  }
  for (auto [k, n] : {std::pair{3, 5}, {2, 5}, {2, 6}}) {
    ClassifyOptions options;
    options.compute_h1 = false;
    options.dense_limit = SymmetricGroup(n).order() * Binomial(n, k);
    for (const ClassifyRow& row : Classify(k, n, options).rows) {
      ++instances;
      if (!row.dense_agrees.value_or(false)) ++disagreements;
    }
  }
  return {disagreements == 0, Str(instances) + " instances, " + Str(disagreements) + " disagreements"};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace fullcover

int main(int argc, char** argv) {
  using fullcover::Criterion;
  const std::vector<Criterion> criteria = {
      {"lucas parity oracle", fullcover::LucasOracle},
      {"alpha/beta duality", fullcover::Duality},
      {"composition identity", fullcover::Composition},
      {"cocycle soundness", fullcover::CocycleSoundness},
      {"pushforward identities", fullcover::Pushforward},
      {"group and action axioms", fullcover::GroupAxioms},
      {"fibre and binding groups", fullcover::FibreData},
      {"non-splitting", fullcover::NonSplitting},
      {"classification dichotomy at (3,5)", fullcover::Dichotomy},
      {"Gamma_2 rigidity at n=5,6", fullcover::Rigidity},
      {"l-finder and kernel check", fullcover::EllFinder},
      {"solver cross-validation", fullcover::SolverAgreement},
  };
  std::size_t only = 0;
  if (argc > 1) {
    only = std::strtoul(argv[1], nullptr, 10);
    if (only < 1 || only > criteria.size()) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != i + 1) continue;
    fullcover::Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all = all && outcome.pass;
    std::printf("%s %zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
