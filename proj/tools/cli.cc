#include "cli.h"

#include <charconv>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fullcover/classify.h"
#include "fullcover/cohom.h"
#include "fullcover/errors.h"
#include "fullcover/gamma.h"
#include "fullcover/specht.h"

namespace fullcover::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kDenseLimit = 5000;

std::vector<int> ParseKernel(const std::string& text) {
  std::vector<int> J;
  if (text.empty() || text == "none") return J;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw std::invalid_argument("--kernel expects comma-separated integers, got \"" +
                                  text + "\"");
    }
    J.push_back(value);
    pos = comma + 1;
  }
  return J;
}

void RequireCover(const RunConfig& c) {
  if (c.k < 2 || c.k > c.n) throw std::invalid_argument("need 2 <= k <= n");
}

void RequireGroupSize(const RunConfig& c) {
  if (c.n > 7) throw SizeBoundError("subcommand enumerates Sym(n); need n <= 7");
  if (Binomial(c.n, c.k) > c.size_bound) {
    throw SizeBoundError("C(n,k) = " + std::to_string(Binomial(c.n, c.k)) +
                         " exceeds --size-bound " + std::to_string(c.size_bound));
  }
}

std::string JString(const std::vector<int>& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J[i]);
  }
  return s + "}";
}

void Emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// --------------------------------------------------------------------------
// Subcommands

int Lattice(const RunConfig& c, std::ostream& out) {
  if (c.k < 0 || c.k > c.n) throw std::invalid_argument("need 0 <= k <= n");
  const fullcover::Lattice lattice = LatticeReport(c.k, c.n, c.size_bound);
  if (c.json) {
    Json nodes = Json::array();
    for (const LatticeNode& node : lattice.nodes) {
      nodes.push_back({{"J", node.canonical_J()},
                       {"dim", node.dim},
                       {"s2Factor", node.s2_factor}});
    }
    Json hasse = Json::array();
    for (auto [a, b] : lattice.hasse) hasse.push_back({a, b});
    Emit(out, {{"k", c.k}, {"n", c.n}, {"nodes", nodes}, {"hasse", hasse}});
    return kOk;
  }
  out << "standard submodules of GF(2)^C(" << c.n << "," << c.k << ")\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const LatticeNode& node = lattice.nodes[i];
    out << "  [" << i << "] J=" << JString(node.canonical_J()) << " dim=" << node.dim
        << " s2Factor=" << (node.s2_factor ? "yes" : "no")
        << (node.invariant ? "" : " NOT-INVARIANT") << "\n";
  }
  out << "hasse:";
  for (auto [a, b] : lattice.hasse) out << " " << a << "<" << b;
  out << "\n";
  return kOk;
}

int CocycleCheck(const RunConfig& c, std::ostream& out) {
  RequireCover(c);
  const CoverGroup gamma(c.k, c.n);
  const CoverGroup gamma2(2, c.n);
  const gf2::Mat alpha2 = AlphaMatrix(2, c.k, c.n).mat;
  const auto& indexer = gamma.indexer();
  std::mt19937_64 rng(c.rng_seed);

  struct Count {
    std::size_t checked = 0;
    std::size_t failed = 0;
    void Add(bool ok) {
      ++checked;
      if (!ok) ++failed;
    }
  };
  Count identity, assoc, inverse, action, pushforward;
  const std::vector<CoverPoint> points = gamma.Points();
  for (std::size_t t = 0; t < c.trials; ++t) {
    const GammaElement x = gamma.Random(rng);
    const GammaElement y = gamma.Random(rng);
    const GammaElement z = gamma.Random(rng);
    const Perm& h = x.g;
    const Perm& g = y.g;
    const Perm& f = z.g;
    identity.Add((Twist(h, gamma.Cocycle(g, f), indexer) ^ gamma.Cocycle(h, g * f)) ==
                 (gamma.Cocycle(h, g) ^ gamma.Cocycle(h * g, f)));
    assoc.Add(gamma.Mult(gamma.Mult(x, y), z) == gamma.Mult(x, gamma.Mult(y, z)));
    const GammaElement xi = gamma.Inverse(x);
    inverse.Add(gamma.Mult(x, xi) == gamma.Identity() &&
                gamma.Mult(xi, x) == gamma.Identity());
    const CoverPoint& p = points[rng() % points.size()];
    action.Add(gamma.Act(gamma.Mult(x, y), p) == gamma.Act(x, gamma.Act(y, p)));
    pushforward.Add(alpha2.Apply(gamma2.Cocycle(h, g)) == gamma.Cocycle(h, g));
  }
  auto report = [](const Count& n) {
    return Json{{"checked", n.checked}, {"failed", n.failed}};
  };
  const bool pass = identity.failed + assoc.failed + inverse.failed +
                        action.failed + pushforward.failed == 0;
  Emit(out, {{"n", c.n},
             {"k", c.k},
             {"trials", c.trials},
             {"rngSeed", c.rng_seed},
             {"cocycleIdentity", report(identity)},
             {"associativity", report(assoc)},
             {"inverse", report(inverse)},
             {"actionLaw", report(action)},
             {"alpha2Pushforward", report(pushforward)},
             {"pass", pass}});
  return pass ? kOk : kExpectationFailed;
}

int FullSubgroup(const RunConfig& c, std::ostream& out) {
  RequireCover(c);
  RequireGroupSize(c);
  const CoboundaryCertificate cert =
      FullSubgroupExists(StandardSubmodule(c.kernel, c.k, c.n));
  Json witness = Json::array();
  for (const gf2::Vec& u : cert.witness_on_generators) witness.push_back(u.ToString());
  Json j = {{"sat", cert.sat}, {"witnessOnGenerators", witness}};
  if (!cert.sat) j["rankGap"] = cert.rank_gap;
  Emit(out, j);
  return kOk;
}

int ClassifyCmd(const RunConfig& c, std::ostream& out, std::ostream& err) {
  RequireCover(c);
  RequireGroupSize(c);
  ClassifyOptions options;
  options.size_bound = c.size_bound;
  options.dense_limit = kDenseLimit;
  const ClassifyReport report = Classify(c.k, c.n, options);
  if (report.below_regime) {
    err << "warning: n = " << c.n << " < l(" << c.k << ") = " << *report.ell
        << ": below guaranteed regime\n";
  }
  if (c.json) {
    Json rows = Json::array();
    for (const ClassifyRow& r : report.rows) {
      Json row = {{"J", r.J},
                  {"Js", r.Js},
                  {"dim", r.dim},
                  {"s2Factor", r.s2_factor},
                  {"containsAlpha2", r.contains_alpha2},
                  {"exists", r.exists}};
      if (!r.exists) row["rankGap"] = r.rank_gap;
      if (r.dense_agrees) row["denseAgrees"] = *r.dense_agrees;
      if (r.h1) row["h1FiniteAnalogue"] = *r.h1;
      rows.push_back(std::move(row));
    }
    Json verdicts = Json::array();
    for (const Verdict& v : report.verdicts) {
      verdicts.push_back({{"id", v.id}, {"statement", v.statement}, {"pass", v.pass}});
    }
    Json j = {{"k", c.k}, {"n", c.n}};
    if (report.ell) j["ell"] = *report.ell;
    j["belowGuaranteedRegime"] = report.below_regime;
    j["rows"] = rows;
    j["minimalSat"] = report.minimal_sat;
    j["verdicts"] = verdicts;
    j["pass"] = report.all_pass();
    Emit(out, j);
  } else {
    out << "full subgroups of Gamma_" << c.k << "(" << c.n << ") by kernel\n";
    out << std::left << std::setw(14) << "  J" << std::setw(6) << "dim"
        << std::setw(10) << "s2Factor" << std::setw(8) << "exists" << std::setw(8)
        << "dense" << "h1 (finite analogue)\n";
    for (const ClassifyRow& r : report.rows) {
      out << "  " << std::setw(12) << JString(r.J) << std::setw(6) << r.dim
          << std::setw(10) << (r.s2_factor ? "yes" : "no") << std::setw(8)
          << (r.exists ? "SAT" : "UNSAT") << std::setw(8)
          << (r.dense_agrees ? (*r.dense_agrees ? "agree" : "DIFFER") : "-")
          << (r.h1 ? std::to_string(*r.h1) : "-") << "\n";
    }
    for (const Verdict& v : report.verdicts) {
      out << (v.pass ? "PASS" : "FAIL") << " (" << v.id << ") " << v.statement << "\n";
    }
  }
  bool dense_ok = true;
  for (const ClassifyRow& r : report.rows) {
    if (r.dense_agrees && !*r.dense_agrees) dense_ok = false;
  }
  return report.all_pass() && dense_ok ? kOk : kExpectationFailed;
}

int Ell(const RunConfig& c, std::ostream& out) {
  const EllCertificate cert = FindEll(c.k);
  Json j = {{"k", cert.k}, {"ell", cert.ell}, {"certified", cert.verified}};
  if (c.json) {
    Json checks = Json::array();
    for (const EllCheck& e : cert.checks_i) {
      checks.push_back({{"j", e.j}, {"parityK", e.parity_k}, {"parityL", e.parity_l}});
    }
    j["checksI"] = checks;
    j["checkII"] = cert.check_ii;
  }
  Emit(out, j);
  return cert.verified ? kOk : kExpectationFailed;
}

int SplitCheckCmd(const RunConfig& c, std::ostream& out) {
  RequireCover(c);
  RequireGroupSize(c);
  const CoboundaryCertificate cert = SplitCheck(c.k, c.n);
  Json j = {{"split", cert.sat}};
  if (!cert.sat) j["rankGap"] = cert.rank_gap;
  Emit(out, j);
  return cert.sat ? kExpectationFailed : kOk;
}

int KernelCheckCmd(const RunConfig& c, std::ostream& out) {
  if (!c.ell) throw std::invalid_argument("kernel-check requires --ell");
  const KernelCheckResult r = KernelCheck(c.k, *c.ell, c.n, c.size_bound);
  Emit(out, {{"k", c.k},
             {"ell", *c.ell},
             {"n", c.n},
             {"equal", r.equal},
             {"kernelDim", r.kernel_dim},
             {"mDim", r.m_dim}});
  return r.equal ? kOk : kExpectationFailed;
}

int H1(const RunConfig& c, std::ostream& out) {
  RequireCover(c);
  RequireGroupSize(c);
  const SubmoduleSpec K = StandardSubmodule(c.kernel, c.k, c.n);
  const GModule m = GModule::Quotient(K.materialized, c.k, c.n);
  const H1Result r = H1Dim(m);
  std::optional<std::size_t> dense;
  if (SymmetricGroup(c.n).order() * m.dim() <= kDenseLimit) dense = H1DimDense(m).h1_dim();
  if (c.json) {
    Json j = {{"n", c.n}, {"k", c.k}, {"kernel", K.J},      {"dim", m.dim()},
              {"z1", r.z1_dim}, {"b1", r.b1_dim}, {"h1", r.h1_dim()},
              {"label", "finite analogue"}};
    if (dense) j["denseH1"] = *dense;
    Emit(out, j);
  } else {
    out << "H^1(Sym(" << c.n << "), GF(2)^C(" << c.n << "," << c.k << ")/K_J), J="
        << JString(K.J) << " [finite analogue]\n";
    out << "  dim " << m.dim() << "  Z1 " << r.z1_dim << "  B1 " << r.b1_dim
        << "  H1 " << r.h1_dim();
    if (dense) out << "  (dense: " << *dense << ")";
    out << "\n";
  }
  return dense && *dense != r.h1_dim() ? kExpectationFailed : kOk;
}

int SelfTest(const RunConfig& c, std::ostream& out) {
  std::vector<std::pair<std::string, std::function<bool()>>> checks = {
      {"binomial parity matches Binomial for a <= 60",
       [] {
         for (int a = 0; a <= 60; ++a) {
           for (int b = 0; b <= a; ++b) {
             if (BinomParity(a, b) != static_cast<int>(Binomial(a, b) & 1)) return false;
           }
         }
         return true;
       }},
      {"beta is the transpose of alpha for n <= 5",
       [] {
         for (int n = 0; n <= 5; ++n) {
           for (int k = 0; k <= n; ++k) {
             for (int j = 0; j <= k; ++j) {
               if (BetaMatrix(k, j, n) != AlphaMatrix(j, k, n).mat.Transpose()) return false;
             }
           }
         }
         return true;
       }},
      {"cocycle-check n=5 k=3",
       [&] {
         RunConfig sub = c;
         sub.n = 5;
         sub.k = 3;
         sub.trials = 100;
         std::ostringstream sink;
         return CocycleCheck(sub, sink) == kOk;
       }},
      {"Gamma_2(3) does not split", [] { return !SplitCheck(2, 3).sat; }},
      {"classify k=3 n=5 verdicts",
       [] { return Classify(3, 5).all_pass(); }},
      {"l(3), l(4), l(5) = 5, 9, 9",
       [] {
         return FindEll(3).ell == 5 && FindEll(4).ell == 9 && FindEll(5).ell == 9 &&
                FindEll(3).verified && FindEll(4).verified && FindEll(5).verified;
       }},
  };
  bool all = true;
  Json results = Json::array();
  for (const auto& [name, check] : checks) {
    const bool ok = check();
    all = all && ok;
    if (c.json) {
      results.push_back({{"check", name}, {"pass", ok}});
    } else {
      out << (ok ? "PASS " : "FAIL ") << name << "\n";
    }
  }
  if (c.json) Emit(out, {{"checks", results}, {"pass", all}});
  return all ? kOk : kExpectationFailed;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite covers Gamma_k(n) of Sym(n) on k-subsets", "fullcover"};
  app.require_subcommand(1);
  RunConfig config;
  std::string kernel_text;
  std::optional<std::uint64_t> seed;

  auto add = [&](const std::string& name, const std::string& about,
                 std::initializer_list<const char*> flags) {
    CLI::App* sub = app.add_subcommand(name, about);
    for (std::string_view flag : flags) {
      if (flag == "n") sub->add_option("--n", config.n, "ground set size")->required();
      if (flag == "k") sub->add_option("--k", config.k, "subset size")->required();
      if (flag == "ell") sub->add_option("--ell", config.ell, "target subset size l");
      if (flag == "kernel") {
        sub->add_option("--kernel", kernel_text, "comma-separated j's, e.g. 0,1");
      }
      if (flag == "trials") {
        sub->add_option("--trials", config.trials, "random samples")
            ->check(CLI::PositiveNumber);
      }
      if (flag == "seed") {
        sub->add_option("--rng-seed", seed, "seed (falls back to RNG_SEED)");
      }
    }
    sub->add_option("--size-bound", config.size_bound, "largest C(n,k) allowed");
    sub->add_flag("--json", config.json, "emit JSON");
    return sub;
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  commands.emplace_back(add("lattice", "standard submodule lattice", {"n", "k"}),
                        [&] { return Lattice(config, out); });
  commands.emplace_back(
      add("cocycle-check", "sampled identities of Gamma_k(n)", {"n", "k", "trials", "seed"}),
      [&] { return CocycleCheck(config, out); });
  commands.emplace_back(
      add("full-subgroup", "full subgroup with a given kernel", {"n", "k", "kernel"}),
      [&] { return FullSubgroup(config, out); });
  commands.emplace_back(add("classify", "existence table over all kernels", {"n", "k"}),
                        [&] { return ClassifyCmd(config, out, err); });
  commands.emplace_back(add("ell", "binary-complement choice of l", {"k"}),
                        [&] { return Ell(config, out); });
  commands.emplace_back(add("split-check", "does Gamma_k(n) split over Sym(n)", {"n", "k"}),
                        [&] { return SplitCheckCmd(config, out); });
  commands.emplace_back(
      add("kernel-check", "compare ker alpha_{k,l} with M", {"n", "k", "ell"}),
      [&] { return KernelCheckCmd(config, out); });
  commands.emplace_back(
      add("h1", "finite H^1 of a quotient module", {"n", "k", "kernel"}),
      [&] { return H1(config, out); });
  commands.emplace_back(add("selftest", "quick internal checks", {"seed"}),
                        [&] { return SelfTest(config, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
      out << sub->help();
      return kOk;
    }
  }

  if (seed) {
    config.rng_seed = *seed;
  } else if (const char* env = std::getenv("RNG_SEED")) {
    try {
      config.rng_seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: RNG_SEED is not an unsigned integer\n";
      return kUsage;
    }
  }

  try {
    config.kernel = ParseKernel(kernel_text);
    for (auto& [sub, fn] : commands) {
      if (sub->parsed()) return fn();
    }
    return kUsage;
  } catch (const ExpectationViolation& e) {
    err << "EXPECTATION VIOLATED: " << e.what() << "\n";
    return kExpectationFailed;
  } catch (const SizeBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"fullcover"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return Run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fullcover::cli
