#ifndef FULLCOVER_CLASSIFY_H_
#define FULLCOVER_CLASSIFY_H_

// The classification of minimally full subgroups of Gamma_k(n) at finite n:
// the choice of l with ker alpha_{k,l} = M, and the existence table of full
// subgroups over the lattice of standard kernels.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fullcover/cohom.h"
#include "fullcover/specht.h"

namespace fullcover {

struct EllCheck {
  int j = 0;
  int parity_k = 0;  // C(k-2, j-2) mod 2
  int parity_l = 0;  // C(l-j, k-j) mod 2
};

struct EllCertificate {
  int k = 0;
  int ell = 0;
  std::vector<EllCheck> checks_i;  // one entry per j in [0, k]
  int check_ii = 0;                // C(l-2, k-2) mod 2
  // Every j with parity_k == 0 has parity_l == 0, and check_ii == 1.
  bool verified = false;
};

// l = k + e where e is 1 followed by the complemented binary digits of k-2.
// Requires k >= 3.
EllCertificate FindEll(int k);
// Recomputes the parities of a certificate from scratch.
bool VerifyEll(int k, int ell);

struct KernelCheckResult {
  bool equal = false;
  std::size_t kernel_dim = 0;  // dim ker alpha_{k,l} at this n
  std::size_t m_dim = 0;       // dim M(k, n)
};

// ker alpha_{k,l} == M(k) inside GF(2)^{C(n,k)}. Throws SizeBoundError when
// C(n,k) or C(n,l) exceeds size_bound.
KernelCheckResult KernelCheck(int k, int ell, int n,
                              std::size_t size_bound = kDefaultSizeBound);

struct ClassifyOptions {
  std::size_t size_bound = kDefaultSizeBound;
  // Run the all-pairs solver when |Sym(n)| * dim(K0/K) is at most this.
  std::size_t dense_limit = 5000;
  bool compute_h1 = true;
};

struct ClassifyRow {
  std::vector<int> J;                 // canonical J of the node
  std::vector<std::vector<int>> Js;   // every J giving this subspace
  std::size_t dim = 0;
  bool s2_factor = false;
  bool contains_alpha2 = false;       // K contains im alpha_{2,k}
  bool exists = false;                // a full subgroup with kernel K exists
  std::size_t rank_gap = 0;
  std::optional<bool> dense_agrees;   // set when the dense solver ran
  std::optional<std::size_t> h1;      // finite H^1(Sym(n), K0/K)
};

struct Verdict {
  std::string id;  // "a", "b", "c"
  std::string statement;
  bool pass = false;
};

struct ClassifyReport {
  int k = 0;
  int n = 0;
  std::optional<int> ell;     // from FindEll, k >= 3
  bool below_regime = false;  // n < l
  std::vector<ClassifyRow> rows;
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  std::vector<std::size_t> minimal_sat;  // rows that are minimal among SAT rows
  std::vector<Verdict> verdicts;

  bool all_pass() const;
};

ClassifyReport Classify(int k, int n, const ClassifyOptions& options = {});

// Full subgroup with trivial kernel, i.e. a splitting of Gamma_k(n) -> Sym(n).
CoboundaryCertificate SplitCheck(int k, int n);

struct SubgroupCheck {
  std::size_t order = 0;           // |H| found by closure
  std::size_t expected_order = 0;  // |K| * n!
  std::size_t kernel_part = 0;     // |H ∩ K0|
  std::size_t kernel_size = 0;     // |K|
  bool members_ok = false;         // every element is (s(g) + K, g)
  bool ok() const {
    return members_ok && order == expected_order && kernel_part == kernel_size;
  }
};

// Builds H = <(s(g), g), (b, 1) : b in K> from a SAT certificate, with s the
// lift of the witness through the quotient section, and counts it by
// closure. Throws SizeBoundError if |K| * n! exceeds 2^20.
SubgroupCheck BuildFullSubgroup(const SubmoduleSpec& K,
                                const CoboundaryCertificate& cert);

}  // namespace fullcover

#endif  // FULLCOVER_CLASSIFY_H_
