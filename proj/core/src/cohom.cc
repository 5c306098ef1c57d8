#include "fullcover/cohom.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fullcover/errors.h"

namespace fullcover {

namespace {

std::vector<std::size_t> GeneratorIndices(const SymmetricGroup& group,
                                          const std::vector<Perm>& gens) {
  std::vector<std::size_t> out;
  for (const Perm& s : gens) out.push_back(group.IndexOf(s));
  return out;
}

// Breadth-first traversal of the Cayley graph from the identity, following
// x -> s x. Calls edge(s, x, y, is_tree) once per (generator, element) pair
// in traversal order.
template <typename Edge>
void WalkCayley(const SymmetricGroup& group,
                const std::vector<std::size_t>& gens, Edge&& edge) {
  std::vector<bool> seen(group.order(), false);
  std::vector<std::size_t> queue = {group.identity_index()};
  seen[group.identity_index()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t x = queue[head];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::size_t y = group.Multiply(gens[s], x);
      const bool tree = !seen[y];
      if (tree) {
        seen[y] = true;
        queue.push_back(y);
      }
      edge(s, x, y, tree);
    }
  }
}

// Column offsets for the all-pairs systems: non-generator elements first,
// generator blocks last so that elimination leaves them free.
std::vector<std::size_t> DenseBlocks(std::size_t order, std::size_t dim,
                                     const std::vector<std::size_t>& gens) {
  std::vector<bool> is_gen(order, false);
  for (std::size_t s : gens) is_gen[s] = true;
  std::vector<std::size_t> block(order);
  std::size_t next = 0;
  for (std::size_t x = 0; x < order; ++x) {
    if (!is_gen[x]) block[x] = dim * next++;
  }
  for (std::size_t s : gens) block[s] = dim * next++;
  return block;
}

// Visits every pair (h, g): generator edges in Cayley order first, so each
// row brings in at most one new column, then the rest. Stops when visit
// returns false.
template <typename Visit>
void ForAllPairs(const SymmetricGroup& group,
                 const std::vector<std::size_t>& gens, Visit&& visit) {
  const std::size_t order = group.order();
  std::vector<bool> done(order * order, false);
  bool go = true;
  WalkCayley(group, gens, [&](std::size_t s, std::size_t x, std::size_t, bool) {
    if (!go || done[gens[s] * order + x]) return;
    done[gens[s] * order + x] = true;
    go = visit(gens[s], x);
  });
  for (std::size_t h = 0; h < order && go; ++h) {
    for (std::size_t g = 0; g < order && go; ++g) {
      if (!done[h * order + g]) go = visit(h, g);
    }
  }
}

void RequireCompatible(const CocycleTable& c, const GModule& m) {
  if (c.group().degree() != m.n()) {
    throw std::invalid_argument("cocycle and module are over different Sym(n)");
  }
  if (!m.has_origin() && c.value_size() != m.dim()) {
    throw std::invalid_argument(
        "cocycle values do not match the module dimension");
  }
  if (m.has_origin() && c.value_size() != m.origin().projection.cols()) {
    throw std::invalid_argument(
        "cocycle values do not match the module's ambient space");
  }
  if (!c.IsNormalized()) {
    throw std::invalid_argument("2-cochain is not normalized");
  }
}

// c(h,g) == u(hg) + u(h) + h u(g) on every pair; throws otherwise.
void VerifySection(const CocycleTable& c, const GModule& m,
                   const std::vector<gf2::Mat>& actions,
                   const std::vector<gf2::Vec>& u) {
  const SymmetricGroup& group = c.group();
  for (std::size_t h = 0; h < group.order(); ++h) {
    for (std::size_t g = 0; g < group.order(); ++g) {
      gf2::Vec rhs = u[group.Multiply(h, g)] ^ u[h];
      rhs ^= actions[h].Apply(u[g]);
      if (m.Project(c.at(h, g)) != rhs) {
        throw ExpectationViolation(
            "coboundary witness fails at h=" + group.element(h).ToString() +
            ", g=" + group.element(g).ToString());
      }
    }
  }
}

gf2::Mat StackedDifferences(const std::vector<const gf2::Mat*>& actions,
                            std::size_t dim) {
  std::vector<gf2::Vec> rows;
  for (const gf2::Mat* a : actions) {
    for (std::size_t i = 0; i < dim; ++i) {
      gf2::Vec r = a->row(i);
      r.flip(i);
      rows.push_back(std::move(r));
    }
  }
  return gf2::Mat::FromRows(dim, std::move(rows));
}

// Affine forms u(x) = A_x * (unknowns) + b_x, one packed row per module
// coordinate with the constant in the last column.
struct Propagation {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  gf2::Echelon system{1};
  std::vector<std::vector<gf2::Vec>> forms;
  bool inconsistent = false;
};

// `value(s, x)` supplies the projected cochain on a generator edge, or an
// empty optional for the zero cochain.
template <typename Value>
Propagation Propagate(const SymmetricGroup& group, const GModule& m,
                      Value&& value) {
  const std::size_t dim = m.dim();
  const auto gens = GeneratorIndices(group, m.generators());
  Propagation p;
  p.unknowns = gens.size() * dim;
  const std::size_t width = p.unknowns + 1;
  p.system = gf2::Echelon(width);
  p.forms.assign(group.order(), {});
  p.forms[group.identity_index()].assign(dim, gf2::Vec(width));

  WalkCayley(group, gens, [&](std::size_t s, std::size_t x, std::size_t y,
                              bool tree) {
    const gf2::Mat& act = m.generator_action(s);
    const std::optional<gf2::Vec> cbar = value(s, x);
    std::vector<gf2::Vec> rhs(dim, gf2::Vec(width));
    for (std::size_t i = 0; i < dim; ++i) {
      gf2::Vec& r = rhs[i];
      r.set(s * dim + i);
      for (std::size_t j : act.row(i).support()) r ^= p.forms[x][j];
      if (cbar && cbar->get(i)) r.flip(p.unknowns);
    }
    if (tree) {
      p.forms[y] = std::move(rhs);
      return;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      ++p.equations;
      const auto pivot = p.system.Insert(rhs[i] ^ p.forms[y][i]);
      if (pivot && *pivot == p.unknowns) p.inconsistent = true;
    }
  });
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// GModule

GModule GModule::Trivial(int n, std::size_t dim) {
  GModule m(n, dim);
  m.generators_ = StandardGenerators(n);
  m.actions_.assign(m.generators_.size(), gf2::Mat::Identity(dim));
  return m;
}

GModule GModule::FromGenerators(int n, std::size_t dim,
                                std::vector<gf2::Mat> actions) {
  GModule m(n, dim);
  m.generators_ = StandardGenerators(n);
  if (actions.size() != m.generators_.size()) {
    throw std::invalid_argument("GModule: one matrix per standard generator");
  }
  for (const gf2::Mat& a : actions) {
    if (a.rows() != dim || a.cols() != dim) {
      throw std::invalid_argument("GModule: action matrix has wrong shape");
    }
  }
  m.actions_ = std::move(actions);
  return m;
}

GModule GModule::Quotient(const gf2::Subspace& K, int k, int n) {
  KSubsetIndexer indexer(n, k);
  if (K.ambient_dim() != indexer.size()) {
    throw std::invalid_argument("GModule::Quotient: K is not in GF(2)^C(n,k)");
  }
  if (!IsInvariant(K, indexer)) {
    throw std::invalid_argument("GModule::Quotient: K is not Sym(n)-invariant");
  }
  gf2::QuotientMap q = gf2::Quotient(K);
  GModule m(n, q.dim);
  m.k_ = k;
  m.generators_ = StandardGenerators(n);
  m.origin_ = std::move(q);
  m.indexer_ = std::move(indexer);
  for (const Perm& s : m.generators_) m.actions_.push_back(m.Action(s));
  return m;
}

gf2::Vec GModule::Project(const gf2::Vec& ambient) const {
  if (origin_) return origin_->projection.Apply(ambient);
  if (ambient.size() != dim_) {
    throw std::invalid_argument("GModule::Project: vector has wrong length");
  }
  return ambient;
}

gf2::Mat GModule::Action(const Perm& g) const {
  if (g.degree() != n_) throw std::invalid_argument("GModule: degree mismatch");
  if (origin_) {
    std::vector<gf2::Vec> columns;
    columns.reserve(dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      columns.push_back(origin_->projection.Apply(
          Twist(g, origin_->section.column(j), *indexer_)));
    }
    return gf2::Mat::FromColumns(dim_, columns);
  }
  const SymmetricGroup group(n_);
  return WordActions(group)[group.IndexOf(g)];
}

std::vector<gf2::Mat> GModule::WordActions(const SymmetricGroup& group) const {
  std::vector<gf2::Mat> out(group.order());
  out[group.identity_index()] = gf2::Mat::Identity(dim_);
  WalkCayley(group, GeneratorIndices(group, generators_),
             [&](std::size_t s, std::size_t x, std::size_t y, bool tree) {
               if (tree) out[y] = actions_[s] * out[x];
             });
  return out;
}

std::vector<gf2::Mat> GModule::AllActions(const SymmetricGroup& group) const {
  if (group.degree() != n_) throw std::invalid_argument("GModule: degree mismatch");
  if (!origin_) return WordActions(group);
  std::vector<gf2::Mat> out;
  out.reserve(group.order());
  for (const Perm& g : group.elements()) out.push_back(Action(g));
  return out;
}

void GModule::Validate() const {
  for (const gf2::Mat& a : actions_) {
    if (a.rows() != dim_ || a.cols() != dim_ || gf2::Rank(a) != dim_) {
      throw std::invalid_argument("GModule: generator action is not invertible");
    }
  }
  const SymmetricGroup group(n_);
  const std::vector<gf2::Mat> words = WordActions(group);
  WalkCayley(group, GeneratorIndices(group, generators_),
             [&](std::size_t s, std::size_t x, std::size_t y, bool tree) {
               if (!tree && actions_[s] * words[x] != words[y]) {
                 throw std::invalid_argument(
                     "GModule: generator matrices violate a relation of Sym(" +
                     std::to_string(n_) + ")");
               }
             });
}

// ---------------------------------------------------------------------------
// Coboundary solvers

CoboundaryCertificate Is2Coboundary(const CocycleTable& c, const GModule& m) {
  RequireCompatible(c, m);
  const SymmetricGroup& group = c.group();
  const auto gens = GeneratorIndices(group, m.generators());
  Propagation p = Propagate(group, m, [&](std::size_t s, std::size_t x) {
    return std::optional<gf2::Vec>(m.Project(c.at(gens[s], x)));
  });

  CoboundaryCertificate cert;
  cert.unknowns = p.unknowns;
  cert.equations = p.equations;
  if (p.inconsistent) {
    cert.rank_gap = 1;
    return cert;
  }
  // Reduced rows: free unknowns are set to zero, each pivot unknown takes
  // the constant of its row.
  gf2::Vec assignment(p.unknowns + 1);
  for (std::size_t r = 0; r < p.system.rank(); ++r) {
    if (p.system.rows()[r].get(p.unknowns)) assignment.set(p.system.pivots()[r]);
  }
  assignment.set(p.unknowns);

  const std::size_t dim = m.dim();
  cert.section.assign(group.order(), gf2::Vec(dim));
  for (std::size_t x = 0; x < group.order(); ++x) {
    for (std::size_t i = 0; i < dim; ++i) {
      cert.section[x].set(i, p.forms[x][i].dot(assignment));
    }
  }
  for (std::size_t s : gens) cert.witness_on_generators.push_back(cert.section[s]);
  VerifySection(c, m, m.AllActions(group), cert.section);
  cert.sat = true;
  return cert;
}

CoboundaryCertificate Is2CoboundaryDense(const CocycleTable& c,
                                         const GModule& m) {
  RequireCompatible(c, m);
  const SymmetricGroup& group = c.group();
  const std::size_t order = group.order();
  const std::size_t dim = m.dim();
  const auto gens = GeneratorIndices(group, m.generators());
  const std::vector<gf2::Mat> actions = m.AllActions(group);

  const auto block = DenseBlocks(order, dim, gens);
  const std::size_t unknowns = order * dim;
  const std::size_t constant = unknowns;

  CoboundaryCertificate cert;
  cert.unknowns = unknowns;
  cert.equations = order * order * dim;
  gf2::SparseEchelon system(unknowns + 1);
  std::vector<std::uint32_t> row;
  bool inconsistent = false;

  auto add_pair = [&](std::size_t h, std::size_t g) {
    const gf2::Vec cbar = m.Project(c.at(h, g));
    const std::size_t hg = group.Multiply(h, g);
    for (std::size_t i = 0; i < dim && !inconsistent; ++i) {
      row.clear();
      row.push_back(static_cast<std::uint32_t>(block[hg] + i));
      row.push_back(static_cast<std::uint32_t>(block[h] + i));
      for (std::size_t j : actions[h].row(i).support()) {
        row.push_back(static_cast<std::uint32_t>(block[g] + j));
      }
      if (cbar.get(i)) row.push_back(static_cast<std::uint32_t>(constant));
      const auto pivot = system.Insert(row);
      if (pivot && *pivot == constant) inconsistent = true;
    }
  };

  ForAllPairs(group, gens, [&](std::size_t h, std::size_t g) {
    add_pair(h, g);
    return !inconsistent;
  });
  if (inconsistent) {
    cert.rank_gap = 1;
    return cert;
  }

  cert.section.assign(order, gf2::Vec(dim));
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t col = block[x] + i;
      if (system.is_pivot(col) && system.pivot_row(col).back() == constant) {
        cert.section[x].set(i);
      }
    }
  }
  for (std::size_t s : gens) cert.witness_on_generators.push_back(cert.section[s]);
  VerifySection(c, m, actions, cert.section);
  cert.sat = true;
  return cert;
}

H1Result H1Dim(const GModule& m) {
  const SymmetricGroup group(m.n());
  Propagation p = Propagate(group, m, [](std::size_t, std::size_t) {
    return std::optional<gf2::Vec>();
  });
  std::vector<const gf2::Mat*> gens;
  for (std::size_t s = 0; s < m.generators().size(); ++s) {
    gens.push_back(&m.generator_action(s));
  }
  H1Result out;
  out.z1_dim = p.unknowns - p.system.rank();
  out.b1_dim = m.dim() == 0 ? 0 : gf2::Rank(StackedDifferences(gens, m.dim()));
  return out;
}

H1Result H1DimDense(const GModule& m) {
  const SymmetricGroup group(m.n());
  const std::size_t order = group.order();
  const std::size_t dim = m.dim();
  const std::vector<gf2::Mat> actions = m.AllActions(group);
  const std::size_t unknowns = order * dim;

  const auto gens = GeneratorIndices(group, m.generators());
  const auto block = DenseBlocks(order, dim, gens);
  gf2::SparseEchelon system(unknowns);
  std::vector<std::uint32_t> row;
  ForAllPairs(group, gens, [&](std::size_t h, std::size_t g) {
    const std::size_t hg = group.Multiply(h, g);
    for (std::size_t i = 0; i < dim; ++i) {
      row.clear();
      row.push_back(static_cast<std::uint32_t>(block[hg] + i));
      row.push_back(static_cast<std::uint32_t>(block[h] + i));
      for (std::size_t j : actions[h].row(i).support()) {
        row.push_back(static_cast<std::uint32_t>(block[g] + j));
      }
      system.Insert(row);
    }
    return true;
  });
  std::vector<const gf2::Mat*> all;
  for (const gf2::Mat& a : actions) all.push_back(&a);
  H1Result out;
  out.z1_dim = unknowns - system.rank();
  out.b1_dim = dim == 0 ? 0 : gf2::Rank(StackedDifferences(all, dim));
  return out;
}

CoboundaryCertificate FullSubgroupExists(const SubmoduleSpec& K) {
  return FullSubgroupExists(K, CocycleTable::Cover(K.k, K.n));
}

CoboundaryCertificate FullSubgroupExists(const SubmoduleSpec& K,
                                         const CocycleTable& cover) {
  if (cover.k() != K.k || cover.group().degree() != K.n) {
    throw std::invalid_argument(
        "FullSubgroupExists: cocycle table is for a different Gamma_k(n)");
  }
  return Is2Coboundary(cover, GModule::Quotient(K.materialized, K.k, K.n));
}

}  // namespace fullcover
