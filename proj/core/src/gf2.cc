#include "fullcover/gf2.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fullcover::gf2 {

namespace {

constexpr std::size_t WordsFor(std::size_t bits) { return (bits + 63) / 64; }

void RequireSameSize(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

// Row-reduces `rows` in place to reduced row-echelon form over the first
// `cols` columns and returns the pivot columns. Zero rows are dropped.
std::vector<std::size_t> ReduceRows(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].get(c)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------------------
// Vec

Vec::Vec(std::size_t len) : len_(len), words_(WordsFor(len), 0) {}

Vec Vec::FromString(std::string_view bits) {
  Vec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("gf2::Vec: expected only '0'/'1'");
    }
  }
  return v;
}

Vec Vec::Unit(std::size_t len, std::size_t i) {
  Vec v(len);
  v.set(i);
  return v;
}

Vec Vec::Ones(std::size_t len) {
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i);
  return v;
}

void Vec::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

bool Vec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t Vec::weight() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::optional<std::size_t> Vec::first_set() const { return next_set(0); }

std::optional<std::size_t> Vec::next_set(std::size_t from) const {
  if (from >= len_) return std::nullopt;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return wi * 64 + std::countr_zero(w);
    if (++wi == words_.size()) return std::nullopt;
    w = words_[wi];
  }
}

std::vector<std::size_t> Vec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(wi * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

bool Vec::dot(const Vec& other) const {
  RequireSameSize(len_, other.len_, "gf2::Vec::dot");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    acc ^= words_[i] & other.words_[i];
  }
  return std::popcount(acc) & 1;
}

Vec& Vec::operator^=(const Vec& other) {
  RequireSameSize(len_, other.len_, "gf2::Vec::operator^=");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool operator<(const Vec& a, const Vec& b) {
  if (a.len_ != b.len_) return a.len_ < b.len_;
  return a.words_ < b.words_;
}

std::string Vec::ToString() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows, Vec(cols)) {}

Mat Mat::Identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Mat Mat::FromRows(std::size_t cols, std::vector<Vec> rows) {
  for (const Vec& r : rows) RequireSameSize(r.size(), cols, "gf2::Mat::FromRows");
  Mat m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

Mat Mat::FromColumns(std::size_t rows, std::span<const Vec> columns) {
  Mat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    RequireSameSize(columns[c].size(), rows, "gf2::Mat::FromColumns");
    for (std::size_t r : columns[c].support()) m.set(r, c);
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

Mat Mat::Transpose() const {
  Mat t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  }
  return t;
}

bool Mat::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const Vec& r) { return r.is_zero(); });
}

Vec Mat::Apply(const Vec& v) const {
  RequireSameSize(v.size(), cols_, "gf2::Mat::Apply");
  Vec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(v)) out.set(r);
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  RequireSameSize(a.cols(), b.rows(), "gf2::Mat::operator*");
  Mat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec& dst = out.rows_[r];
    for (std::size_t c : a.rows_[r].support()) dst ^= b.rows_[c];
  }
  return out;
}

std::string Mat::ToText() const {
  std::ostringstream os;
  os << rows() << ' ' << cols_ << '\n';
  for (const Vec& r : rows_) os << r.ToString() << '\n';
  return os.str();
}

Mat Mat::FromText(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (!(is >> rows >> cols)) {
    throw std::invalid_argument("gf2::Mat::FromText: missing header");
  }
  std::vector<Vec> out;
  out.reserve(rows);
  std::string line;
  for (std::size_t r = 0; r < rows; ++r) {
    if (cols == 0) {
      out.emplace_back(0);
      continue;
    }
    if (!(is >> line) || line.size() != cols) {
      throw std::invalid_argument("gf2::Mat::FromText: bad row " +
                                  std::to_string(r));
    }
    out.push_back(Vec::FromString(line));
  }
  return FromRows(cols, std::move(out));
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim, std::vector<Vec> basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
  pivots_ = ReduceRows(basis_, ambient_dim_);
}

Subspace Subspace::Zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, {});
}

Subspace Subspace::Full(std::size_t ambient_dim) {
  std::vector<Vec> rows;
  rows.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    rows.push_back(Vec::Unit(ambient_dim, i));
  }
  return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::Span(std::size_t ambient_dim, std::span<const Vec> vectors) {
  for (const Vec& v : vectors) {
    RequireSameSize(v.size(), ambient_dim, "gf2::Subspace::Span");
  }
  return Subspace(ambient_dim, std::vector<Vec>(vectors.begin(), vectors.end()));
}

Vec Subspace::Reduce(Vec v) const {
  RequireSameSize(v.size(), ambient_dim_, "gf2::Subspace::Reduce");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= basis_[i];
  }
  return v;
}

bool Subspace::Contains(const Vec& v) const { return Reduce(v).is_zero(); }

bool Subspace::IsSubspaceOf(const Subspace& other) const {
  RequireSameSize(ambient_dim_, other.ambient_dim_,
                  "gf2::Subspace::IsSubspaceOf");
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Vec& b) { return other.Contains(b); });
}

// ---------------------------------------------------------------------------
// Free functions

std::size_t Rank(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return ReduceRows(rows, m.cols()).size();
}

std::optional<Vec> Solve(const Mat& a, const Vec& b) {
  RequireSameSize(b.size(), a.rows(), "gf2::Solve");
  const std::size_t n = a.cols();
  std::vector<Vec> aug;
  aug.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vec row(n + 1);
    for (std::size_t c : a.row(r).support()) row.set(c);
    if (b.get(r)) row.set(n);
    aug.push_back(std::move(row));
  }
  const std::vector<std::size_t> pivots = ReduceRows(aug, n + 1);
  Vec x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == n) return std::nullopt;
    if (aug[i].get(n)) x.set(pivots[i]);
  }
  return x;
}

Subspace KernelBasis(const Mat& a) {
  const std::size_t n = a.cols();
  std::vector<Vec> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  const std::vector<std::size_t> pivots = ReduceRows(rows, n);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v = Vec::Unit(n, free);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(free)) v.set(pivots[i]);
    }
    kernel.push_back(std::move(v));
  }
  return Subspace::Span(n, kernel);
}

Subspace ImageBasis(const Mat& a) {
  const Mat t = a.Transpose();
  std::vector<Vec> columns;
  columns.reserve(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) columns.push_back(t.row(r));
  return Subspace::Span(a.rows(), columns);
}

Subspace Sum(const Subspace& a, const Subspace& b) {
  RequireSameSize(a.ambient_dim(), b.ambient_dim(), "gf2::Sum");
  std::vector<Vec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::Span(a.ambient_dim(), all);
}

Subspace Intersect(const Subspace& a, const Subspace& b) {
  RequireSameSize(a.ambient_dim(), b.ambient_dim(), "gf2::Intersect");
  // Zassenhaus: reduce rows [x | x] for x in a and [y | 0] for y in b; the
  // rows whose left half vanishes carry a basis of a ∩ b in the right half.
  const std::size_t n = a.ambient_dim();
  std::vector<Vec> rows;
  for (const Vec& x : a.basis()) {
    Vec r(2 * n);
    for (std::size_t i : x.support()) {
      r.set(i);
      r.set(n + i);
    }
    rows.push_back(std::move(r));
  }
  for (const Vec& y : b.basis()) {
    Vec r(2 * n);
    for (std::size_t i : y.support()) r.set(i);
    rows.push_back(std::move(r));
  }
  const std::vector<std::size_t> pivots = ReduceRows(rows, 2 * n);
  std::vector<Vec> meet;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n) continue;
    Vec v(n);
    for (std::size_t c : rows[i].support()) v.set(c - n);
    meet.push_back(std::move(v));
  }
  return Subspace::Span(n, meet);
}

QuotientMap Quotient(const Subspace& k) {
  const std::size_t n = k.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : k.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }

  // Coordinate q of Reduce(v) is v_q + sum over pivots p of v_p * basis_p[q].
  QuotientMap out;
  out.dim = free_cols.size();
  out.projection = Mat(out.dim, n);
  out.section = Mat(n, out.dim);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t q = free_cols[i];
    out.projection.set(i, q);
    out.section.set(q, i);
    for (std::size_t b = 0; b < k.dim(); ++b) {
      if (k.basis()[b].get(q)) out.projection.set(i, k.pivots()[b]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Echelon

Echelon::Echelon(std::size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

Vec Echelon::Reduce(Vec v) const {
  RequireSameSize(v.size(), cols_, "gf2::Echelon::Reduce");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= rows_[i];
  }
  return v;
}

std::optional<std::size_t> Echelon::Insert(Vec v) {
  v = Reduce(std::move(v));
  const std::optional<std::size_t> pivot = v.first_set();
  if (!pivot) return std::nullopt;
  for (Vec& r : rows_) {
    if (r.get(*pivot)) r ^= v;
  }
  row_of_pivot_[*pivot] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(*pivot);
  return pivot;
}

// ---------------------------------------------------------------------------
// SparseEchelon

SparseEchelon::SparseEchelon(std::size_t cols)
    : cols_(cols),
      row_of_pivot_(cols, -1),
      occurrences_(cols),
      mark_(cols, 0) {}

std::vector<std::uint32_t> SparseEchelon::ReduceToSupport(
    std::span<const std::uint32_t> support) {
  touched_.clear();
  auto toggle = [&](std::uint32_t c) {
    if (c >= cols_) {
      throw std::out_of_range("gf2::SparseEchelon: column out of range");
    }
    if ((mark_[c] & 2) == 0) {
      mark_[c] |= 2;
      touched_.push_back(c);
    }
    mark_[c] ^= 1;
  };
  for (std::uint32_t c : support) toggle(c);
  // Rows are fully reduced, so XORing pivot row p only clears p among the
  // pivot columns; it suffices to visit pivots present in the input.
  const std::size_t initial = touched_.size();
  for (std::size_t i = 0; i < initial; ++i) {
    const std::uint32_t c = touched_[i];
    if ((mark_[c] & 1) && row_of_pivot_[c] >= 0) {
      for (std::uint32_t d : rows_[row_of_pivot_[c]]) toggle(d);
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t c : touched_) {
    if (mark_[c] & 1) out.push_back(c);
    mark_[c] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SparseEchelon::XorInto(std::vector<std::uint32_t>& target,
                            std::span<const std::uint32_t> source,
                            std::vector<std::uint32_t>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(),
                                source.end(), std::back_inserter(scratch));
  target.swap(scratch);
}

std::optional<std::size_t> SparseEchelon::Insert(
    std::span<const std::uint32_t> support) {
  std::vector<std::uint32_t> row = ReduceToSupport(support);
  if (row.empty()) return std::nullopt;
  const std::uint32_t pivot = row.front();

  std::vector<std::uint32_t>& holders = occurrences_[pivot];
  std::sort(holders.begin(), holders.end());
  holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
  for (std::uint32_t r : holders) {
    std::vector<std::uint32_t>& target = rows_[r];
    if (!std::binary_search(target.begin(), target.end(), pivot)) continue;
    XorInto(target, row, merge_scratch_);
    for (std::uint32_t c : row) {
      if (c != pivot) occurrences_[c].push_back(r);
    }
  }
  holders.clear();
  holders.shrink_to_fit();

  const auto index = static_cast<std::uint32_t>(rows_.size());
  for (std::uint32_t c : row) {
    if (c != pivot) occurrences_[c].push_back(index);
  }
  row_of_pivot_[pivot] = static_cast<std::int32_t>(index);
  rows_.push_back(std::move(row));
  return pivot;
}

}  // namespace fullcover::gf2
