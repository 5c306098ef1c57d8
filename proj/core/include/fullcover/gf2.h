#ifndef FULLCOVER_GF2_H_
#define FULLCOVER_GF2_H_

// Exact linear algebra over the two-element field.
//
// Vectors and matrix rows are bit-packed into 64-bit words. Matrices act on
// column vectors by left multiplication: a rows x cols matrix maps
// GF(2)^cols to GF(2)^rows. Subspaces are held as reduced row-echelon bases,
// so two subspaces are equal exactly when their bases compare equal.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fullcover::gf2 {

class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t len);

  // Parses a string of '0'/'1' characters; coordinate i is character i.
  static Vec FromString(std::string_view bits);
  static Vec Unit(std::size_t len, std::size_t i);
  static Vec Ones(std::size_t len);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const;
  std::size_t weight() const;
  // Index of the lowest set coordinate, if any.
  std::optional<std::size_t> first_set() const;
  // Index of the lowest set coordinate at or after `from`, if any.
  std::optional<std::size_t> next_set(std::size_t from) const;
  std::vector<std::size_t> support() const;

  bool dot(const Vec& other) const;

  Vec& operator^=(const Vec& other);
  friend Vec operator^(Vec a, const Vec& b) { return a ^= b; }
  friend bool operator==(const Vec& a, const Vec& b) = default;
  // Lexicographic on the word representation; only used for canonical sorting.
  friend bool operator<(const Vec& a, const Vec& b);

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::string ToString() const;

 private:
  std::size_t len_ = 0;
  // Bits past len_ are always zero.
  std::vector<std::uint64_t> words_;
};

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);

  static Mat Identity(std::size_t n);
  static Mat FromRows(std::size_t cols, std::vector<Vec> rows);
  static Mat FromColumns(std::size_t rows, std::span<const Vec> columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) {
    rows_[r].set(c, value);
  }
  const Vec& row(std::size_t r) const { return rows_[r]; }
  Vec& row(std::size_t r) { return rows_[r]; }
  Vec column(std::size_t c) const;

  Mat Transpose() const;
  bool is_zero() const;

  // Matrix-vector product; v.size() must equal cols().
  Vec Apply(const Vec& v) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  // Debug dump: first line "rows cols", then one line of 0/1 per row.
  std::string ToText() const;
  static Mat FromText(std::string_view text);

 private:
  std::size_t cols_ = 0;
  std::vector<Vec> rows_;
};

class Subspace {
 public:
  Subspace() = default;
  static Subspace Zero(std::size_t ambient_dim);
  static Subspace Full(std::size_t ambient_dim);
  static Subspace Span(std::size_t ambient_dim, std::span<const Vec> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  // Reduced row-echelon basis, ordered by increasing pivot coordinate.
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Returns v minus its component along the basis pivots.
  Vec Reduce(Vec v) const;
  bool Contains(const Vec& v) const;
  bool IsSubspaceOf(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient_dim, std::vector<Vec> basis);

  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

// Projection onto ambient/K together with a section. projection has
// dim rows and ambient columns and kernel exactly K; section maps quotient
// coordinates back to representatives with projection * section = I.
struct QuotientMap {
  Mat projection;
  Mat section;
  std::size_t dim = 0;
};

std::size_t Rank(const Mat& m);
// Some x with a * x = b, or nullopt when the system is inconsistent.
std::optional<Vec> Solve(const Mat& a, const Vec& b);
Subspace KernelBasis(const Mat& a);
Subspace ImageBasis(const Mat& a);
Subspace Sum(const Subspace& a, const Subspace& b);
Subspace Intersect(const Subspace& a, const Subspace& b);
QuotientMap Quotient(const Subspace& k);

// Incremental reduced row-echelon form over packed rows. Used when the
// rows of a system arrive one at a time.
class Echelon {
 public:
  explicit Echelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Reduces v against the current rows; returns the residue.
  Vec Reduce(Vec v) const;
  // Adds v; returns the pivot column of the new row, or nullopt when v is
  // already in the row space.
  std::optional<std::size_t> Insert(Vec v);

 private:
  std::size_t cols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

// Incremental reduced row-echelon form over sparse rows (sorted column
// indices). Fill stays low when rows are fed in an order where each new row
// introduces at most one fresh column, which is how the all-pairs coboundary
// system is fed.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::size_t col) const { return row_of_pivot_[col] >= 0; }
  // Row whose pivot is `col`; is_pivot(col) must hold.
  std::span<const std::uint32_t> pivot_row(std::size_t col) const {
    return rows_[static_cast<std::size_t>(row_of_pivot_[col])];
  }

  // `support` lists the set columns; duplicates cancel in pairs.
  // Returns the new pivot column, or nullopt when the row is redundant.
  std::optional<std::size_t> Insert(std::span<const std::uint32_t> support);

 private:
  std::vector<std::uint32_t> ReduceToSupport(
      std::span<const std::uint32_t> support);
  static void XorInto(std::vector<std::uint32_t>& target,
                      std::span<const std::uint32_t> source,
                      std::vector<std::uint32_t>& scratch);

  std::size_t cols_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::int32_t> row_of_pivot_;
  // Rows that may contain a given non-pivot column; entries can be stale.
  std::vector<std::vector<std::uint32_t>> occurrences_;
  std::vector<std::uint8_t> mark_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> merge_scratch_;
};

}  // namespace fullcover::gf2

#endif  // FULLCOVER_GF2_H_
