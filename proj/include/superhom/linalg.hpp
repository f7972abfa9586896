#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "superhom/field.hpp"

namespace superhom {

struct Entry {
  std::size_t index;
  Scalar value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector with strictly increasing indices and no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;

  static SparseVector unit(std::size_t index, const Scalar& value);
  static SparseVector from_dense(std::span<const Scalar> dense);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Entry& operator[](std::size_t k) const { return entries_[k]; }

  /// Pointer to the stored value at index, or nullptr when it is zero.
  const Scalar* find(std::size_t index) const;
  Scalar get(std::size_t index, const Scalar& zero) const;

  /// Appends an entry; index must exceed every stored index. Zeros are dropped.
  void push_back(std::size_t index, Scalar value);
  /// this += c * other.
  void add_scaled(const SparseVector& other, const Scalar& c);
  SparseVector scaled(const Scalar& c) const;
  SparseVector& operator+=(const SparseVector& o);
  SparseVector& operator-=(const SparseVector& o);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  SparseVector operator-() const;

  /// Renumbers indices through `map` (must be injective); re-sorts.
  SparseVector remapped(std::span<const std::size_t> map) const;
  std::vector<Scalar> to_dense(std::size_t dim, const Scalar& zero) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  friend class Echelon;
  std::vector<Entry> entries_;
};

/// Collects unsorted (index, value) contributions and produces a SparseVector.
class SparseAccumulator {
 public:
  void add(std::size_t index, const Scalar& value);
  void add(const SparseVector& v, const Scalar& c);
  void add(const SparseVector& v);
  SparseVector take();
  bool empty() const { return terms_.empty(); }

 private:
  std::map<std::size_t, Scalar> terms_;
};

/// Scratch accumulator over a fixed dimension: O(1) adds, output sorted by
/// the touched indices only. Reusable after take().
class DenseAccumulator {
 public:
  DenseAccumulator(FieldSpec field, std::size_t dim);
  void add(std::size_t index, const Scalar& value);
  void add(const SparseVector& v, const Scalar& c);
  void add(const SparseVector& v);
  SparseVector take();

 private:
  std::vector<Scalar> values_;
  std::vector<char> used_;
  std::vector<std::size_t> touched_;
  Scalar zero_;
};

/// Exact sparse matrix stored by rows.
class SparseMatrix {
 public:
  SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static SparseMatrix identity(FieldSpec field, std::size_t n);
  static SparseMatrix from_dense(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);
  static SparseMatrix from_int(FieldSpec field, const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const SparseVector& row(std::size_t r) const { return rows_[r]; }
  void set_row(std::size_t r, SparseVector v);
  Scalar at(std::size_t r, std::size_t c) const;
  std::size_t nnz() const;

  SparseMatrix transpose() const;
  /// M * v for a column vector v of length cols().
  SparseVector apply(const SparseVector& v) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  bool is_zero() const;

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

/// Incrementally built row-echelon basis. Every stored row has leading
/// coefficient 1 at its pivot, and pivots are pairwise distinct.
class Echelon {
 public:
  Echelon(FieldSpec field, std::size_t dim);

  /// Remainder of v after elimination against the stored rows. The
  /// remainder is zero exactly when v lies in the span.
  SparseVector reduce(SparseVector v) const;
  /// Adds v to the span; returns false if v was already in it.
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }

  /// Rows in reduced row-echelon form, sorted by pivot.
  std::vector<SparseVector> reduced_rows() const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<SparseVector> rows_;
  std::vector<std::ptrdiff_t> pivot_row_;
};

/// Subspace of field^ambient_dim held as a reduced row-echelon basis.
class Subspace {
 public:
  Subspace(FieldSpec field, std::size_t ambient_dim);
  static Subspace span(FieldSpec field, std::size_t ambient_dim, std::span<const SparseVector> vectors);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(), or nullopt if v is not in the subspace.
  std::optional<SparseVector> coordinates(const SparseVector& v) const;
  /// Inverse of coordinates().
  SparseVector combine(const SparseVector& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_pos_;
};

/// V / W realised on the complement of W's pivot columns.
class Quotient {
 public:
  Quotient(Subspace kernel);

  std::size_t dim() const { return complement_.size(); }
  std::size_t ambient_dim() const { return kernel_.ambient_dim(); }
  const Subspace& kernel() const { return kernel_; }
  SparseVector project(const SparseVector& v) const;
  /// A preimage of quotient basis vector k.
  SparseVector section(std::size_t k) const;
  SparseMatrix projection() const;

 private:
  Subspace kernel_;
  std::vector<std::size_t> complement_;
  std::vector<std::ptrdiff_t> position_;
};

std::size_t rank(const SparseMatrix& m);
/// Rank of the span of a list of row vectors living in field^dim.
std::size_t rank_of_rows(FieldSpec field, std::size_t dim, std::span<const SparseVector> rows);
Subspace row_space(const SparseMatrix& m);
Subspace kernel_basis(const SparseMatrix& m);
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);
Quotient quotient(std::size_t ambient_dim, const Subspace& w);

}  // namespace superhom
