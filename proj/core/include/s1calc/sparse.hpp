#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "s1calc/rational.hpp"

namespace s1calc {

using Index = std::size_t;

// A vector of fixed dimension stored as (index, value) terms sorted by index,
// with no zero values and no repeated indices.
class SparseVector {
 public:
  using Term = std::pair<Index, Rational>;

  SparseVector() = default;
  explicit SparseVector(Index dim) : dim_(dim) {}

  // Sorts, merges repeated indices and drops zeros.
  static SparseVector from_terms(Index dim, std::vector<Term> terms);
  static SparseVector unit(Index dim, Index i, const Rational& value = 1);

  Index dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nnz() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational at(Index i) const;

  // this += a * x
  SparseVector& axpy(const Rational& a, const SparseVector& x);
  SparseVector& scale(const Rational& a);

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator*(const Rational& a, const SparseVector& x);
  friend bool operator==(const SparseVector& a, const SparseVector& b);

  // Terms with index in [begin, end), shifted down by `begin`.
  SparseVector slice(Index begin, Index end) const;
  // Places this vector at offset `offset` in a vector of dimension `dim`.
  SparseVector embed(Index dim, Index offset) const;
  // Re-indexes through `map` (map[i] = new position of index i).
  SparseVector remap(Index dim, std::span<const Index> map) const;

 private:
  Index dim_ = 0;
  std::vector<Term> terms_;
};

struct MatrixEntry {
  Index row;
  Index col;
  Rational value;
};

// Immutable-by-convention sparse rational matrix. Column j holds the image of
// the j-th basis vector, so a matrix of a linear map sends columns to columns.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols);

  // Accumulates repeated positions and drops zero sums.
  static SparseMatrix from_entries(Index rows, Index cols, const std::vector<MatrixEntry>& entries);
  static SparseMatrix from_columns(Index rows, std::vector<SparseVector> columns);
  static SparseMatrix identity(Index n);
  static SparseMatrix dense(const std::vector<std::vector<Rational>>& rows);

  Index rows() const { return rows_; }
  Index cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const;

  const SparseVector& column(Index j) const { return columns_.at(j); }
  const std::vector<SparseVector>& columns() const { return columns_; }
  Rational at(Index i, Index j) const { return columns_.at(j).at(i); }

  // Entries in canonical row-major order.
  std::vector<MatrixEntry> entries() const;
  std::vector<SparseVector> row_vectors() const;

  SparseMatrix transpose() const;
  SparseMatrix select_columns(std::span<const Index> cols) const;
  SparseMatrix select_rows(std::span<const Index> rows) const;
  // Extracts the block with the given row and column index lists.
  SparseMatrix block(std::span<const Index> rows, std::span<const Index> cols) const;
  SparseMatrix append_columns(const SparseMatrix& other) const;

  SparseVector operator*(const SparseVector& x) const;
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Rational& a, const SparseMatrix& m);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  Index rows_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace s1calc
