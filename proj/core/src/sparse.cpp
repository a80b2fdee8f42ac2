#include "s1calc/sparse.hpp"

#include <algorithm>

#include "s1calc/errors.hpp"

namespace s1calc {

SparseVector SparseVector::from_terms(Index dim, std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.first < b.first; });
  SparseVector v(dim);
  for (auto& [i, value] : terms) {
    if (i >= dim) throw InputError("sparse vector index out of range");
    if (!v.terms_.empty() && v.terms_.back().first == i) {
      v.terms_.back().second += value;
      if (v.terms_.back().second == 0) v.terms_.pop_back();
    } else if (value != 0) {
      v.terms_.emplace_back(i, std::move(value));
    }
  }
  return v;
}

SparseVector SparseVector::unit(Index dim, Index i, const Rational& value) {
  if (i >= dim) throw InputError("unit vector index out of range");
  SparseVector v(dim);
  if (value != 0) v.terms_.emplace_back(i, value);
  return v;
}

Rational SparseVector::at(Index i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i,
                             [](const Term& t, Index key) { return t.first < key; });
  if (it != terms_.end() && it->first == i) return it->second;
  return 0;
}

SparseVector& SparseVector::axpy(const Rational& a, const SparseVector& x) {
  if (x.dim_ != dim_) throw InputError("dimension mismatch in vector update");
  if (a == 0 || x.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + x.terms_.size());
  auto p = terms_.begin();
  auto q = x.terms_.begin();
  Rational tmp;
  while (p != terms_.end() || q != x.terms_.end()) {
    if (q == x.terms_.end() || (p != terms_.end() && p->first < q->first)) {
      out.push_back(std::move(*p));
      ++p;
    } else if (p == terms_.end() || q->first < p->first) {
      tmp = a * q->second;
      out.emplace_back(q->first, tmp);
      ++q;
    } else {
      tmp = p->second + a * q->second;
      if (tmp != 0) out.emplace_back(p->first, tmp);
      ++p;
      ++q;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SparseVector& SparseVector::scale(const Rational& a) {
  if (a == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= a;
  return *this;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.axpy(1, b);
  return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.axpy(-1, b);
  return r;
}

SparseVector operator*(const Rational& a, const SparseVector& x) {
  SparseVector r = x;
  r.scale(a);
  return r;
}

bool operator==(const SparseVector& a, const SparseVector& b) {
  return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

SparseVector SparseVector::slice(Index begin, Index end) const {
  SparseVector r(end - begin);
  for (const auto& [i, v] : terms_) {
    if (i >= begin && i < end) r.terms_.emplace_back(i - begin, v);
  }
  return r;
}

SparseVector SparseVector::embed(Index dim, Index offset) const {
  if (offset + dim_ > dim) throw InputError("embedding out of range");
  SparseVector r(dim);
  r.terms_.reserve(terms_.size());
  for (const auto& [i, v] : terms_) r.terms_.emplace_back(i + offset, v);
  return r;
}

SparseVector SparseVector::remap(Index dim, std::span<const Index> map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [i, v] : terms_) out.emplace_back(map[i], v);
  return from_terms(dim, std::move(out));
}

// ---------------------------------------------------------------------------

SparseMatrix::SparseMatrix(Index rows, Index cols) : rows_(rows), columns_(cols, SparseVector(rows)) {}

SparseMatrix SparseMatrix::from_entries(Index rows, Index cols, const std::vector<MatrixEntry>& entries) {
  std::vector<std::vector<SparseVector::Term>> per_col(cols);
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw InputError("matrix entry out of range");
    per_col[e.col].emplace_back(e.row, e.value);
  }
  SparseMatrix m;
  m.rows_ = rows;
  m.columns_.reserve(cols);
  for (auto& terms : per_col) m.columns_.push_back(SparseVector::from_terms(rows, std::move(terms)));
  return m;
}

SparseMatrix SparseMatrix::from_columns(Index rows, std::vector<SparseVector> columns) {
  for (const auto& c : columns) {
    if (c.dim() != rows) throw InputError("column dimension mismatch");
  }
  SparseMatrix m;
  m.rows_ = rows;
  m.columns_ = std::move(columns);
  return m;
}

SparseMatrix SparseMatrix::identity(Index n) {
  SparseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(n, i);
  return m;
}

SparseMatrix SparseMatrix::dense(const std::vector<std::vector<Rational>>& rows) {
  const Index r = rows.size();
  const Index c = r == 0 ? 0 : rows.front().size();
  std::vector<MatrixEntry> entries;
  for (Index i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged dense matrix");
    for (Index j = 0; j < c; ++j) {
      if (rows[i][j] != 0) entries.push_back({i, j, rows[i][j]});
    }
  }
  return from_entries(r, c, entries);
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.is_zero(); });
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
  std::vector<MatrixEntry> out;
  out.reserve(nnz());
  for (Index j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, v] : columns_[j].terms()) out.push_back({i, j, v});
  }
  std::sort(out.begin(), out.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<std::vector<SparseVector::Term>> per_row(rows_);
  for (Index j = 0; j < columns_.size(); ++j) {
    for (const auto& [i, v] : columns_[j].terms()) per_row[i].emplace_back(j, v);
  }
  std::vector<SparseVector> out;
  out.reserve(rows_);
  // Column indices are visited in increasing order, so each row is already sorted.
  for (auto& terms : per_row) {
    SparseVector r = SparseVector::from_terms(cols(), std::move(terms));
    out.push_back(std::move(r));
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  return from_columns(cols(), row_vectors());
}

SparseMatrix SparseMatrix::select_columns(std::span<const Index> cols) const {
  SparseMatrix m;
  m.rows_ = rows_;
  m.columns_.reserve(cols.size());
  for (Index j : cols) m.columns_.push_back(columns_.at(j));
  return m;
}

SparseMatrix SparseMatrix::select_rows(std::span<const Index> rows) const {
  std::vector<Index> all(cols());
  for (Index j = 0; j < all.size(); ++j) all[j] = j;
  return block(rows, all);
}

SparseMatrix SparseMatrix::block(std::span<const Index> rows, std::span<const Index> cols) const {
  constexpr Index kAbsent = static_cast<Index>(-1);
  std::vector<Index> row_map(rows_, kAbsent);
  for (Index k = 0; k < rows.size(); ++k) {
    if (rows[k] >= rows_) throw InputError("block row out of range");
    row_map[rows[k]] = k;
  }
  SparseMatrix m;
  m.rows_ = rows.size();
  m.columns_.reserve(cols.size());
  for (Index j : cols) {
    std::vector<SparseVector::Term> terms;
    for (const auto& [i, v] : columns_.at(j).terms()) {
      if (row_map[i] != kAbsent) terms.emplace_back(row_map[i], v);
    }
    m.columns_.push_back(SparseVector::from_terms(rows.size(), std::move(terms)));
  }
  return m;
}

SparseMatrix SparseMatrix::append_columns(const SparseMatrix& other) const {
  if (other.rows_ != rows_) throw InputError("row count mismatch in column append");
  SparseMatrix m = *this;
  m.columns_.insert(m.columns_.end(), other.columns_.begin(), other.columns_.end());
  return m;
}

SparseVector SparseMatrix::operator*(const SparseVector& x) const {
  if (x.dim() != cols()) throw InputError("dimension mismatch in matrix-vector product");
  std::vector<SparseVector::Term> acc;
  for (const auto& [j, xj] : x.terms()) {
    for (const auto& [i, v] : columns_[j].terms()) acc.emplace_back(i, v * xj);
  }
  return SparseVector::from_terms(rows_, std::move(acc));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("dimension mismatch in matrix product");
  SparseMatrix m;
  m.rows_ = a.rows();
  m.columns_.reserve(b.cols());
  for (const auto& col : b.columns_) m.columns_.push_back(a * col);
  return m;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("dimension mismatch in matrix sum");
  SparseMatrix m = a;
  for (Index j = 0; j < m.cols(); ++j) m.columns_[j].axpy(1, b.columns_[j]);
  return m;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("dimension mismatch in matrix difference");
  SparseMatrix m = a;
  for (Index j = 0; j < m.cols(); ++j) m.columns_[j].axpy(-1, b.columns_[j]);
  return m;
}

SparseMatrix operator*(const Rational& a, const SparseMatrix& m) {
  SparseMatrix r = m;
  for (auto& c : r.columns_) c.scale(a);
  return r;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.columns_ == b.columns_;
}

}  // namespace s1calc
