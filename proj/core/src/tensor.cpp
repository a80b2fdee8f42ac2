#include "s1calc/tensor.hpp"

#include <algorithm>

#include "s1calc/errors.hpp"

namespace s1calc {

namespace {

SparseVector tensor_vectors(const SparseVector& a, const SparseVector& b) {
  std::vector<SparseVector::Term> terms;
  terms.reserve(a.nnz() * b.nnz());
  for (const auto& [i, x] : a.terms()) {
    for (const auto& [j, y] : b.terms()) terms.emplace_back(i * b.dim() + j, x * y);
  }
  return SparseVector::from_terms(a.dim() * b.dim(), std::move(terms));
}

}  // namespace

S1Complex tensor(const S1Complex& c, const S1Complex& d) {
  const int n = std::min(c.truncation(), d.truncation());
  const Index nc = c.size(), nd = d.size();
  std::vector<Generator> basis;
  basis.reserve(nc * nd);
  for (Index a = 0; a < nc; ++a) {
    for (Index b = 0; b < nd; ++b) {
      basis.push_back({c.generator(a).name + "⊗" + d.generator(b).name, c.degree_of(a) + d.degree_of(b)});
    }
  }
  std::vector<SparseMatrix> ops;
  for (int r = 0; r <= n; ++r) {
    std::vector<MatrixEntry> entries;
    for (const auto& e : c.delta(r).entries()) {
      for (Index b = 0; b < nd; ++b) entries.push_back({e.row * nd + b, e.col * nd + b, e.value});
    }
    for (const auto& e : d.delta(r).entries()) {
      for (Index a = 0; a < nc; ++a) {
        const Rational sign = c.degree_of(a) % 2 == 0 ? 1 : -1;
        entries.push_back({a * nd + e.row, a * nd + e.col, sign * e.value});
      }
    }
    ops.push_back(SparseMatrix::from_entries(nc * nd, nc * nd, entries));
  }
  return S1Complex(std::move(basis), std::move(ops));
}

SplitS1Complex tensor_split(const SplitS1Complex& s, const SplitS1Complex& t) {
  S1Complex product = tensor(s.complex(), t.complex());
  std::vector<Part> parts;
  parts.reserve(product.size());
  for (Index a = 0; a < s.complex().size(); ++a) {
    for (Index b = 0; b < t.complex().size(); ++b) {
      parts.push_back(s.part_of(a) == Part::Zero && t.part_of(b) == Part::Zero ? Part::Zero : Part::Plus);
    }
  }
  return SplitS1Complex(std::move(product), std::move(parts), tensor_vectors(s.unit(), t.unit()));
}

SparseMatrix tensor_with_vector(const S1Complex& c, const S1Complex& d, const SparseVector& e) {
  if (e.dim() != d.size()) throw InputError("vector dimension does not match the complex");
  std::vector<SparseVector> cols;
  cols.reserve(c.size());
  for (Index a = 0; a < c.size(); ++a) cols.push_back(tensor_vectors(SparseVector::unit(c.size(), a), e));
  return SparseMatrix::from_columns(c.size() * d.size(), std::move(cols));
}

}  // namespace s1calc
