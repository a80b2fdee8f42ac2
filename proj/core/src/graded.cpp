#include "s1calc/graded.hpp"

#include <string>

#include "s1calc/errors.hpp"

namespace s1calc {

GradedComplex::GradedComplex(std::vector<int> degrees, SparseMatrix differential)
    : degrees_(std::move(degrees)), differential_(std::move(differential)) {
  if (differential_.rows() != degrees_.size() || differential_.cols() != degrees_.size()) {
    throw InputError("differential does not match basis size");
  }
  for (const auto& e : differential_.entries()) {
    if (degrees_[e.row] != degrees_[e.col] + 1) {
      throw InputError("differential entry (" + std::to_string(e.col) + " -> " + std::to_string(e.row) +
                       ") does not raise degree by one");
    }
  }
  for (Index i = 0; i < degrees_.size(); ++i) by_degree_[degrees_[i]].push_back(i);
}

std::vector<int> GradedComplex::degrees_present() const {
  std::vector<int> out;
  for (const auto& [d, idx] : by_degree_) out.push_back(d);
  return out;
}

const std::vector<Index>& GradedComplex::indices_in_degree(int d) const {
  static const std::vector<Index> kEmpty;
  auto it = by_degree_.find(d);
  return it == by_degree_.end() ? kEmpty : it->second;
}

SparseMatrix GradedComplex::block(int d) const {
  return differential_.block(indices_in_degree(d + 1), indices_in_degree(d));
}

SparseMatrix embed_columns(const SparseMatrix& local, const std::vector<Index>& indices, Index ambient) {
  std::vector<SparseVector> cols;
  cols.reserve(local.cols());
  for (const auto& c : local.columns()) {
    std::vector<SparseVector::Term> terms;
    terms.reserve(c.nnz());
    for (const auto& [i, v] : c.terms()) terms.emplace_back(indices[i], v);
    cols.push_back(SparseVector::from_terms(ambient, std::move(terms)));
  }
  return SparseMatrix::from_columns(ambient, std::move(cols));
}

SparseVector restrict_to(const SparseVector& v, const std::vector<Index>& indices) {
  std::vector<SparseVector::Term> terms;
  // indices are ascending, so a merge suffices
  std::size_t k = 0;
  for (const auto& [i, val] : v.terms()) {
    while (k < indices.size() && indices[k] < i) ++k;
    if (k < indices.size() && indices[k] == i) terms.emplace_back(k, val);
  }
  return SparseVector::from_terms(indices.size(), std::move(terms));
}

SparseMatrix GradedComplex::cocycles(int d) const {
  return embed_columns(kernel_basis(block(d)), indices_in_degree(d), size());
}

SparseMatrix GradedComplex::coboundaries(int d) const {
  // image of C^{d-1} -> C^d, columns already expressed on the degree-d indices
  const SparseMatrix img = image_basis(block(d - 1));
  return embed_columns(img, indices_in_degree(d), size());
}

std::size_t CohomologyReport::dimension(int degree) const {
  auto it = groups.find(degree);
  return it == groups.end() ? 0 : it->second.dimension();
}

CohomologyGroup cohomology_in_degree(const GradedComplex& complex, int degree) {
  return CohomologyGroup{degree, Subquotient(complex.cocycles(degree), complex.coboundaries(degree))};
}

CohomologyReport cohomology(const GradedComplex& complex, int lo, int hi) {
  CohomologyReport report;
  for (int d = lo; d <= hi; ++d) report.groups.emplace(d, cohomology_in_degree(complex, d));
  return report;
}

CohomologyReport cohomology(const GradedComplex& complex) {
  CohomologyReport report;
  for (int d : complex.degrees_present()) report.groups.emplace(d, cohomology_in_degree(complex, d));
  return report;
}

SparseMatrix induced_map(const SparseMatrix& chain_map, const CohomologyGroup& source, const CohomologyGroup& target) {
  const SparseMatrix& reps = source.representatives();
  std::vector<SparseVector> images;
  images.reserve(reps.cols());
  for (const auto& r : reps.columns()) images.push_back(chain_map * r);
  const auto classes = target.space.classify_many(images);
  std::vector<SparseVector> cols;
  cols.reserve(classes.size());
  for (const auto& m : classes) {
    if (m.kind == Subquotient::Kind::NotInZ) throw InvariantViolation("chain map does not send cocycles to cocycles");
    cols.push_back(m.coordinates);
  }
  return SparseMatrix::from_columns(target.dimension(), std::move(cols));
}

}  // namespace s1calc
