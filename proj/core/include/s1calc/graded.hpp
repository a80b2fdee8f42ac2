#pragma once

#include <map>
#include <vector>

#include "s1calc/linalg.hpp"

namespace s1calc {

// A finite-dimensional Z-graded cochain complex: a basis with degrees and a
// differential of degree +1 (column j is the image of basis vector j).
class GradedComplex {
 public:
  GradedComplex() = default;
  // Throws InputError if the differential has an entry of the wrong degree.
  GradedComplex(std::vector<int> degrees, SparseMatrix differential);

  Index size() const { return degrees_.size(); }
  int degree_of(Index i) const { return degrees_.at(i); }
  const std::vector<int>& degrees() const { return degrees_; }
  const SparseMatrix& differential() const { return differential_; }

  // Distinct degrees that carry basis vectors, ascending.
  std::vector<int> degrees_present() const;
  const std::vector<Index>& indices_in_degree(int d) const;
  // The component C^d -> C^{d+1} in local coordinates.
  SparseMatrix block(int d) const;

  // Cocycles / coboundaries of degree d, as ambient columns.
  SparseMatrix cocycles(int d) const;
  SparseMatrix coboundaries(int d) const;

 private:
  std::vector<int> degrees_;
  SparseMatrix differential_;
  std::map<int, std::vector<Index>> by_degree_;
};

// Columns given in the local coordinates of `indices`, placed into the ambient space.
SparseMatrix embed_columns(const SparseMatrix& local, const std::vector<Index>& indices, Index ambient);
SparseVector restrict_to(const SparseVector& v, const std::vector<Index>& indices);

struct CohomologyGroup {
  int degree = 0;
  Subquotient space;  // Z^d / B^d in ambient coordinates
  std::size_t dimension() const { return space.dimension(); }
  const SparseMatrix& representatives() const { return space.quotient_basis(); }
};

struct CohomologyReport {
  std::map<int, CohomologyGroup> groups;
  std::size_t dimension(int degree) const;
};

// Cohomology in every degree of [lo, hi].
CohomologyReport cohomology(const GradedComplex& complex, int lo, int hi);
// Cohomology in every degree carrying basis vectors.
CohomologyReport cohomology(const GradedComplex& complex);
CohomologyGroup cohomology_in_degree(const GradedComplex& complex, int degree);

// Matrix of the map induced on cohomology by a degree-`shift` chain map
// `chain_map` from `source` to `target`, in the quotient bases of the groups.
SparseMatrix induced_map(const SparseMatrix& chain_map, const CohomologyGroup& source, const CohomologyGroup& target);

}  // namespace s1calc
