#pragma once

#include <string>
#include <vector>

#include "s1calc/graded.hpp"

namespace s1calc {

struct Generator {
  std::string name;
  int degree = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// A Z-graded basis carrying operators delta^0, ..., delta^N, where delta^r has
// degree 1 - 2r. Construction checks shapes and name uniqueness only; the
// degree constraints and the relations are checked by verify_s1_relations.
class S1Complex {
 public:
  S1Complex() = default;
  S1Complex(std::vector<Generator> basis, std::vector<SparseMatrix> operators);

  Index size() const { return basis_.size(); }
  int truncation() const { return static_cast<int>(operators_.size()) - 1; }
  const std::vector<Generator>& basis() const { return basis_; }
  const Generator& generator(Index i) const { return basis_.at(i); }
  int degree_of(Index i) const { return basis_.at(i).degree; }
  std::vector<int> degrees() const;
  // Throws InputError for unknown names.
  Index index_of(const std::string& name) const;

  const std::vector<SparseMatrix>& operators() const { return operators_; }
  // delta^r; the zero matrix for r > N.
  const SparseMatrix& delta(int r) const;

  // The cochain complex (C, delta^0).
  GradedComplex zeroth() const;

  friend bool operator==(const S1Complex&, const S1Complex&) = default;

 private:
  std::vector<Generator> basis_;
  std::vector<SparseMatrix> operators_;
  SparseMatrix zero_;
};

// Keeps only delta^0..delta^n (n <= N).
S1Complex truncate(const S1Complex& c, int n);
// The complex spanned by the given generators, with operators restricted to them.
S1Complex restrict_complex(const S1Complex& c, const std::vector<Index>& indices);

struct RelationCheck {
  int k = 0;
  bool holds = true;
  SparseMatrix residual;  // sum_{i+j=k} delta^i delta^j
};

struct DegreeViolation {
  int order = 0;
  Index from = 0;
  Index to = 0;
};

struct S1ValidationReport {
  std::vector<RelationCheck> relations;
  std::vector<DegreeViolation> degree_violations;
  bool valid() const;
};

S1ValidationReport verify_s1_relations(const S1Complex& c);

// F^k C^+ = C (x) <1, u^-1, ..., u^-k> with delta^{S1} = sum_r u^r delta^r, where
// u lowers the power of u^-1 and kills u^0. Basis element (g, i) stands for
// g u^-i, has degree |g| - 2i and index i * |C| + g.
class FilteredPlusComplex {
 public:
  FilteredPlusComplex(const S1Complex& source, int level);

  const S1Complex& source() const { return source_; }
  int level() const { return level_; }
  Index index(Index generator, int power) const { return static_cast<Index>(power) * source_.size() + generator; }
  Index generator_of(Index i) const { return i % source_.size(); }
  int power_of(Index i) const { return static_cast<int>(i / source_.size()); }
  const GradedComplex& complex() const { return complex_; }
  const SparseMatrix& differential() const { return complex_.differential(); }
  Index size() const { return complex_.size(); }

  // Packs per-power components (index i = power) into one vector.
  SparseVector pack(const std::vector<SparseVector>& by_power) const;
  std::vector<SparseVector> unpack(const SparseVector& v) const;

 private:
  S1Complex source_;
  int level_ = 0;
  GradedComplex complex_;
};

// Throws InputError when k > N.
FilteredPlusComplex build_filtered_plus(const S1Complex& c, int k);

// delta^{S1} applied directly through the operators to a chain given by its
// u^-i components (by_power[i]); result truncated to powers >= 0.
std::vector<SparseVector> apply_s1_differential(const S1Complex& c, const std::vector<SparseVector>& by_power);

}  // namespace s1calc
