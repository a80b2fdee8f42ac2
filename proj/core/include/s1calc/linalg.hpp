#pragma once

#include <optional>
#include <span>
#include <vector>

#include "s1calc/sparse.hpp"

namespace s1calc {

struct RowEchelon {
  SparseMatrix reduced;       // same shape as the input; zero rows at the bottom
  std::vector<Index> pivots;  // strictly increasing pivot columns
};

// Reduced row-echelon form over Q. The result is unique, hence deterministic.
RowEchelon rref(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

// Columns form a basis of ker(m): one vector per non-pivot column c, with
// coordinate 1 at c and zero at every other non-pivot column.
SparseMatrix kernel_basis(const SparseMatrix& m);

// The pivot columns of m, i.e. the leftmost maximal independent subset.
SparseMatrix image_basis(const SparseMatrix& m);
std::vector<Index> pivot_columns(const SparseMatrix& m);

// Some x with m * x == b, or nullopt when b is not in the column span of m.
// Free variables are set to zero.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b);
std::vector<std::optional<SparseVector>> solve_many(const SparseMatrix& m, std::span<const SparseVector> rhs);

bool in_span(const SparseMatrix& generators, const SparseVector& v);
// span(small) is contained in span(big).
bool span_contains(const SparseMatrix& big, const SparseMatrix& small);

// Z/B for B <= Z <= Q^ambient, both given by spanning columns.
class Subquotient {
 public:
  enum class Kind { NotInZ, InB, Class };
  struct Membership {
    Kind kind;
    SparseVector coordinates;  // w.r.t. quotient_basis(); zero unless kind == Class
  };

  Subquotient() = default;
  // Throws InputError unless span(b_gens) <= span(z_gens).
  Subquotient(SparseMatrix z_gens, SparseMatrix b_gens);
  // As above, but the quotient basis starts with `preferred` (which must be
  // independent modulo B and lie in Z) and is completed deterministically.
  Subquotient(SparseMatrix z_gens, SparseMatrix b_gens, const SparseMatrix& preferred);

  Index ambient_dim() const { return ambient_; }
  std::size_t dimension() const { return quotient_basis_.cols(); }
  const SparseMatrix& z_gens() const { return z_gens_; }
  const SparseMatrix& b_gens() const { return b_gens_; }
  const SparseMatrix& b_basis() const { return b_basis_; }
  // Representatives in Z of a basis of Z/B.
  const SparseMatrix& quotient_basis() const { return quotient_basis_; }

  Membership classify(const SparseVector& v) const;
  std::vector<Membership> classify_many(std::span<const SparseVector> vs) const;

 private:
  void build(const SparseMatrix* preferred);

  Index ambient_ = 0;
  SparseMatrix z_gens_;
  SparseMatrix b_gens_;
  SparseMatrix b_basis_;
  SparseMatrix quotient_basis_;
};

}  // namespace s1calc
