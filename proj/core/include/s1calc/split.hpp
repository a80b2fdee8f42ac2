#pragma once

#include <string>
#include <vector>

#include "s1calc/s1complex.hpp"

namespace s1calc {

enum class Part { Zero, Plus };

// An S1-complex with a decomposition C = C_0 + C_+ of its basis and a unit e
// in C_0. Construction checks shapes only; see verify_splitting.
class SplitS1Complex {
 public:
  SplitS1Complex() = default;
  SplitS1Complex(S1Complex complex, std::vector<Part> parts, SparseVector unit);

  const S1Complex& complex() const { return complex_; }
  const std::vector<Part>& parts() const { return parts_; }
  Part part_of(Index i) const { return parts_.at(i); }
  const SparseVector& unit() const { return unit_; }
  int truncation() const { return complex_.truncation(); }

  // Ascending ambient indices of each part.
  const std::vector<Index>& zero_indices() const { return zero_; }
  const std::vector<Index>& plus_indices() const { return plus_; }

  // (C_0, delta_0) and (C_+, delta_+) as complexes in their own right.
  S1Complex zero_part() const { return restrict_complex(complex_, zero_); }
  S1Complex plus_part() const { return restrict_complex(complex_, plus_); }
  // delta^r_{+,0}: the C_0-component of delta^r on C_+ (local coordinates).
  SparseMatrix connecting(int r) const;

 private:
  S1Complex complex_;
  std::vector<Part> parts_;
  SparseVector unit_;
  std::vector<Index> zero_;
  std::vector<Index> plus_;
};

struct SplitValidationReport {
  S1ValidationReport relations;
  std::vector<std::string> violations;
  bool valid() const { return relations.valid() && violations.empty(); }
};

SplitValidationReport verify_splitting(const SplitS1Complex& s);

// pi_0: H^0(C_0, delta^0_0) -> <[e]>, reading the [e]-coordinate in the basis
// of H^0(C_0) that starts with [e] and is completed by pivot complement.
class UnitProjection {
 public:
  explicit UnitProjection(const SplitS1Complex& s);
  // v: ambient vector; only its degree-0 C_0 part is read, and that part must
  // be delta^0-closed (InputError otherwise).
  Rational operator()(const SparseVector& v) const;
  const Subquotient& h0() const { return h0_; }

 private:
  std::vector<Index> zero_degree0_;
  Index ambient_ = 0;
  Subquotient h0_;
};

}  // namespace s1calc
