#include "s1calc/split.hpp"

#include "s1calc/errors.hpp"

namespace s1calc {

SplitS1Complex::SplitS1Complex(S1Complex complex, std::vector<Part> parts, SparseVector unit)
    : complex_(std::move(complex)), parts_(std::move(parts)), unit_(std::move(unit)) {
  if (parts_.size() != complex_.size()) throw InputError("partition does not cover the basis");
  if (unit_.dim() != complex_.size()) throw InputError("unit has the wrong dimension");
  for (Index i = 0; i < parts_.size(); ++i) (parts_[i] == Part::Zero ? zero_ : plus_).push_back(i);
}

SparseMatrix SplitS1Complex::connecting(int r) const { return complex_.delta(r).block(zero_, plus_); }

SplitValidationReport verify_splitting(const SplitS1Complex& s) {
  SplitValidationReport report;
  report.relations = verify_s1_relations(s.complex());
  const S1Complex& c = s.complex();
  for (int r = 0; r <= c.truncation(); ++r) {
    for (const auto& e : c.delta(r).entries()) {
      if (s.part_of(e.col) != Part::Zero) continue;
      const std::string edge = "delta^" + std::to_string(r) + " " + c.generator(e.col).name + " -> " +
                               c.generator(e.row).name;
      if (r > 0) report.violations.push_back(edge + ": higher operator is nonzero on C_0");
      else if (s.part_of(e.row) != Part::Zero) report.violations.push_back(edge + ": C_0 is not a subcomplex");
    }
  }
  const SparseVector& e = s.unit();
  if (e.is_zero()) {
    report.violations.push_back("unit is zero");
    return report;
  }
  for (const auto& [i, v] : e.terms()) {
    if (s.part_of(i) != Part::Zero) report.violations.push_back("unit has a C_+ component " + c.generator(i).name);
    if (c.degree_of(i) != 0) report.violations.push_back("unit has a component of nonzero degree " + c.generator(i).name);
  }
  if (!report.violations.empty()) return report;
  if (!(c.delta(0) * e).is_zero()) {
    report.violations.push_back("unit is not delta^0-closed");
    return report;
  }
  const GradedComplex zero = s.zero_part().zeroth();
  if (in_span(zero.coboundaries(0), restrict_to(e, s.zero_indices()))) report.violations.push_back("unit is exact in C_0");
  return report;
}

UnitProjection::UnitProjection(const SplitS1Complex& s) : ambient_(s.complex().size()) {
  const S1Complex& c = s.complex();
  for (Index i : s.zero_indices()) {
    if (c.degree_of(i) == 0) zero_degree0_.push_back(i);
  }
  const GradedComplex zero = s.zero_part().zeroth();
  const auto& local0 = zero.indices_in_degree(0);
  // Both spaces in the coordinates of zero_degree0_ (which enumerates local0 in order).
  const SparseMatrix z = kernel_basis(zero.block(0));
  const SparseMatrix b = image_basis(zero.block(-1));
  std::vector<Index> ambient_of_local;
  for (Index l : local0) ambient_of_local.push_back(s.zero_indices()[l]);
  const SparseVector e = restrict_to(s.unit(), ambient_of_local);
  h0_ = Subquotient(z, b, SparseMatrix::from_columns(local0.size(), {e}));
}

Rational UnitProjection::operator()(const SparseVector& v) const {
  if (v.dim() != ambient_) throw InputError("vector dimension does not match the complex");
  const auto m = h0_.classify(restrict_to(v, zero_degree0_));
  if (m.kind == Subquotient::Kind::NotInZ) throw InputError("projection of a non-closed chain");
  return m.kind == Subquotient::Kind::InB ? Rational(0) : m.coordinates.at(0);
}

}  // namespace s1calc
