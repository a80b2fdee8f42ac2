#include "s1calc/morphism.hpp"

#include <algorithm>
#include <string>

#include "s1calc/errors.hpp"

namespace s1calc {

namespace {

bool has_trivial_higher_structure(const S1Complex& c) {
  for (int r = 1; r <= c.truncation(); ++r) {
    if (!c.delta(r).is_zero()) return false;
  }
  return true;
}

void check_degrees(const S1Complex& source, const S1Complex& target, const SparseMatrix& m, int order, int shift,
                   std::vector<DegreeViolation>& out) {
  for (const auto& e : m.entries()) {
    if (target.degree_of(e.row) != source.degree_of(e.col) + shift) out.push_back({order, e.col, e.row});
  }
}

}  // namespace

S1Morphism::S1Morphism(S1Complex source, S1Complex target, std::vector<SparseMatrix> components, int shift)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)),
      shift_(shift),
      zero_(target_.size(), source_.size()) {
  if (source_.truncation() != target_.truncation()) throw InputError("morphism between different truncations");
  if (components_.size() != static_cast<std::size_t>(source_.truncation() + 1)) {
    throw InputError("morphism needs exactly N + 1 components");
  }
  for (const auto& m : components_) {
    if (m.rows() != target_.size() || m.cols() != source_.size()) throw InputError("morphism component has wrong shape");
  }
}

const SparseMatrix& S1Morphism::component(int r) const {
  if (r < 0) throw InputError("negative component order");
  if (r > truncation()) return zero_;
  return components_[static_cast<std::size_t>(r)];
}

S1Morphism identity_morphism(const S1Complex& c) {
  std::vector<SparseMatrix> comps{SparseMatrix::identity(c.size())};
  for (int r = 1; r <= c.truncation(); ++r) comps.emplace_back(c.size(), c.size());
  return S1Morphism(c, c, std::move(comps));
}

S1Morphism zero_morphism(const S1Complex& source, const S1Complex& target) {
  std::vector<SparseMatrix> comps(static_cast<std::size_t>(source.truncation() + 1),
                                  SparseMatrix(target.size(), source.size()));
  return S1Morphism(source, target, std::move(comps));
}

bool MorphismReport::valid() const {
  return degree_violations.empty() &&
         std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.holds; });
}

MorphismReport verify_morphism(const S1Morphism& phi) {
  const S1Complex& c = phi.source();
  const S1Complex& d = phi.target();
  const Rational sign = phi.shift() % 2 == 0 ? 1 : -1;
  MorphismReport report;
  for (int r = 0; r <= phi.truncation(); ++r) {
    check_degrees(c, d, phi.component(r), r, phi.shift() - 2 * r, report.degree_violations);
  }
  for (int k = 0; k <= phi.truncation(); ++k) {
    SparseMatrix sum(d.size(), c.size());
    for (int i = 0; i <= k; ++i) {
      sum = sum + phi.component(i) * c.delta(k - i) - sign * (d.delta(k - i) * phi.component(i));
    }
    const bool holds = sum.is_zero();
    report.relations.push_back({k, holds, std::move(sum)});
  }
  return report;
}

MorphismReport verify_homotopy(const S1Homotopy& h) {
  const S1Morphism& phi = h.from;
  const S1Morphism& psi = h.to;
  if (!(phi.source() == psi.source()) || !(phi.target() == psi.target())) {
    throw InputError("homotopic morphisms must share source and target");
  }
  if (phi.shift() != 0 || psi.shift() != 0) throw InputError("homotopies are supported between degree-0 morphisms");
  const S1Complex& c = phi.source();
  const S1Complex& d = phi.target();
  if (h.components.size() != static_cast<std::size_t>(c.truncation() + 1)) {
    throw InputError("homotopy needs exactly N + 1 components");
  }
  MorphismReport report;
  for (int r = 0; r <= c.truncation(); ++r) {
    const auto& m = h.components[static_cast<std::size_t>(r)];
    if (m.rows() != d.size() || m.cols() != c.size()) throw InputError("homotopy component has wrong shape");
    check_degrees(c, d, m, r, -2 * r - 1, report.degree_violations);
  }
  for (int k = 0; k <= c.truncation(); ++k) {
    SparseMatrix sum = phi.component(k) - psi.component(k);
    for (int i = 0; i <= k; ++i) {
      const auto& hi = h.components[static_cast<std::size_t>(i)];
      sum = sum - hi * c.delta(k - i) - d.delta(k - i) * hi;
    }
    const bool holds = sum.is_zero();
    report.relations.push_back({k, holds, std::move(sum)});
  }
  return report;
}

S1Morphism compose(const S1Morphism& phi, const S1Morphism& psi) {
  if (!(psi.target() == phi.source())) throw InputError("cannot compose: target and source differ");
  std::vector<SparseMatrix> comps;
  for (int k = 0; k <= phi.truncation(); ++k) {
    SparseMatrix sum(phi.target().size(), psi.source().size());
    for (int i = 0; i <= k; ++i) sum = sum + phi.component(i) * psi.component(k - i);
    comps.push_back(std::move(sum));
  }
  S1Morphism out(psi.source(), phi.target(), std::move(comps), phi.shift() + psi.shift());
  if (!verify_morphism(out).valid()) throw InvariantViolation("composite of morphisms is not a morphism");
  return out;
}

SparseMatrix plus_map(const S1Morphism& phi, int k) {
  const Index n = phi.source().size();
  const Index m = phi.target().size();
  std::vector<MatrixEntry> entries;
  for (int r = 0; r <= std::min(k, phi.truncation()); ++r) {
    const auto comp = phi.component(r).entries();
    for (int i = r; i <= k; ++i) {
      for (const auto& e : comp) {
        entries.push_back({static_cast<Index>(i - r) * m + e.row, static_cast<Index>(i) * n + e.col, e.value});
      }
    }
  }
  const Index levels = static_cast<Index>(k + 1);
  return SparseMatrix::from_entries(levels * m, levels * n, entries);
}

std::size_t PhiKMap::rank(int source_degree) const {
  auto it = blocks.find(source_degree);
  return it == blocks.end() ? 0 : s1calc::rank(it->second.matrix);
}

SparseVector phi_k_value(const S1Morphism& phi, const WitnessedCycle& z_witness) {
  if (!z_witness.boundary().is_zero()) throw InputError("Phi^k needs a closed witness");
  const auto chain = z_witness.chain();
  SparseVector out(phi.target().size());
  for (std::size_t i = 0; i < chain.size(); ++i) out.axpy(1, phi.component(static_cast<int>(i)) * chain[i]);
  return out;
}

PhiKMap phi_k(const S1Morphism& phi, int k) {
  const S1Complex& c = phi.source();
  const S1Complex& d = phi.target();
  if (!has_trivial_higher_structure(d)) throw InputError("Phi^k needs a target with trivial higher structure");
  if (k < 0 || k > c.truncation()) throw InputError("Phi^k needs 0 <= k <= N");
  const FiltrationSpace z = z_space(c, k);
  const FiltrationSpace b0 = b_space(c, 0);
  const GradedComplex target = d.zeroth();
  PhiKMap map;
  map.k = k;
  map.shift = phi.shift();
  std::optional<FilteredPlusComplex> previous;
  SparseMatrix previous_map;
  if (k > 0) {
    previous.emplace(c, k - 1);
    previous_map = plus_map(phi, k - 1);
  }
  for (int deg : c.zeroth().degrees_present()) {
    const int t = deg + phi.shift() - 2 * k;
    SparseMatrix indeterminacy = target.coboundaries(t);
    if (previous) {
      const SparseMatrix closed = previous->complex().cocycles(t - phi.shift());
      std::vector<SparseVector> images;
      for (const auto& col : closed.columns()) images.push_back((previous_map * col).slice(0, d.size()));
      indeterminacy = indeterminacy.append_columns(SparseMatrix::from_columns(d.size(), std::move(images)));
    }
    PhiKMap::Block block{deg, Subquotient(z.in_degree(deg), b0.in_degree(deg)),
                         Subquotient(target.cocycles(t), indeterminacy), SparseMatrix()};
    std::vector<SparseVector> values;
    for (const auto& rep : block.domain.quotient_basis().columns()) {
      const auto w = find_z_witness(c, k, rep);
      if (!w) throw InvariantViolation("quotient representative of Z_k has no witness");
      values.push_back(phi_k_value(phi, *w));
    }
    std::vector<SparseVector> cols;
    for (auto& m : block.codomain.classify_many(values)) {
      if (m.kind == Subquotient::Kind::NotInZ) throw InvariantViolation("Phi^k value is not closed");
      cols.push_back(std::move(m.coordinates));
    }
    block.matrix = SparseMatrix::from_columns(block.codomain.dimension(), std::move(cols));
    map.blocks.emplace(deg, std::move(block));
  }
  return map;
}

bool FunctorialityReport::valid() const {
  return std::all_of(levels.begin(), levels.end(),
                     [](const Level& l) { return l.z_preserved && l.b_preserved && l.delta_commutes; });
}

FunctorialityReport verify_functoriality(const S1Morphism& phi) {
  if (phi.shift() != 0) throw InputError("functoriality is checked for degree-0 morphisms");
  const S1Complex& c = phi.source();
  const S1Complex& d = phi.target();
  const SparseMatrix& phi0 = phi.component(0);
  FunctorialityReport report;
  for (int k = 0; k <= c.truncation(); ++k) {
    FunctorialityReport::Level level;
    level.k = k;
    level.z_preserved = span_contains(z_space(d, k).all(), phi0 * z_space(c, k).all());
    level.b_preserved = span_contains(b_space(d, k).all(), phi0 * b_space(c, k).all());
    if (k >= 1 && 2 * k <= c.truncation()) {
      const FiltrationSpace z_prev = z_space(c, k - 1);
      const FiltrationSpace b_target = b_space(d, k - 1);
      for (const auto& [deg, ws] : z_prev.witnesses) {
        const SparseMatrix allowed = b_target.in_degree(deg + 1 - 2 * k);
        for (const auto& w : ws) {
          const SparseVector lhs = phi0 * delta_k_value(c, w);
          const auto image_witness = find_z_witness(d, k - 1, phi0 * w.leading());
          if (!image_witness) {
            level.delta_commutes = false;
            continue;
          }
          if (!in_span(allowed, lhs - delta_k_value(d, *image_witness))) level.delta_commutes = false;
        }
      }
    }
    report.levels.push_back(level);
  }
  return report;
}

std::map<int, SparseMatrix> induced_plus_cohomology_map(const S1Morphism& phi, int level) {
  const FilteredPlusComplex fc = build_filtered_plus(phi.source(), level);
  const FilteredPlusComplex fd = build_filtered_plus(phi.target(), level);
  const SparseMatrix m = plus_map(phi, level);
  std::map<int, SparseMatrix> out;
  for (int t : fc.complex().degrees_present()) {
    const auto source = cohomology_in_degree(fc.complex(), t);
    const auto target = cohomology_in_degree(fd.complex(), t + phi.shift());
    out.emplace(t, induced_map(m, source, target));
  }
  return out;
}

bool ReconstructionReport::valid() const {
  return std::all_of(filtration_preserved.begin(), filtration_preserved.end(), [](bool b) { return b; });
}

ReconstructionReport reconstruction_diagnostic(const S1Morphism& phi) {
  const int n = phi.truncation();
  const FilteredPlusComplex fc = build_filtered_plus(phi.source(), n);
  const FilteredPlusComplex fd = build_filtered_plus(phi.target(), n);
  const SparseMatrix m = plus_map(phi, n);
  ReconstructionReport report;
  for (int j = 0; j <= n; ++j) {
    const FilteredPlusComplex sub_c(phi.source(), j);
    const FilteredPlusComplex sub_d(phi.target(), j);
    bool ok = true;
    for (int t : sub_c.complex().degrees_present()) {
      // F^j sits in F^N as an index prefix, so only the dimension changes.
      std::vector<SparseVector> images;
      const SparseMatrix source_cycles = sub_c.complex().cocycles(t);
      for (const auto& col : source_cycles.columns()) {
        images.push_back(m * SparseVector::from_terms(fc.size(), col.terms()));
      }
      const int u = t + phi.shift();
      std::vector<SparseVector> allowed;
      const SparseMatrix target_cycles = sub_d.complex().cocycles(u);
      for (const auto& col : target_cycles.columns()) {
        allowed.push_back(SparseVector::from_terms(fd.size(), col.terms()));
      }
      SparseMatrix target = SparseMatrix::from_columns(fd.size(), std::move(allowed))
                                .append_columns(fd.complex().coboundaries(u));
      if (!span_contains(target, SparseMatrix::from_columns(fd.size(), std::move(images)))) ok = false;
    }
    report.filtration_preserved.push_back(ok);
  }
  return report;
}

}  // namespace s1calc
