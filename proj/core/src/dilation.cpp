#include "s1calc/dilation.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "s1calc/errors.hpp"

namespace s1calc {

namespace {

void require_level(const SplitS1Complex& s, int k) {
  if (k < 0 || k > s.truncation()) {
    throw InputError("level " + std::to_string(k) + " exceeds truncation " + std::to_string(s.truncation()));
  }
}

std::vector<Index> select_part(const SplitS1Complex& s, const FilteredPlusComplex& f, const std::vector<Index>& indices,
                               Part part, int max_power) {
  std::vector<Index> out;
  for (Index i : indices) {
    if (s.part_of(f.generator_of(i)) == part && f.power_of(i) <= max_power) out.push_back(i);
  }
  return out;
}

// Places block entries into a larger system at the given row/column offsets.
void put(std::vector<MatrixEntry>& out, const SparseMatrix& block, Index row_offset, Index col_offset,
         const Rational& scale = 1) {
  for (const auto& e : block.entries()) out.push_back({row_offset + e.row, col_offset + e.col, scale * e.value});
}

SparseVector gather(const SparseVector& local, Index offset, const std::vector<Index>& indices, Index ambient) {
  std::vector<SparseVector::Term> terms;
  for (const auto& [i, v] : local.terms()) {
    if (i >= offset && i < offset + indices.size()) terms.emplace_back(indices[i - offset], v);
  }
  return SparseVector::from_terms(ambient, std::move(terms));
}

// Among the columns of `chains` (vectors of F), the first whose connecting
// image projects nontrivially, normalized so the projection is 1.
std::optional<DilationWitness> first_projecting(const SplitS1Complex& s, const FilteredPlusComplex& f,
                                                const std::vector<SparseVector>& chains, int k) {
  const UnitProjection pi0(s);
  const Index n = s.complex().size();
  for (const auto& x : chains) {
    const SparseVector image = (f.differential() * x).slice(0, n);
    const Rational p = pi0(image);
    if (p == 0) continue;
    const Rational inv = 1 / p;
    DilationWitness w;
    w.k = k;
    w.chain = f.unpack(inv * x);
    w.unit_image = inv * image;
    w.projection = 1;
    return w;
  }
  return std::nullopt;
}

using Test = std::function<std::optional<DilationWitness>(int)>;

DilationReport scan(int n, const Test& test) {
  DilationReport report;
  report.truncation = n;
  for (int k = 0; k <= n; ++k) {
    auto w = test(k);
    if (!w) continue;
    report.order = k;
    report.witness = std::move(w);
    for (int j = k + 1; j <= n; ++j) {
      if (!test(j)) throw InvariantViolation("order test is not monotone at k = " + std::to_string(j));
    }
    break;
  }
  return report;
}

void require_scan_level(const SplitS1Complex& s, int n) {
  if (n < 0 || n > s.truncation()) throw InputError("scan bound exceeds the truncation");
}

std::optional<DilationWitness> torsion_test(const SplitS1Complex& s, const FilteredPlusComplex& f, int n, int k,
                                            DilationKind kind) {
  const auto& deg_m1 = f.complex().indices_in_degree(-1);
  const auto& deg_0 = f.complex().indices_in_degree(0);
  const auto x_cols = select_part(s, f, deg_m1, Part::Plus, n);
  const auto z_cols = select_part(s, f, f.complex().indices_in_degree(2 * k), Part::Plus, n - k - 1);
  const auto y_cols = kind == DilationKind::Dilation ? select_part(s, f, deg_m1, Part::Zero, n) : std::vector<Index>{};
  const auto closed_rows = select_part(s, f, deg_0, Part::Plus, n);
  const auto torsion_rows = select_part(s, f, f.complex().indices_in_degree(2 * k + 1), Part::Plus, n - k - 1);
  const auto unit_rows = select_part(s, f, deg_0, Part::Zero, n);
  const SparseMatrix& d = f.differential();
  const Index x0 = 0, z0 = x_cols.size(), y0 = z0 + z_cols.size();
  const Index cols = y0 + y_cols.size();
  const Index r1 = closed_rows.size(), r2 = r1 + torsion_rows.size();
  std::vector<MatrixEntry> entries;
  put(entries, d.block(closed_rows, x_cols), 0, x0);
  // u^{k+1} x: (g, p) -> (g, p - k - 1)
  for (Index c = 0; c < x_cols.size(); ++c) {
    const int p = f.power_of(x_cols[c]);
    if (p < k + 1) continue;
    const Index target = f.index(f.generator_of(x_cols[c]), p - k - 1);
    const auto it = std::lower_bound(torsion_rows.begin(), torsion_rows.end(), target);
    if (it == torsion_rows.end() || *it != target) throw InvariantViolation("torsion row missing");
    entries.push_back({r1 + static_cast<Index>(it - torsion_rows.begin()), x0 + c, Rational(1)});
  }
  put(entries, d.block(torsion_rows, z_cols), r1, z0, -1);
  if (kind == DilationKind::Semidilation) {
    const SparseMatrix system = SparseMatrix::from_entries(r2, cols, entries);
    std::vector<SparseVector> chains;
    const SparseMatrix kernel = kernel_basis(system);
    for (const auto& v : kernel.columns()) chains.push_back(gather(v, x0, x_cols, f.size()));
    return first_projecting(s, f, chains, k);
  }
  put(entries, d.block(unit_rows, x_cols), r2, x0);
  put(entries, d.block(unit_rows, y_cols), r2, y0);
  const SparseMatrix system = SparseMatrix::from_entries(r2 + unit_rows.size(), cols, entries);
  const SparseVector rhs = restrict_to(s.unit().embed(f.size(), 0), unit_rows).embed(system.rows(), r2);
  const auto sol = solve(system, rhs);
  if (!sol) return std::nullopt;
  DilationWitness w;
  w.k = k;
  const SparseVector x = gather(*sol, x0, x_cols, f.size());
  w.chain = f.unpack(x);
  w.unit_image = (d * x).slice(0, s.complex().size());
  w.projection = UnitProjection(s)(w.unit_image);
  return w;
}

}  // namespace

std::optional<DilationWitness> has_k_dilation(const SplitS1Complex& s, int k) {
  require_level(s, k);
  const auto w = find_b_witness(s.complex(), k, s.unit());
  if (!w) return std::nullopt;
  return DilationWitness{k, w->chain(), s.unit(), Rational(1)};
}

std::optional<DilationWitness> has_k_semidilation(const SplitS1Complex& s, int k) {
  require_level(s, k);
  const FilteredPlusComplex f = build_filtered_plus(s.complex(), k);
  const auto cols = select_part(s, f, f.complex().indices_in_degree(-1), Part::Plus, k);
  const auto rows = select_part(s, f, f.complex().indices_in_degree(0), Part::Plus, k);
  std::vector<SparseVector> chains;
  const SparseMatrix kernel = kernel_basis(f.differential().block(rows, cols));
  for (const auto& v : kernel.columns()) {
    chains.push_back(gather(v, 0, cols, f.size()));
  }
  return first_projecting(s, f, chains, k);
}

DilationReport order_of_dilation(const SplitS1Complex& s, int n) {
  require_scan_level(s, n);
  return scan(n, [&](int k) { return has_k_dilation(s, k); });
}

DilationReport order_of_semidilation(const SplitS1Complex& s, int n) {
  require_scan_level(s, n);
  return scan(n, [&](int k) { return has_k_semidilation(s, k); });
}

DilationReport order_via_torsion(const SplitS1Complex& s, int n, DilationKind kind) {
  require_scan_level(s, n);
  const FilteredPlusComplex f = build_filtered_plus(s.complex(), n);
  return scan(n, [&](int k) { return torsion_test(s, f, n, k, kind); });
}

DeltaKMap delta_plus_k(const SplitS1Complex& s, int k) { return delta_k(s.plus_part(), k); }

S1Morphism connecting_morphism(const SplitS1Complex& s) {
  std::vector<SparseMatrix> comps;
  for (int r = 0; r <= s.truncation(); ++r) comps.push_back(s.connecting(r));
  return S1Morphism(s.plus_part(), s.zero_part(), std::move(comps), 1);
}

PhiKMap delta_plus0_k(const SplitS1Complex& s, int k) { return phi_k(connecting_morphism(s), k); }

PhiKMap delta_partial_k(const SplitS1Complex& s, const S1Complex& d, const SparseMatrix& r, int k) {
  const S1Complex zero = s.zero_part();
  if (r.rows() != d.size() || r.cols() != zero.size()) throw InputError("restriction map has the wrong shape");
  if (d.truncation() > s.truncation()) throw InputError("target truncation exceeds the split complex's");
  for (const auto& e : r.entries()) {
    if (d.degree_of(e.row) != zero.degree_of(e.col)) throw InputError("restriction map does not preserve degree");
  }
  if (!(r * zero.delta(0) == d.delta(0) * r)) throw InputError("restriction map is not a cochain map");
  std::vector<SparseMatrix> ops(d.operators());
  while (static_cast<int>(ops.size()) <= s.truncation()) ops.emplace_back(d.size(), d.size());
  const S1Complex target(d.basis(), std::move(ops));
  std::vector<SparseMatrix> comps{r};
  for (int i = 1; i <= s.truncation(); ++i) comps.emplace_back(d.size(), zero.size());
  const S1Morphism restriction(zero, target, std::move(comps));
  return phi_k(compose(restriction, connecting_morphism(s)), k);
}

bool LesReport::exact() const {
  return std::all_of(nodes.begin(), nodes.end(), [](const LesNode& n) { return n.exact(); });
}

LesReport tautological_les(const SplitS1Complex& s, int n, int lo, int hi) {
  require_level(s, n);
  if (lo > hi) throw InputError("empty degree window");
  const FilteredPlusComplex full = build_filtered_plus(s.complex(), n);
  const FilteredPlusComplex zero = build_filtered_plus(s.zero_part(), n);
  const FilteredPlusComplex plus = build_filtered_plus(s.plus_part(), n);
  std::vector<Index> zero_in_full, plus_in_full;
  for (Index i = 0; i < zero.size(); ++i) zero_in_full.push_back(full.index(s.zero_indices()[zero.generator_of(i)], zero.power_of(i)));
  for (Index i = 0; i < plus.size(); ++i) plus_in_full.push_back(full.index(s.plus_indices()[plus.generator_of(i)], plus.power_of(i)));
  std::vector<MatrixEntry> inc, proj;
  for (Index i = 0; i < zero.size(); ++i) inc.push_back({zero_in_full[i], i, Rational(1)});
  for (Index i = 0; i < plus.size(); ++i) proj.push_back({i, plus_in_full[i], Rational(1)});
  const SparseMatrix inclusion = SparseMatrix::from_entries(full.size(), zero.size(), inc);
  const SparseMatrix projection = SparseMatrix::from_entries(plus.size(), full.size(), proj);
  const SparseMatrix connecting = full.differential().block(zero_in_full, plus_in_full);

  std::map<int, CohomologyGroup> hz, hf, hp;
  for (int t = lo - 1; t <= hi + 1; ++t) {
    hz.emplace(t, cohomology_in_degree(zero.complex(), t));
    hf.emplace(t, cohomology_in_degree(full.complex(), t));
    hp.emplace(t, cohomology_in_degree(plus.complex(), t));
  }
  std::map<int, SparseMatrix> mi, mp, mc;
  for (int t = lo - 1; t <= hi; ++t) {
    mi.emplace(t, induced_map(inclusion, hz.at(t), hf.at(t)));
    mp.emplace(t, induced_map(projection, hf.at(t), hp.at(t)));
    mc.emplace(t, induced_map(connecting, hp.at(t), hz.at(t + 1)));
  }
  LesReport report;
  report.level = n;
  auto node = [](LesNode::Space space, int t, std::size_t dim, const SparseMatrix& in, const SparseMatrix& out) {
    LesNode nd{space, t, dim, rank(in), rank(out), (out * in).is_zero()};
    return nd;
  };
  for (int t = lo; t <= hi; ++t) {
    report.nodes.push_back(node(LesNode::Space::Zero, t, hz.at(t).dimension(), mc.at(t - 1), mi.at(t)));
    report.nodes.push_back(node(LesNode::Space::Full, t, hf.at(t).dimension(), mi.at(t), mp.at(t)));
    report.nodes.push_back(node(LesNode::Space::Plus, t, hp.at(t).dimension(), mp.at(t), mc.at(t)));
  }
  return report;
}

}  // namespace s1calc
