#include "s1calc/spectral.hpp"

#include <algorithm>
#include <string>

#include "s1calc/errors.hpp"

namespace s1calc {

namespace {

std::optional<int> homogeneous_degree(const S1Complex& c, const SparseVector& v) {
  std::optional<int> d;
  for (const auto& [i, val] : v.terms()) {
    const int di = c.degree_of(i);
    if (d && *d != di) throw InputError("vector is not homogeneous");
    d = di;
  }
  return d;
}

void require_level(const S1Complex& c, int k) {
  if (k < 0 || k > c.truncation()) {
    throw InputError("level " + std::to_string(k) + " exceeds truncation " + std::to_string(c.truncation()));
  }
}

// Indices of F^k with the given total degree whose power is below `max_power`.
std::vector<Index> indices_below_power(const FilteredPlusComplex& f, int total_degree, int max_power) {
  std::vector<Index> out;
  for (Index i : f.complex().indices_in_degree(total_degree)) {
    if (f.power_of(i) < max_power) out.push_back(i);
  }
  return out;
}

}  // namespace

WitnessedCycle::WitnessedCycle(const S1Complex& c, std::vector<SparseVector> alpha, SparseVector boundary)
    : alpha_(std::move(alpha)), boundary_(std::move(boundary)) {
  if (alpha_.empty()) throw InputError("witness needs at least one component");
  const auto image = apply_s1_differential(c, chain());
  if (!(image.front() == boundary_)) throw InvariantViolation("witness does not reproduce its boundary");
  for (std::size_t i = 1; i < image.size(); ++i) {
    if (!image[i].is_zero()) throw InvariantViolation("witness chain is not closed above u^0");
  }
}

std::vector<SparseVector> WitnessedCycle::chain() const {
  return std::vector<SparseVector>(alpha_.rbegin(), alpha_.rend());
}

SparseMatrix FiltrationSpace::in_degree(int d) const {
  auto it = witnesses.find(d);
  std::vector<SparseVector> cols;
  if (it != witnesses.end()) {
    for (const auto& w : it->second) cols.push_back(exact ? w.boundary() : w.leading());
  }
  return SparseMatrix::from_columns(ambient, std::move(cols));
}

std::size_t FiltrationSpace::dimension(int d) const {
  auto it = witnesses.find(d);
  return it == witnesses.end() ? 0 : it->second.size();
}

SparseMatrix FiltrationSpace::all() const {
  SparseMatrix m(ambient, 0);
  for (const auto& [d, ws] : witnesses) m = m.append_columns(in_degree(d));
  return m;
}

FiltrationSpace z_space(const S1Complex& c, int k) {
  require_level(c, k);
  const FilteredPlusComplex f = build_filtered_plus(c, k);
  const Index n = c.size();
  FiltrationSpace space{k, n, false, {}};
  for (int d : c.zeroth().degrees_present()) {
    const SparseMatrix closed = f.complex().cocycles(d - 2 * k);
    std::vector<SparseVector> leading;
    leading.reserve(closed.cols());
    for (const auto& col : closed.columns()) leading.push_back(col.slice(static_cast<Index>(k) * n, f.size()));
    const SparseMatrix lead_matrix = SparseMatrix::from_columns(n, leading);
    auto& ws = space.witnesses[d];
    for (Index p : pivot_columns(lead_matrix)) {
      auto chain = f.unpack(closed.column(p));
      std::vector<SparseVector> alpha(chain.rbegin(), chain.rend());
      ws.emplace_back(c, std::move(alpha), SparseVector(n));
    }
    if (ws.empty()) space.witnesses.erase(d);
  }
  return space;
}

FiltrationSpace b_space(const S1Complex& c, int k) {
  require_level(c, k);
  const FilteredPlusComplex f = build_filtered_plus(c, k);
  const Index n = c.size();
  FiltrationSpace space{k, n, true, {}};
  for (int d : c.zeroth().degrees_present()) {
    const int t = d - 1;
    const auto& sources = f.complex().indices_in_degree(t);
    const auto& targets = f.complex().indices_in_degree(d);
    if (sources.empty()) continue;
    std::vector<Index> low_rows, high_rows;
    for (Index r = 0; r < targets.size(); ++r) (targets[r] < n ? low_rows : high_rows).push_back(r);
    const SparseMatrix block = f.complex().block(t);
    const SparseMatrix primitives = kernel_basis(block.select_rows(high_rows));
    const SparseMatrix low = block.select_rows(low_rows);
    std::vector<SparseVector> images;
    std::vector<Index> low_targets;
    for (Index r : low_rows) low_targets.push_back(targets[r]);
    for (const auto& col : primitives.columns()) {
      SparseVector img = low * col;
      std::vector<SparseVector::Term> terms;
      for (const auto& [i, v] : img.terms()) terms.emplace_back(low_targets[i], v);
      images.push_back(SparseVector::from_terms(n, std::move(terms)));
    }
    const SparseMatrix image_matrix = SparseMatrix::from_columns(n, images);
    auto& ws = space.witnesses[d];
    for (Index p : pivot_columns(image_matrix)) {
      const SparseVector primitive = embed_columns(primitives.select_columns(std::vector<Index>{p}), sources, f.size()).column(0);
      auto chain = f.unpack(primitive);
      std::vector<SparseVector> alpha(chain.rbegin(), chain.rend());
      ws.emplace_back(c, std::move(alpha), images[p]);
    }
    if (ws.empty()) space.witnesses.erase(d);
  }
  return space;
}

std::optional<WitnessedCycle> find_z_witness(const S1Complex& c, int k, const SparseVector& alpha0) {
  require_level(c, k);
  if (alpha0.dim() != c.size()) throw InputError("vector dimension does not match the complex");
  const Index n = c.size();
  const auto d = homogeneous_degree(c, alpha0);
  if (!d) return WitnessedCycle(c, std::vector<SparseVector>(static_cast<std::size_t>(k + 1), SparseVector(n)), SparseVector(n));
  const FilteredPlusComplex f = build_filtered_plus(c, k);
  const int t = *d - 2 * k;
  const auto unknowns = indices_below_power(f, t, k);
  const auto& rows = f.complex().indices_in_degree(t + 1);
  const SparseVector lead = alpha0.embed(f.size(), static_cast<Index>(k) * n);
  const SparseVector rhs = restrict_to(-1 * (f.differential() * lead), rows);
  const auto sol = solve(f.differential().block(rows, unknowns), rhs);
  if (!sol) return std::nullopt;
  SparseVector full = lead + embed_columns(SparseMatrix::from_columns(unknowns.size(), {*sol}), unknowns, f.size()).column(0);
  auto chain = f.unpack(full);
  return WitnessedCycle(c, std::vector<SparseVector>(chain.rbegin(), chain.rend()), SparseVector(n));
}

std::optional<WitnessedCycle> find_b_witness(const S1Complex& c, int k, const SparseVector& alpha) {
  require_level(c, k);
  if (alpha.dim() != c.size()) throw InputError("vector dimension does not match the complex");
  const Index n = c.size();
  const auto d = homogeneous_degree(c, alpha);
  if (!d) return WitnessedCycle(c, std::vector<SparseVector>(static_cast<std::size_t>(k + 1), SparseVector(n)), alpha);
  const FilteredPlusComplex f = build_filtered_plus(c, k);
  const auto& unknowns = f.complex().indices_in_degree(*d - 1);
  const auto& rows = f.complex().indices_in_degree(*d);
  const SparseVector rhs = restrict_to(alpha.embed(f.size(), 0), rows);
  const auto sol = solve(f.differential().block(rows, unknowns), rhs);
  if (!sol) return std::nullopt;
  const SparseVector full = embed_columns(SparseMatrix::from_columns(unknowns.size(), {*sol}), unknowns, f.size()).column(0);
  auto chain = f.unpack(full);
  return WitnessedCycle(c, std::vector<SparseVector>(chain.rbegin(), chain.rend()), alpha);
}

SparseVector delta_k_value(const S1Complex& c, const WitnessedCycle& z_witness) {
  if (!z_witness.boundary().is_zero()) throw InputError("Delta^k needs a closed witness");
  std::vector<SparseVector> shifted{SparseVector(c.size())};
  for (auto& v : z_witness.chain()) shifted.push_back(v);
  auto image = apply_s1_differential(c, shifted);
  for (std::size_t i = 1; i < image.size(); ++i) {
    if (!image[i].is_zero()) throw InvariantViolation("shifted witness is not closed above u^0");
  }
  return image.front();
}

std::size_t DeltaKMap::rank(int source_degree) const {
  auto it = blocks.find(source_degree);
  return it == blocks.end() ? 0 : s1calc::rank(it->second.matrix);
}

std::size_t DeltaKMap::kernel_dimension(int source_degree) const {
  auto it = blocks.find(source_degree);
  return it == blocks.end() ? 0 : it->second.domain.dimension() - rank(source_degree);
}

std::size_t DeltaKMap::cokernel_dimension(int source_degree) const {
  auto it = blocks.find(source_degree);
  return it == blocks.end() ? 0 : it->second.codomain.dimension() - rank(source_degree);
}

DeltaKMap delta_k(const S1Complex& c, int k) {
  if (k < 1) throw InputError("Delta^k is defined for k >= 1");
  if (2 * k > c.truncation()) {
    throw UnsupportedTruncation("Delta^" + std::to_string(k) + " needs 2k <= N, but N = " +
                                std::to_string(c.truncation()));
  }
  const FiltrationSpace z_prev = z_space(c, k - 1);
  const FiltrationSpace b0 = b_space(c, 0);
  const FiltrationSpace z0 = z_space(c, 0);
  const FiltrationSpace b_prev = b_space(c, k - 1);
  DeltaKMap map;
  map.k = k;
  for (int d : c.zeroth().degrees_present()) {
    const int target = d + 1 - 2 * k;
    DeltaKMap::Block block{d, Subquotient(z_prev.in_degree(d), b0.in_degree(d)),
                           Subquotient(z0.in_degree(target), b_prev.in_degree(target)), SparseMatrix()};
    std::vector<SparseVector> images;
    for (const auto& rep : block.domain.quotient_basis().columns()) {
      const auto w = find_z_witness(c, k - 1, rep);
      if (!w) throw InvariantViolation("quotient representative of Z_{k-1} has no witness");
      images.push_back(delta_k_value(c, *w));
    }
    std::vector<SparseVector> cols;
    for (auto& m : block.codomain.classify_many(images)) {
      if (m.kind == Subquotient::Kind::NotInZ) throw InvariantViolation("Delta^k value is not delta^0-closed");
      cols.push_back(std::move(m.coordinates));
    }
    block.matrix = SparseMatrix::from_columns(block.codomain.dimension(), std::move(cols));
    map.blocks.emplace(d, std::move(block));
  }
  return map;
}

std::size_t LerayPage::dimension(int column, int degree) const {
  for (const auto& e : entries) {
    if (e.column == column && e.degree == degree) return e.space.dimension();
  }
  return 0;
}

std::size_t LerayPage::total_dimension(int total_degree) const {
  std::size_t sum = 0;
  for (const auto& e : entries) {
    if (e.degree - 2 * e.column == total_degree) sum += e.space.dimension();
  }
  return sum;
}

const LerayPage::Differential* LerayPage::differential_from(int column, int degree) const {
  for (const auto& d : differentials) {
    if (d.from_column == column && d.from_degree == degree) return &d;
  }
  return nullptr;
}

const LerayPage::Differential* LerayPage::differential_into(int column, int degree) const {
  for (const auto& d : differentials) {
    if (d.to_column == column && d.from_degree - 2 * (k + 1) + 1 == degree) return &d;
  }
  return nullptr;
}

LerayPage leray_page(const S1Complex& c, int n, int k) {
  if (n < 0 || n > c.truncation()) throw InputError("page truncation exceeds the complex's truncation");
  if (k < 0 || k > n) throw InputError("page index must satisfy 0 <= k <= N");
  const S1Complex cn = truncate(c, n);
  std::vector<FiltrationSpace> z, b;
  for (int j = 0; j <= n; ++j) {
    z.push_back(z_space(cn, j));
    b.push_back(b_space(cn, j));
  }
  LerayPage page;
  page.truncation = n;
  page.k = k;
  const auto degrees = cn.zeroth().degrees_present();
  for (int i = 0; i <= n; ++i) {
    const int zi = std::min(i, k);
    const int bi = std::min(k, n - i);
    for (int d : degrees) {
      page.entries.push_back({i, d, Subquotient(z[zi].in_degree(d), b[bi].in_degree(d))});
    }
  }
  page.has_differential = 2 * (k + 1) <= n;
  if (!page.has_differential) return page;
  auto entry = [&](int column, int degree) -> const Subquotient* {
    for (const auto& e : page.entries) {
      if (e.column == column && e.degree == degree) return &e.space;
    }
    return nullptr;
  };
  for (int i = 0; i + k + 1 <= n; ++i) {
    const int from = i + k + 1;
    for (int d : degrees) {
      const Subquotient* src = entry(from, d);
      const int target_degree = d - 2 * k - 1;
      const Subquotient* dst = entry(i, target_degree);
      std::vector<SparseVector> images;
      for (const auto& rep : src->quotient_basis().columns()) {
        const auto w = find_z_witness(cn, k, rep);
        if (!w) throw InvariantViolation("page representative has no witness");
        images.push_back(delta_k_value(cn, *w));
      }
      SparseMatrix matrix;
      if (dst == nullptr) {
        for (const auto& v : images) {
          if (!v.is_zero()) throw InvariantViolation("page differential lands in an empty degree");
        }
        matrix = SparseMatrix(0, images.size());
      } else {
        std::vector<SparseVector> cols;
        for (auto& m : dst->classify_many(images)) {
          if (m.kind == Subquotient::Kind::NotInZ) throw InvariantViolation("page differential leaves the target column");
          cols.push_back(std::move(m.coordinates));
        }
        matrix = SparseMatrix::from_columns(dst->dimension(), std::move(cols));
      }
      page.differentials.push_back({from, i, d, std::move(matrix)});
    }
  }
  return page;
}

}  // namespace s1calc
