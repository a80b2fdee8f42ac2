#include "s1calc/linalg.hpp"

#include <map>

#include "s1calc/errors.hpp"

namespace s1calc {

namespace {

// Incremental Gauss-Jordan elimination on rows. Pivots are only taken in
// columns below `pivot_limit`; rows that reduce to zero there are kept as
// residual rows (they certify inconsistency of right-hand sides).
class EchelonBuilder {
 public:
  EchelonBuilder(Index cols, Index pivot_limit) : cols_(cols), limit_(pivot_limit) {}

  void insert(SparseVector row) {
    std::size_t pos = 0;
    while (pos < row.nnz()) {
      const Index c = row.terms()[pos].first;
      if (c >= limit_) break;
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        ++pos;
        continue;
      }
      const Rational coef = row.terms()[pos].second;
      row.axpy(-coef, it->second);
    }
    if (row.is_zero()) return;
    const Index lead = row.terms().front().first;
    if (lead >= limit_) {
      residual_.push_back(std::move(row));
      return;
    }
    const Rational inv = 1 / row.terms().front().second;
    row.scale(inv);
    for (auto& [p, prow] : pivots_) {
      const Rational a = prow.at(lead);
      if (a != 0) prow.axpy(-a, row);
    }
    pivots_.emplace(lead, std::move(row));
  }

  const std::map<Index, SparseVector>& pivots() const { return pivots_; }
  const std::vector<SparseVector>& residual() const { return residual_; }

 private:
  Index cols_;
  Index limit_;
  std::map<Index, SparseVector> pivots_;
  std::vector<SparseVector> residual_;
};

EchelonBuilder eliminate(const SparseMatrix& m, Index pivot_limit) {
  EchelonBuilder builder(m.cols(), pivot_limit);
  for (auto& row : m.row_vectors()) builder.insert(std::move(row));
  return builder;
}

}  // namespace

RowEchelon rref(const SparseMatrix& m) {
  const EchelonBuilder builder = eliminate(m, m.cols());
  RowEchelon out;
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (const auto& [p, row] : builder.pivots()) {
    out.pivots.push_back(p);
    rows.push_back(row);
  }
  while (rows.size() < m.rows()) rows.emplace_back(m.cols());
  out.reduced = SparseMatrix::from_columns(m.cols(), std::move(rows)).transpose();
  return out;
}

std::size_t rank(const SparseMatrix& m) {
  return eliminate(m, m.cols()).pivots().size();
}

std::vector<Index> pivot_columns(const SparseMatrix& m) {
  const EchelonBuilder builder = eliminate(m, m.cols());
  std::vector<Index> out;
  for (const auto& [p, row] : builder.pivots()) out.push_back(p);
  return out;
}

SparseMatrix kernel_basis(const SparseMatrix& m) {
  const EchelonBuilder builder = eliminate(m, m.cols());
  const auto& pivots = builder.pivots();
  std::vector<std::vector<SparseVector::Term>> free_terms(m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto& [p, row] : pivots) {
    is_pivot[p] = true;
    for (const auto& [c, v] : row.terms()) {
      if (c != p) free_terms[c].emplace_back(p, -v);
    }
  }
  std::vector<SparseVector> basis;
  for (Index c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    free_terms[c].emplace_back(c, 1);
    basis.push_back(SparseVector::from_terms(m.cols(), std::move(free_terms[c])));
  }
  return SparseMatrix::from_columns(m.cols(), std::move(basis));
}

SparseMatrix image_basis(const SparseMatrix& m) {
  const auto pivots = pivot_columns(m);
  return m.select_columns(pivots);
}

std::vector<std::optional<SparseVector>> solve_many(const SparseMatrix& m, std::span<const SparseVector> rhs) {
  for (const auto& b : rhs) {
    if (b.dim() != m.rows()) throw InputError("right-hand side dimension does not match matrix rows");
  }
  std::vector<SparseVector> extra(rhs.begin(), rhs.end());
  const SparseMatrix augmented = m.append_columns(SparseMatrix::from_columns(m.rows(), std::move(extra)));
  const EchelonBuilder builder = eliminate(augmented, m.cols());

  std::vector<bool> consistent(rhs.size(), true);
  for (const auto& row : builder.residual()) {
    for (const auto& [c, v] : row.terms()) consistent[c - m.cols()] = false;
  }
  std::vector<std::vector<SparseVector::Term>> solution_terms(rhs.size());
  for (const auto& [p, row] : builder.pivots()) {
    for (const auto& [c, v] : row.terms()) {
      if (c >= m.cols()) solution_terms[c - m.cols()].emplace_back(p, v);
    }
  }
  std::vector<std::optional<SparseVector>> out(rhs.size());
  for (Index j = 0; j < rhs.size(); ++j) {
    if (consistent[j]) out[j] = SparseVector::from_terms(m.cols(), std::move(solution_terms[j]));
  }
  return out;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b) {
  return std::move(solve_many(m, std::span<const SparseVector>(&b, 1)).front());
}

bool in_span(const SparseMatrix& generators, const SparseVector& v) {
  return solve(generators, v).has_value();
}

bool span_contains(const SparseMatrix& big, const SparseMatrix& small) {
  if (big.rows() != small.rows()) throw InputError("ambient dimension mismatch in span containment");
  if (small.cols() == 0) return true;
  return rank(big.append_columns(small)) == rank(big);
}

// ---------------------------------------------------------------------------

Subquotient::Subquotient(SparseMatrix z_gens, SparseMatrix b_gens)
    : ambient_(z_gens.rows()), z_gens_(std::move(z_gens)), b_gens_(std::move(b_gens)) {
  build(nullptr);
}

Subquotient::Subquotient(SparseMatrix z_gens, SparseMatrix b_gens, const SparseMatrix& preferred)
    : ambient_(z_gens.rows()), z_gens_(std::move(z_gens)), b_gens_(std::move(b_gens)) {
  build(&preferred);
}

void Subquotient::build(const SparseMatrix* preferred) {
  if (b_gens_.rows() != ambient_) throw InputError("subquotient generators live in different ambient spaces");
  if (!span_contains(z_gens_, b_gens_)) throw InputError("subquotient: span(B) is not contained in span(Z)");
  b_basis_ = image_basis(b_gens_);
  SparseMatrix stacked = b_basis_;
  Index preferred_count = 0;
  if (preferred != nullptr) {
    if (preferred->rows() != ambient_) throw InputError("preferred representatives have wrong dimension");
    if (!span_contains(z_gens_, *preferred)) throw InputError("preferred representative is not in Z");
    stacked = stacked.append_columns(*preferred);
    preferred_count = preferred->cols();
  }
  stacked = stacked.append_columns(z_gens_);
  const auto pivots = pivot_columns(stacked);
  const Index nb = b_basis_.cols();
  std::vector<Index> chosen;
  for (Index p : pivots) {
    if (p >= nb) chosen.push_back(p);
  }
  for (Index j = 0; j < preferred_count; ++j) {
    if (chosen.size() <= j || chosen[j] != nb + j) {
      throw InputError("preferred representatives are dependent modulo B");
    }
  }
  quotient_basis_ = stacked.select_columns(chosen);
}

std::vector<Subquotient::Membership> Subquotient::classify_many(std::span<const SparseVector> vs) const {
  for (const auto& v : vs) {
    if (v.dim() != ambient_) throw InputError("subquotient membership: dimension mismatch");
  }
  const SparseMatrix basis = b_basis_.append_columns(quotient_basis_);
  const auto solutions = solve_many(basis, vs);
  const Index nb = b_basis_.cols();
  std::vector<Membership> out;
  out.reserve(vs.size());
  for (const auto& sol : solutions) {
    if (!sol) {
      out.push_back({Kind::NotInZ, SparseVector(dimension())});
      continue;
    }
    SparseVector coords = sol->slice(nb, basis.cols());
    const Kind kind = coords.is_zero() ? Kind::InB : Kind::Class;
    out.push_back({kind, std::move(coords)});
  }
  return out;
}

Subquotient::Membership Subquotient::classify(const SparseVector& v) const {
  return std::move(classify_many(std::span<const SparseVector>(&v, 1)).front());
}

}  // namespace s1calc
