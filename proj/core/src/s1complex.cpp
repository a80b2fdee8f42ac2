#include "s1calc/s1complex.hpp"

#include <algorithm>
#include <set>

#include "s1calc/errors.hpp"

namespace s1calc {

S1Complex::S1Complex(std::vector<Generator> basis, std::vector<SparseMatrix> operators)
    : basis_(std::move(basis)), operators_(std::move(operators)), zero_(basis_.size(), basis_.size()) {
  if (operators_.empty()) throw InputError("an S1-complex needs at least delta^0");
  std::set<std::string> names;
  for (const auto& g : basis_) {
    if (g.name.empty()) throw InputError("generator with empty name");
    if (!names.insert(g.name).second) throw InputError("duplicate generator name \"" + g.name + "\"");
  }
  for (const auto& op : operators_) {
    if (op.rows() != basis_.size() || op.cols() != basis_.size()) {
      throw InputError("operator shape does not match the basis");
    }
  }
}

std::vector<int> S1Complex::degrees() const {
  std::vector<int> out;
  out.reserve(basis_.size());
  for (const auto& g : basis_) out.push_back(g.degree);
  return out;
}

Index S1Complex::index_of(const std::string& name) const {
  for (Index i = 0; i < basis_.size(); ++i) {
    if (basis_[i].name == name) return i;
  }
  throw InputError("unknown generator \"" + name + "\"");
}

const SparseMatrix& S1Complex::delta(int r) const {
  if (r < 0) throw InputError("negative operator order");
  if (r > truncation()) return zero_;
  return operators_[static_cast<std::size_t>(r)];
}

GradedComplex S1Complex::zeroth() const { return GradedComplex(degrees(), operators_.front()); }

S1Complex truncate(const S1Complex& c, int n) {
  if (n < 0 || n > c.truncation()) throw InputError("cannot truncate to a level above N");
  std::vector<SparseMatrix> ops(c.operators().begin(), c.operators().begin() + n + 1);
  return S1Complex(c.basis(), std::move(ops));
}

S1Complex restrict_complex(const S1Complex& c, const std::vector<Index>& indices) {
  std::vector<Generator> basis;
  basis.reserve(indices.size());
  for (Index i : indices) basis.push_back(c.generator(i));
  std::vector<SparseMatrix> ops;
  for (const auto& op : c.operators()) ops.push_back(op.block(indices, indices));
  return S1Complex(std::move(basis), std::move(ops));
}

bool S1ValidationReport::valid() const {
  return degree_violations.empty() &&
         std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.holds; });
}

S1ValidationReport verify_s1_relations(const S1Complex& c) {
  S1ValidationReport report;
  for (int r = 0; r <= c.truncation(); ++r) {
    for (const auto& e : c.delta(r).entries()) {
      if (c.degree_of(e.row) != c.degree_of(e.col) + 1 - 2 * r) report.degree_violations.push_back({r, e.col, e.row});
    }
  }
  for (int k = 0; k <= c.truncation(); ++k) {
    SparseMatrix sum(c.size(), c.size());
    for (int i = 0; i <= k; ++i) sum = sum + c.delta(i) * c.delta(k - i);
    const bool holds = sum.is_zero();
    report.relations.push_back({k, holds, std::move(sum)});
  }
  return report;
}

namespace {

GradedComplex assemble_plus(const S1Complex& c, int level) {
  const Index n = c.size();
  const Index total = n * static_cast<Index>(level + 1);
  std::vector<int> degrees(total);
  for (int i = 0; i <= level; ++i) {
    for (Index g = 0; g < n; ++g) degrees[static_cast<Index>(i) * n + g] = c.degree_of(g) - 2 * i;
  }
  // g u^-i  |->  sum_{r <= i} (delta^r g) u^-(i-r)
  std::vector<MatrixEntry> entries;
  for (int r = 0; r <= std::min(level, c.truncation()); ++r) {
    const auto op = c.delta(r).entries();
    for (int i = r; i <= level; ++i) {
      const Index src = static_cast<Index>(i) * n;
      const Index dst = static_cast<Index>(i - r) * n;
      for (const auto& e : op) entries.push_back({dst + e.row, src + e.col, e.value});
    }
  }
  return GradedComplex(std::move(degrees), SparseMatrix::from_entries(total, total, entries));
}

}  // namespace

FilteredPlusComplex::FilteredPlusComplex(const S1Complex& source, int level)
    : source_(source), level_(level), complex_(assemble_plus(source, level)) {}

FilteredPlusComplex build_filtered_plus(const S1Complex& c, int k) {
  if (k < 0 || k > c.truncation()) {
    throw InputError("filtration level " + std::to_string(k) + " exceeds truncation " +
                     std::to_string(c.truncation()));
  }
  return FilteredPlusComplex(c, k);
}

SparseVector FilteredPlusComplex::pack(const std::vector<SparseVector>& by_power) const {
  if (by_power.size() > static_cast<std::size_t>(level_ + 1)) throw InputError("chain exceeds filtration level");
  std::vector<SparseVector::Term> terms;
  for (std::size_t i = 0; i < by_power.size(); ++i) {
    if (by_power[i].dim() != source_.size()) throw InputError("chain component has wrong dimension");
    for (const auto& [g, v] : by_power[i].terms()) terms.emplace_back(index(g, static_cast<int>(i)), v);
  }
  return SparseVector::from_terms(size(), std::move(terms));
}

std::vector<SparseVector> FilteredPlusComplex::unpack(const SparseVector& v) const {
  const Index n = source_.size();
  std::vector<SparseVector> out;
  for (int i = 0; i <= level_; ++i) out.push_back(v.slice(static_cast<Index>(i) * n, static_cast<Index>(i + 1) * n));
  return out;
}

std::vector<SparseVector> apply_s1_differential(const S1Complex& c, const std::vector<SparseVector>& by_power) {
  std::vector<SparseVector> out(by_power.size(), SparseVector(c.size()));
  for (std::size_t i = 0; i < by_power.size(); ++i) {
    for (std::size_t r = 0; r <= i; ++r) {
      if (static_cast<int>(r) > c.truncation()) break;
      out[i - r].axpy(1, c.delta(static_cast<int>(r)) * by_power[i]);
    }
  }
  return out;
}

}  // namespace s1calc
