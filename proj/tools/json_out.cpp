#include "json_out.hpp"

namespace s1tool {

using namespace s1calc;

Json vector_json(const S1Complex& c, const SparseVector& v) {
  Json out = Json::array();
  for (const auto& [i, value] : v.terms()) out.push_back({{"gen", c.generator(i).name}, {"coeff", to_string(value)}});
  return out;
}

Json chain_json(const S1Complex& c, const std::vector<SparseVector>& by_power) {
  Json out = Json::array();
  for (std::size_t i = 0; i < by_power.size(); ++i) {
    if (by_power[i].is_zero()) continue;
    out.push_back({{"power", i}, {"terms", vector_json(c, by_power[i])}});
  }
  return out;
}

Json matrix_json(const SparseMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json columns_json(const S1Complex& c, const SparseMatrix& m) {
  Json out = Json::array();
  for (const auto& col : m.columns()) out.push_back(vector_json(c, col));
  return out;
}

Json witness_json(const S1Complex& c, const WitnessedCycle& w) {
  Json out{{"leading", vector_json(c, w.leading())}, {"chain", chain_json(c, w.chain())}};
  if (!w.boundary().is_zero()) out["boundary"] = vector_json(c, w.boundary());
  return out;
}

Json filtration_json(const S1Complex& c, const FiltrationSpace& space) {
  Json degrees = Json::array();
  for (const auto& [d, ws] : space.witnesses) {
    if (ws.empty()) continue;
    Json list = Json::array();
    for (const auto& w : ws) list.push_back(witness_json(c, w));
    degrees.push_back({{"degree", d}, {"dimension", ws.size()}, {"witnesses", std::move(list)}});
  }
  return {{"k", space.k}, {"degrees", std::move(degrees)}};
}

Json dilation_json(const SplitS1Complex& s, const DilationReport& report, int max_k) {
  Json out{{"truncation", report.truncation}, {"max_k", max_k}};
  if (report.order) {
    out["order"] = *report.order;
  } else {
    out["order"] = nullptr;
    out["greater_than"] = max_k;
  }
  if (report.witness) {
    const auto& w = *report.witness;
    out["witness"] = {{"k", w.k},
                      {"chain", chain_json(s.complex(), w.chain)},
                      {"unit_image", vector_json(s.complex(), w.unit_image)},
                      {"projection", to_string(w.projection)}};
  }
  return out;
}

Json delta_json(const S1Complex& c, const DeltaKMap& map) {
  Json blocks = Json::array();
  for (const auto& [d, b] : map.blocks) {
    blocks.push_back({{"source_degree", d},
                      {"target_degree", d + 1 - 2 * map.k},
                      {"domain_dimension", b.domain.dimension()},
                      {"codomain_dimension", b.codomain.dimension()},
                      {"rank", map.rank(d)},
                      {"kernel", map.kernel_dimension(d)},
                      {"cokernel", map.cokernel_dimension(d)},
                      {"domain_basis", columns_json(c, b.domain.quotient_basis())},
                      {"codomain_basis", columns_json(c, b.codomain.quotient_basis())},
                      {"matrix", matrix_json(b.matrix)}});
  }
  return {{"k", map.k}, {"blocks", std::move(blocks)}};
}

Json page_json(const LerayPage& page) {
  Json entries = Json::array();
  for (const auto& e : page.entries) {
    if (e.space.dimension() == 0) continue;
    entries.push_back({{"column", e.column},
                       {"degree", e.degree},
                       {"total_degree", e.degree - 2 * e.column},
                       {"dimension", e.space.dimension()}});
  }
  Json out{{"page", page.k + 1}, {"entries", std::move(entries)}};
  if (page.has_differential) {
    Json diffs = Json::array();
    for (const auto& d : page.differentials) {
      if (d.matrix.cols() == 0 || d.matrix.rows() == 0) continue;
      diffs.push_back({{"from_column", d.from_column},
                       {"to_column", d.to_column},
                       {"from_degree", d.from_degree},
                       {"rank", rank(d.matrix)}});
    }
    out["differentials"] = std::move(diffs);
  }
  return out;
}

Json les_json(const LesReport& report) {
  static const char* names[] = {"zero", "full", "plus"};
  Json nodes = Json::array();
  for (const auto& n : report.nodes) {
    nodes.push_back({{"space", names[static_cast<int>(n.space)]},
                     {"degree", n.degree},
                     {"dimension", n.dimension},
                     {"incoming_rank", n.incoming_rank},
                     {"outgoing_rank", n.outgoing_rank},
                     {"exact", n.exact()}});
  }
  return {{"level", report.level}, {"exact", report.exact()}, {"nodes", std::move(nodes)}};
}

}  // namespace s1tool
