#include "s1calc/document.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include <json.hpp>

namespace s1calc {

namespace {

using Json = nlohmann::ordered_json;

const Json& field(const Json& obj, const std::string& pointer, const char* key) {
  if (!obj.is_object()) throw DocumentError(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(pointer, std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& v, const std::string& pointer) {
  if (!v.is_number_integer()) throw DocumentError(pointer, "expected an integer");
  return v.get<int>();
}

std::string as_string(const Json& v, const std::string& pointer) {
  if (!v.is_string()) throw DocumentError(pointer, "expected a string");
  return v.get<std::string>();
}

Rational as_coeff(const Json& v, const std::string& pointer) {
  if (!v.is_string()) throw DocumentError(pointer, "coefficients must be strings such as \"3\" or \"-1/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    throw DocumentError(pointer, e.what());
  }
}

const Json& as_array(const Json& v, const std::string& pointer) {
  if (!v.is_array()) throw DocumentError(pointer, "expected an array");
  return v;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw DocumentError("", std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
}

void check_version(const Json& root) {
  if (as_string(field(root, "", "schema_version"), "/schema_version") != "1") {
    throw DocumentError("/schema_version", "unsupported schema version");
  }
}

// Entries of one operator-like matrix between two named bases.
SparseMatrix parse_entries(const Json& entries, const std::string& pointer, const S1Complex& from,
                           const S1Complex& to) {
  std::vector<MatrixEntry> out;
  std::set<std::pair<Index, Index>> seen;
  const auto& arr = as_array(entries, pointer);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    const std::string src = as_string(field(arr[i], p, "from"), p + "/from");
    const std::string dst = as_string(field(arr[i], p, "to"), p + "/to");
    Index col, row;
    try {
      col = from.index_of(src);
    } catch (const InputError& e) {
      throw DocumentError(p + "/from", e.what());
    }
    try {
      row = to.index_of(dst);
    } catch (const InputError& e) {
      throw DocumentError(p + "/to", e.what());
    }
    if (!seen.insert({row, col}).second) throw DocumentError(p, "duplicate entry " + src + " -> " + dst);
    out.push_back({row, col, as_coeff(field(arr[i], p, "coeff"), p + "/coeff")});
  }
  return SparseMatrix::from_entries(to.size(), from.size(), out);
}

// Orders given as [{order, entries}] for 0..n; missing orders are zero.
std::vector<SparseMatrix> parse_orders(const Json& list, const std::string& pointer, int n, const S1Complex& from,
                                       const S1Complex& to) {
  std::vector<std::optional<SparseMatrix>> slots(static_cast<std::size_t>(n + 1));
  const auto& arr = as_array(list, pointer);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = pointer + "/" + std::to_string(i);
    const int r = as_int(field(arr[i], p, "order"), p + "/order");
    if (r < 0 || r > n) throw DocumentError(p + "/order", "order outside 0..truncation");
    auto& slot = slots[static_cast<std::size_t>(r)];
    if (slot) throw DocumentError(p + "/order", "order given twice");
    slot = parse_entries(field(arr[i], p, "entries"), p + "/entries", from, to);
  }
  std::vector<SparseMatrix> out;
  for (auto& s : slots) out.push_back(s ? std::move(*s) : SparseMatrix(to.size(), from.size()));
  return out;
}

Json emit_entries(const SparseMatrix& m, const S1Complex& from, const S1Complex& to) {
  std::vector<MatrixEntry> entries = m.entries();
  std::sort(entries.begin(), entries.end(),
            [](const MatrixEntry& a, const MatrixEntry& b) { return std::tie(a.col, a.row) < std::tie(b.col, b.row); });
  Json arr = Json::array();
  for (const auto& e : entries) {
    arr.push_back(Json{{"from", from.generator(e.col).name}, {"to", to.generator(e.row).name},
                       {"coeff", to_string(e.value)}});
  }
  return arr;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

SplitS1Complex ComplexDocument::split() const {
  if (!unit) throw InputError("document has no unit");
  return SplitS1Complex(complex, parts, *unit);
}

ComplexDocument canonicalize(const ComplexDocument& doc) {
  const S1Complex& c = doc.complex;
  std::vector<Index> order(c.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) { return c.generator(a).name < c.generator(b).name; });
  ComplexDocument out;
  out.complex = restrict_complex(c, order);
  for (Index i : order) out.parts.push_back(doc.parts.at(i));
  if (doc.unit) {
    std::vector<Index> position(c.size());
    for (Index i = 0; i < order.size(); ++i) position[order[i]] = i;
    out.unit = doc.unit->remap(c.size(), position);
  }
  return out;
}

ComplexDocument parse_document(std::string_view text) {
  const Json root = parse_json(text);
  check_version(root);
  const int n = as_int(field(root, "", "truncation"), "/truncation");
  if (n < 0) throw DocumentError("/truncation", "truncation must be non-negative");
  const auto& gens = as_array(field(root, "", "generators"), "/generators");
  std::vector<Generator> basis;
  std::vector<Part> parts;
  std::set<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string p = "/generators/" + std::to_string(i);
    Generator g{as_string(field(gens[i], p, "name"), p + "/name"), as_int(field(gens[i], p, "degree"), p + "/degree")};
    if (g.name.empty()) throw DocumentError(p + "/name", "empty generator name");
    if (!names.insert(g.name).second) throw DocumentError(p + "/name", "duplicate generator \"" + g.name + "\"");
    Part part = Part::Plus;
    if (gens[i].contains("part")) {
      const std::string s = as_string(gens[i]["part"], p + "/part");
      if (s == "zero") part = Part::Zero;
      else if (s != "plus") throw DocumentError(p + "/part", "part must be \"zero\" or \"plus\"");
    }
    basis.push_back(std::move(g));
    parts.push_back(part);
  }
  const Index size = basis.size();
  const S1Complex names_only(basis, {SparseMatrix(size, size)});
  auto ops = parse_orders(field(root, "", "operators"), "/operators", n, names_only, names_only);
  ComplexDocument doc;
  doc.complex = S1Complex(std::move(basis), std::move(ops));
  doc.parts = std::move(parts);
  if (root.contains("unit")) {
    const Json& u = root["unit"];
    if (u.is_string()) {
      try {
        doc.unit = SparseVector::unit(size, doc.complex.index_of(u.get<std::string>()));
      } catch (const InputError& e) {
        throw DocumentError("/unit", e.what());
      }
    } else {
      const auto& arr = as_array(u, "/unit");
      std::vector<SparseVector::Term> terms;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = "/unit/" + std::to_string(i);
        const std::string name = as_string(field(arr[i], p, "gen"), p + "/gen");
        Index idx;
        try {
          idx = doc.complex.index_of(name);
        } catch (const InputError& e) {
          throw DocumentError(p + "/gen", e.what());
        }
        terms.emplace_back(idx, as_coeff(field(arr[i], p, "coeff"), p + "/coeff"));
      }
      doc.unit = SparseVector::from_terms(size, std::move(terms));
    }
  }
  return canonicalize(doc);
}

std::string emit_document(const ComplexDocument& input) {
  const ComplexDocument doc = canonicalize(input);
  const S1Complex& c = doc.complex;
  Json root;
  root["schema_version"] = "1";
  root["truncation"] = c.truncation();
  Json gens = Json::array();
  for (Index i = 0; i < c.size(); ++i) {
    gens.push_back(Json{{"name", c.generator(i).name},
                        {"degree", c.degree_of(i)},
                        {"part", doc.parts[i] == Part::Zero ? "zero" : "plus"}});
  }
  root["generators"] = std::move(gens);
  Json ops = Json::array();
  for (int r = 0; r <= c.truncation(); ++r) {
    ops.push_back(Json{{"order", r}, {"entries", emit_entries(c.delta(r), c, c)}});
  }
  root["operators"] = std::move(ops);
  if (doc.unit) {
    const auto& terms = doc.unit->terms();
    if (terms.size() == 1 && terms.front().second == 1) {
      root["unit"] = c.generator(terms.front().first).name;
    } else {
      Json arr = Json::array();
      for (const auto& [i, v] : terms) arr.push_back(Json{{"gen", c.generator(i).name}, {"coeff", to_string(v)}});
      root["unit"] = std::move(arr);
    }
  }
  return dump(root);
}

std::string emit_document(const SplitS1Complex& s) {
  return emit_document(ComplexDocument{s.complex(), s.parts(), s.unit()});
}

S1Morphism parse_morphism(std::string_view text, const S1Complex& source, const S1Complex& target) {
  const Json root = parse_json(text);
  check_version(root);
  const int shift = root.contains("shift") ? as_int(root["shift"], "/shift") : 0;
  auto comps = parse_orders(field(root, "", "components"), "/components", source.truncation(), source, target);
  return S1Morphism(source, target, std::move(comps), shift);
}

std::string emit_morphism(const S1Morphism& phi) {
  Json root;
  root["schema_version"] = "1";
  root["shift"] = phi.shift();
  Json comps = Json::array();
  for (int r = 0; r <= phi.truncation(); ++r) {
    comps.push_back(Json{{"order", r}, {"entries", emit_entries(phi.component(r), phi.source(), phi.target())}});
  }
  root["components"] = std::move(comps);
  return dump(root);
}

}  // namespace s1calc
