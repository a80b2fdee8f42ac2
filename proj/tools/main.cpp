#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json_out.hpp"
#include "reproduce.hpp"
#include "s1calc/brieskorn.hpp"
#include "s1calc/document.hpp"
#include "s1calc/errors.hpp"
#include "s1calc/tensor.hpp"

using namespace s1calc;
using s1tool::Json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw InputError("expected a range LO..HI, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    if (lo > hi) throw InputError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("expected a range LO..HI, got '" + text + "'");
  }
}

BrieskornData parse_exponents(const std::string& text) {
  std::vector<std::int64_t> a;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      a.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad exponent '" + item + "'");
    }
  }
  return BrieskornData(std::move(a));
}

// Loads a document whose complex satisfies the relations; reports on stderr otherwise.
std::optional<ComplexDocument> load_valid(const std::string& path) {
  ComplexDocument doc = parse_document(read_input(path));
  const S1ValidationReport report = verify_s1_relations(doc.complex);
  if (!report.valid()) {
    for (const auto& v : report.degree_violations) {
      std::cerr << "degree violation: delta^" << v.order << ' ' << doc.complex.generator(v.from).name << " -> "
                << doc.complex.generator(v.to).name << '\n';
    }
    for (const auto& r : report.relations) {
      if (!r.holds) std::cerr << "relation k=" << r.k << " fails\n";
    }
    return std::nullopt;
  }
  return doc;
}

std::optional<SplitS1Complex> load_split(const std::string& path) {
  auto doc = load_valid(path);
  if (!doc) return std::nullopt;
  SplitS1Complex s = doc->split();
  const SplitValidationReport report = verify_splitting(s);
  if (!report.valid()) {
    for (const auto& v : report.violations) std::cerr << "splitting: " << v << '\n';
    return std::nullopt;
  }
  return s;
}

int cmd_check(const std::string& path) {
  const ComplexDocument doc = parse_document(read_input(path));
  const S1Complex& c = doc.complex;
  const S1ValidationReport report = verify_s1_relations(c);
  Json relations = Json::array();
  for (const auto& r : report.relations) relations.push_back({{"k", r.k}, {"holds", r.holds}});
  Json degree = Json::array();
  for (const auto& v : report.degree_violations) {
    degree.push_back({{"order", v.order}, {"from", c.generator(v.from).name}, {"to", c.generator(v.to).name}});
    std::cerr << "degree violation: delta^" << v.order << ' ' << c.generator(v.from).name << " -> "
              << c.generator(v.to).name << '\n';
  }
  bool valid = report.valid();
  Json out{{"generators", c.size()}, {"truncation", c.truncation()}};
  if (doc.unit) {
    const SplitValidationReport split = verify_splitting(doc.split());
    out["splitting"] = {{"valid", split.valid()}, {"violations", split.violations}};
    for (const auto& v : split.violations) std::cerr << "splitting: " << v << '\n';
    valid = valid && split.valid();
  }
  out["relations"] = std::move(relations);
  out["degree_violations"] = std::move(degree);
  out["valid"] = valid;
  print(out);
  return valid ? kOk : kPropertyFailure;
}

int cmd_cohomology(const std::string& path, int level, const std::string& degrees) {
  const auto doc = load_valid(path);
  if (!doc) return kPropertyFailure;
  const FilteredPlusComplex f = build_filtered_plus(doc->complex, level);
  CohomologyReport report;
  if (degrees.empty()) {
    report = cohomology(f.complex());
  } else {
    const auto [lo, hi] = parse_range(degrees);
    report = cohomology(f.complex(), lo, hi);
  }
  Json groups = Json::array();
  for (const auto& [d, g] : report.groups) {
    Json reps = Json::array();
    for (const auto& col : g.representatives().columns()) reps.push_back(s1tool::chain_json(doc->complex, f.unpack(col)));
    groups.push_back({{"degree", d}, {"dimension", g.dimension()}, {"representatives", std::move(reps)}});
  }
  print({{"level", level}, {"groups", std::move(groups)}});
  return kOk;
}

int cmd_zb(const std::string& path, int k) {
  const auto doc = load_valid(path);
  if (!doc) return kPropertyFailure;
  print({{"z", s1tool::filtration_json(doc->complex, z_space(doc->complex, k))},
         {"b", s1tool::filtration_json(doc->complex, b_space(doc->complex, k))}});
  return kOk;
}

int cmd_delta(const std::string& path, int k) {
  const auto doc = load_valid(path);
  if (!doc) return kPropertyFailure;
  print(s1tool::delta_json(doc->complex, delta_k(doc->complex, k)));
  return kOk;
}

int cmd_pages(const std::string& path, std::optional<int> n_opt) {
  const auto doc = load_valid(path);
  if (!doc) return kPropertyFailure;
  const int n = n_opt.value_or(doc->complex.truncation());
  Json pages = Json::array();
  for (int k = 0; k <= n; ++k) pages.push_back(s1tool::page_json(leray_page(doc->complex, n, k)));
  const CohomologyReport h = cohomology(build_filtered_plus(doc->complex, n).complex());
  Json total = Json::array();
  for (const auto& [d, g] : h.groups) {
    if (g.dimension() > 0) total.push_back({{"degree", d}, {"dimension", g.dimension()}});
  }
  print({{"truncation", n}, {"pages", std::move(pages)}, {"cohomology", std::move(total)}});
  return kOk;
}

int cmd_dilation(const std::string& path, std::optional<int> max_k, bool semi, bool torsion) {
  const auto s = load_split(path);
  if (!s) return kPropertyFailure;
  const int k = max_k.value_or(s->truncation());
  const DilationKind kind = semi ? DilationKind::Semidilation : DilationKind::Dilation;
  const DilationReport report = torsion ? order_via_torsion(*s, k, kind)
                                : semi  ? order_of_semidilation(*s, k)
                                        : order_of_dilation(*s, k);
  Json out = s1tool::dilation_json(*s, report, k);
  out["kind"] = semi ? "semidilation" : "dilation";
  out["route"] = torsion ? "torsion" : "filtration";
  print(out);
  return kOk;
}

int cmd_les(const std::string& path, const std::string& degrees, std::optional<int> level) {
  const auto s = load_split(path);
  if (!s) return kPropertyFailure;
  const auto [lo, hi] = parse_range(degrees);
  const LesReport report = tautological_les(*s, level.value_or(s->truncation()), lo, hi);
  print(s1tool::les_json(report));
  return report.exact() ? kOk : kPropertyFailure;
}

int cmd_tensor(const std::string& a, const std::string& b, const std::string& out) {
  const auto s = load_split(a);
  const auto t = load_split(b);
  if (!s || !t) return kPropertyFailure;
  write_output(out, emit_document(tensor_split(*s, *t)));
  return kOk;
}

Json family_json(const OrbitFamily& f) {
  return {{"total_period", f.total_period},
          {"multiple", f.multiple},
          {"principal_period", f.principal.period},
          {"indices", f.principal.indices},
          {"dimension", f.dimension},
          {"min_cz", f.min_cz}};
}

int cmd_brieskorn(const std::string& what, const std::string& exponents, std::optional<std::int64_t> bound_opt) {
  const BrieskornData a = parse_exponents(exponents);
  const std::int64_t bound = bound_opt.value_or(default_period_bound(a));
  Json out{{"exponents", a.exponents()}, {"n", a.n()}};
  if (what == "periods") {
    Json list = Json::array();
    for (const auto& p : principal_periods(a)) list.push_back({{"period", p.period}, {"indices", p.indices}});
    out["principal_periods"] = std::move(list);
  } else if (what == "cz") {
    const GlobalMinimum g = global_min_cz(a, bound);
    Json families = Json::array();
    for (const auto& f : g.families) families.push_back(family_json(f));
    out["bound"] = bound;
    out["min_cz"] = g.min_cz;
    out["attained"] = family_json(g.attained);
    out["minimal_period"] = g.minimal_period;
    out["attained_at_minimal_period"] = g.attained_at_minimal_period;
    out["families"] = std::move(families);
  } else if (what == "adc") {
    const AdcCertificate c = is_adc_certified(a, bound);
    out["bound"] = bound;
    out["certified"] = c.certified;
    out["note"] = "bounded-period certificate";
    out["min_sft_degree"] = c.min_sft_degree;
    out["sft_degrees"] = c.sft_degrees;
  } else {
    const OrderPrediction p = predicted_order(a, bound);
    out["bound"] = bound;
    out["order"] = p.order ? Json(*p.order) : Json(nullptr);
    out["min_cz"] = p.min_cz;
    out["attained_at_minimal_period"] = p.attained_at_minimal_period;
    out["parity_ok"] = p.parity_ok;
    out["kodaira_obstruction"] = p.kodaira_obstruction;
    out["existence_assumed"] = p.existence_assumed;
  }
  print(out);
  return kOk;
}

int cmd_milnor(int k, int m, std::optional<int> n, bool no_spheres, const std::string& out) {
  MilnorOptions opts;
  opts.truncation = n;
  opts.sphere_classes = !no_spheres;
  write_output(out, emit_document(milnor_model(k, m, opts)));
  return kOk;
}

int cmd_reproduce(const std::string& which, int max_m, const std::string& n_range, bool no_spheres) {
  Json table;
  if (which == "theorem-a") {
    table = s1tool::reproduce_theorem_a(max_m, !no_spheres);
  } else {
    const auto [lo, hi] = parse_range(n_range);
    if (lo < 3) throw InputError("the corollary needs n >= 3");
    table = s1tool::reproduce_one_dilation(lo, hi);
  }
  print(table);
  return table["pass"].get<bool>() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of truncated S1-cochain complexes over Q"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string file = "-", file_b, out, degrees, n_range = "3..10", what, exponents;
  std::optional<int> k_opt, n_opt, level_opt;
  std::optional<std::int64_t> bound;
  int k = 0, m = 0, level = 0, max_m = 6;
  bool torsion = false, no_spheres = false;

  auto* check = app.add_subcommand("check", "validate a complex document");
  check->add_option("file", file, "complex document ('-' for stdin)");
  check->callback([&] { run = [&] { return cmd_check(file); }; });

  auto* coh = app.add_subcommand("cohomology", "cohomology of F^k C^+");
  coh->add_option("file", file);
  coh->add_option("--level", level, "filtration level k")->check(CLI::NonNegativeNumber);
  coh->add_option("--degrees", degrees, "LO..HI");
  coh->callback([&] { run = [&] { return cmd_cohomology(file, level, degrees); }; });

  auto* zb = app.add_subcommand("zb", "Z_k and B_k with witnesses");
  zb->add_option("file", file);
  zb->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
  zb->callback([&] { run = [&] { return cmd_zb(file, k); }; });

  auto* delta = app.add_subcommand("delta", "the structural map Delta^k");
  delta->add_option("file", file);
  delta->add_option("--k", k)->required();
  delta->callback([&] { run = [&] { return cmd_delta(file, k); }; });

  auto* pages = app.add_subcommand("pages", "Leray spectral sequence pages of F^N C^+");
  pages->add_option("file", file);
  pages->add_option("--N", n_opt, "truncation to use (default: the document's)");
  pages->callback([&] { run = [&] { return cmd_pages(file, n_opt); }; });

  for (const bool semi : {false, true}) {
    auto* sub = app.add_subcommand(semi ? "semidilation" : "dilation",
                                   semi ? "order of semi-dilation" : "order of dilation");
    sub->add_option("file", file);
    sub->add_option("--max-k", k_opt, "largest level to test (default N)");
    sub->add_flag("--torsion", torsion, "use the u-torsion characterization");
    sub->callback([&, semi] { run = [&, semi] { return cmd_dilation(file, k_opt, semi, torsion); }; });
  }

  auto* les = app.add_subcommand("les", "exactness of the tautological long exact sequence");
  les->add_option("file", file);
  les->add_option("--degrees", degrees, "LO..HI")->required();
  les->add_option("--level", level_opt);
  les->callback([&] { run = [&] { return cmd_les(file, degrees, level_opt); }; });

  auto* ten = app.add_subcommand("tensor", "product of two split complexes");
  ten->add_option("a", file)->required();
  ten->add_option("b", file_b)->required();
  ten->add_option("-o,--output", out);
  ten->callback([&] { run = [&] { return cmd_tensor(file, file_b, out); }; });

  auto* bri = app.add_subcommand("brieskorn", "Reeb orbit combinatorics of Brieskorn manifolds");
  bri->add_option("what", what)->required()->check(CLI::IsMember({"periods", "cz", "adc", "predict"}));
  bri->add_option("exponents", exponents, "a_0,...,a_n")->required();
  bri->add_option("--bound", bound, "largest period considered");
  bri->callback([&] { run = [&] { return cmd_brieskorn(what, exponents, bound); }; });

  auto* mil = app.add_subcommand("milnor", "model complex of the Fermat Milnor fiber");
  mil->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  mil->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  mil->add_option("--N", n_opt, "truncation (default 2k)");
  mil->add_flag("--no-spheres", no_spheres, "omit the degree-m sphere classes");
  mil->add_option("-o,--output", out);
  mil->callback([&] { run = [&] { return cmd_milnor(k, m, n_opt, no_spheres, out); }; });

  auto* rep = app.add_subcommand("reproduce", "tables of computed versus expected values");
  rep->add_option("which", what)->required()->check(CLI::IsMember({"theorem-a", "corollary-1dilation"}));
  rep->add_option("--max", max_m, "largest m")->check(CLI::PositiveNumber);
  rep->add_option("--n-range", n_range, "LO..HI");
  rep->add_flag("--no-spheres", no_spheres);
  rep->callback([&] { run = [&] { return cmd_reproduce(what, max_m, n_range, no_spheres); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    return run();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kPropertyFailure;
  }
}
