#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qv/arrangement.hpp"
#include "qv/classify.hpp"
#include "qv/io.hpp"
#include "qv/namikawa.hpp"

using namespace qv;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kFamilyGrammar = R"ebnf(family name grammar:
  name   = fixed | "I(" int "," int "," int ")"      (* theta graph, arms l <= m <= n *)
         | "I(" type "," int ")" ["'"]               (* affine diagram with a chain *)
         | "I(" int ")" | "II(" int ")"
         | "II(" type ")"                            (* short for I(type,0) *)
         | "II(" type "," type ")"                   (* two affine diagrams glued *)
         | "III(" type "," int ")"                   (* type = Dm; pendant position *)
         | "III(E7)" | "III(E8)" | "III(" int "," int ")"
         | "X-I(" type "," type "," int ")" | "X-III(2" type ")" ;
  fixed  = "Ia" | "Ib" | "Ic" | "IIa" | "IIb" | "IIIa" | "IIIb" ;
  type   = ("A" | "D" | "E") ["_"] int ;             (* e.g. A0, D_5, E8 *)
)ebnf";

struct Options {
  std::string format = "text";
  Budget budget;
  bool oracle = false;
};

RootedGraph load_quiver(const std::string& path) {
  if (path == "-") return read_quiver(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_quiver(in);
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (opt.format == f) return;
  throw std::invalid_argument("format '" + opt.format + "' not available for this command");
}

ordered_json quiver_doc(const WeightedGraph& g, const DimVector& a) {
  return ordered_json::parse(write_quiver(g, a));
}

std::string big_str(const BigInt& x) { return x.str(); }

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_family(const std::string& name, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = build_family(FamilyName::parse(name));
  std::cout << write_quiver(g, a);
  return 0;
}

int cmd_p(const std::string& file, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  Int p = g.p(a);
  if (opt.format == "json")
    emit(ordered_json{{"p", p}});
  else
    std::cout << p << "\n";
  return 0;
}

int cmd_balance(const std::string& file, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  std::vector<Int> bal;
  for (int i = 0; i < g.size(); ++i) bal.push_back(g.vertex_balance(a, i));
  if (opt.format == "json") {
    emit(ordered_json{{"balance", bal}});
  } else {
    for (size_t i = 0; i < bal.size(); ++i) std::cout << (i ? " " : "") << bal[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_is_root(const std::string& file, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  RootClass c = classify_root(g, a);
  if (opt.format == "json")
    emit(ordered_json{{"class", to_string(c)}, {"is_root", c != RootClass::NotRoot}});
  else
    std::cout << to_string(c) << "\n";
  return 0;
}

int cmd_in_sigma(const std::string& file, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  bool s = opt.oracle ? in_sigma_oracle(g, a, opt.budget) : in_sigma(g, a);
  if (opt.format == "json")
    emit(ordered_json{{"in_sigma", s}});
  else
    std::cout << (s ? "true" : "false") << "\n";
  return 0;
}

int cmd_canonical(const std::string& file, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  Decomposition d = canonical_decomposition(g, a, opt.budget);
  if (opt.format == "json") {
    auto parts = ordered_json::array();
    for (const auto& [m, beta] : d.parts) parts.push_back({{"mult", m}, {"vector", beta}});
    emit(ordered_json{{"parts", parts}});
  } else {
    for (const auto& [m, beta] : d.parts) std::cout << m << " x " << to_string(beta) << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& file, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  auto pairs = slice_pairs(g, a, opt.budget);
  if (opt.format == "json") {
    auto rows = ordered_json::array();
    for (const auto& [d, t] : pairs) rows.push_back({{"delta", d.str()}, {"theta", t.str()}});
    emit(ordered_json{{"slices", rows}});
    return 0;
  }
  // rows grouped with multiplicity, in the sorted pair order
  for (size_t i = 0; i < pairs.size();) {
    size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    std::cout << pairs[i].first.str() << " " << pairs[i].second.str();
    if (j - i > 1) std::cout << " x" << (j - i);
    std::cout << "\n";
    i = j;
  }
  return 0;
}

void emit_hasse(const HasseDiagram& h, const Options& opt) {
  require_format(opt, {"text", "json", "dot"});
  if (opt.format == "dot") {
    std::cout << hasse_dot(h);
  } else if (opt.format == "json") {
    auto nodes = ordered_json::array();
    for (const auto& n : h.nodes) nodes.push_back({{"dim", n.dim}, {"type", n.type.str()}});
    auto edges = ordered_json::array();
    for (const auto& e : h.edges)
      edges.push_back({{"upper", e.upper},
                       {"lower", e.lower},
                       {"label", e.label ? ordered_json(e.label_str()) : ordered_json(nullptr)}});
    emit(ordered_json{{"nodes", nodes}, {"edges", edges}});
  } else {
    std::cout << hasse_text(h);
  }
}

int cmd_hasse(const std::string& file, const Options& opt) {
  auto [g, a] = load_quiver(file);
  emit_hasse(hasse_diagram(g, a, opt.budget), opt);
  return 0;
}

int cmd_sym2_hasse(const std::string& type, const Options& opt) {
  emit_hasse(sym2_hasse(ADEType::parse(type)), opt);
  return 0;
}

int cmd_namikawa(const std::string& file, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  NamikawaGroup ng = namikawa_group(g, a, opt.budget);
  if (opt.format == "json") {
    auto factors = ordered_json::array();
    for (ADEType t : ng.factors) factors.push_back(t.str());
    emit(ordered_json{{"factors", factors}, {"order", big_str(ng.order)}});
  } else {
    std::cout << ng.str() << "\n";
  }
  return 0;
}

int cmd_arrangement(const std::string& file, bool dump, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  Arrangement arr = secondary_arrangement(g, a, opt.budget);
  if (opt.format == "json") {
    auto normals = ordered_json::array();
    for (const auto& h : arr.hyperplanes) normals.push_back(h.normal);
    emit(ordered_json{{"dim", arr.ambient_dim}, {"normals", normals}});
    return 0;
  }
  if (dump) {
    for (const auto& h : arr.hyperplanes) {
      for (size_t i = 0; i < h.normal.size(); ++i) std::cout << (i ? " " : "") << h.normal[i];
      std::cout << "\n";
    }
  } else {
    std::cout << "dim=" << arr.ambient_dim << " hyperplanes=" << arr.hyperplanes.size() << "\n";
  }
  return 0;
}

int cmd_resolutions(const std::string& file, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto [g, a] = load_quiver(file);
  if (!in_sigma(g, a) || g.p(a) != 2)
    throw std::invalid_argument("resolutions: need a simple-parametrizing vector with p = 2");
  NamikawaGroup ng = namikawa_group(g, a, opt.budget);
  Arrangement arr = secondary_arrangement(g, a, opt.budget);
  std::optional<BigInt> chambers;
  try {
    chambers = count_chambers(arr, opt.budget);
  } catch (const budget_exceeded&) {
  }
  if (!chambers) {
    if (opt.format == "json")
      emit(ordered_json{{"hyperplanes", arr.hyperplanes.size()},
                        {"chambers", nullptr},
                        {"weyl_order", big_str(ng.order)},
                        {"n", nullptr}});
    else
      std::cout << "hyperplanes=" << arr.hyperplanes.size() << " chambers=skipped(budget) |W|="
                << ng.order << "\n";
    return 2;
  }
  if (*chambers % ng.order != 0)
    throw std::logic_error("resolutions: chamber count not divisible by the group order");
  BigInt n = *chambers / ng.order;
  bool verified = false;
  if (opt.oracle) {
    if (count_chambers_oracle(arr, opt.budget) != *chambers)
      throw std::logic_error("resolutions: oracle disagrees with the chamber count");
    verified = true;
  }
  if (opt.format == "json") {
    ordered_json j{{"hyperplanes", arr.hyperplanes.size()},
                   {"chambers", big_str(*chambers)},
                   {"weyl_order", big_str(ng.order)},
                   {"n", big_str(n)}};
    if (verified) j["oracle"] = "agree";
    emit(j);
  } else {
    std::cout << "hyperplanes=" << arr.hyperplanes.size() << " chambers=" << *chambers
              << " |W|=" << ng.order << " N=" << n;
    if (verified) std::cout << " oracle=agree";
    std::cout << "\n";
  }
  return 0;
}

int cmd_classify(Int max_rank, Int max_weight, bool sigma_only, const Options& opt) {
  require_format(opt, {"text", "json"});
  auto hits = enumerate_p2_fundamental(max_rank, max_weight, opt.budget);
  auto rows = ordered_json::array();
  size_t matched = 0, shown = 0;
  std::ostringstream table;
  for (const auto& hit : hits) {
    bool sigma = in_sigma(hit.graph, hit.dim);
    if (sigma_only && !sigma) continue;
    ++shown;
    if (hit.family) ++matched;
    if (opt.format == "json") {
      ordered_json row = quiver_doc(hit.graph, hit.dim);
      row["family"] = hit.family ? ordered_json(hit.family->str()) : ordered_json(nullptr);
      row["type"] = to_string(hit.signature.type);
      row["in_sigma"] = sigma;
      rows.push_back(std::move(row));
    } else {
      std::cout << write_quiver(hit.graph, hit.dim);
      table << hit.graph.size() << "\t" << to_string(hit.signature.type) << "\t"
            << (sigma ? "sigma" : "excluded") << "\t"
            << (hit.family ? hit.family->str() : std::string("unmatched")) << "\n";
    }
  }
  if (opt.format == "json") {
    emit(ordered_json{{"hits", rows}, {"total", shown}, {"matched", matched}});
  } else {
    std::cout << "rank\ttype\tsigma\tfamily\n" << table.str();
    std::cout << "total=" << shown << " matched=" << matched
              << " unmatched=" << (shown - matched) << "\n";
  }
  return 0;
}

struct TableRow {
  std::string name;
  std::vector<std::string> failures;
};

int cmd_check_tables(Int max_param, const Options& opt) {
  require_format(opt, {"text", "json"});
  std::vector<TableRow> rows;
  for (const FamilyName& f : table_grid(max_param)) {
    TableRow row{f.str(), {}};
    auto [g, a] = build_family(f);
    if (g.p(a) != 2) row.failures.push_back("p");
    for (int i = 0; i < g.size(); ++i)
      if (g.vertex_balance(a, i) > 0) {
        row.failures.push_back("balance");
        break;
      }
    if (!in_sigma(g, a)) row.failures.push_back("sigma");
    if (slice_pairs(g, a, opt.budget) != *known_slice_pairs(f)) row.failures.push_back("slices");
    if (namikawa_group(g, a, opt.budget).order != *known_symmetry_order(f))
      row.failures.push_back("order");
    rows.push_back(std::move(row));
  }
  // the excluded families carry the same local shape but fail membership
  std::vector<FamilyName> excluded;
  std::vector<ADEType> types;
  for (Int m = 0; m <= max_param; ++m) types.push_back(A(static_cast<int>(m)));
  for (Int m = 4; m <= max_param; ++m) types.push_back(D(static_cast<int>(m)));
  for (int m = 6; m <= 8 && m <= max_param; ++m) types.push_back(E(m));
  for (ADEType t1 : types)
    for (ADEType t2 : types)
      for (Int n = 1; n <= max_param; ++n) {
        try {
          excluded.push_back(fam_xi(t1, t2, n));
        } catch (const std::invalid_argument&) {
        }
      }
  for (ADEType t : types) {
    try {
      excluded.push_back(fam_xiii(t));
    } catch (const std::invalid_argument&) {
    }
  }
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  for (const FamilyName& f : excluded) {
    TableRow row{f.str(), {}};
    auto [g, a] = build_family(f);
    if (g.p(a) != 2) row.failures.push_back("p");
    for (int i = 0; i < g.size(); ++i)
      if (g.vertex_balance(a, i) > 0) {
        row.failures.push_back("balance");
        break;
      }
    if (in_sigma(g, a)) row.failures.push_back("sigma");
    rows.push_back(std::move(row));
  }

  size_t failed = 0;
  for (const auto& row : rows)
    if (!row.failures.empty()) ++failed;
  if (opt.format == "json") {
    auto out = ordered_json::array();
    for (const auto& row : rows) out.push_back({{"family", row.name}, {"failures", row.failures}});
    emit(ordered_json{{"rows", out}, {"checked", rows.size()}, {"failed", failed}});
  } else {
    for (const auto& row : rows) {
      std::cout << row.name << ": ";
      if (row.failures.empty()) {
        std::cout << "ok\n";
      } else {
        for (size_t i = 0; i < row.failures.size(); ++i)
          std::cout << (i ? "," : "FAIL ") << row.failures[i];
        std::cout << "\n";
      }
    }
    std::cout << "checked=" << rows.size() << " failed=" << failed << "\n";
  }
  return failed ? 1 : 0;
}

int cmd_check_conjectures(std::vector<std::string> names, const Options& opt) {
  require_format(opt, {"text", "json"});
  if (names.empty())
    names = {"II(D4)", "II(D5)", "II(D6)", "II(E6)", "I(D4,1)",
             "I(D4,2)", "I(D5,1)", "I(D5,0)'", "I(D5,1)'"};
  std::vector<FamilyName> grid;
  for (const auto& s : names) grid.push_back(FamilyName::parse(s));
  auto report = check_conjectures(grid, opt.budget);
  size_t mismatched = 0;
  auto out = ordered_json::array();
  for (const auto& e : report) {
    const char* status = nullptr;
    switch (e.status) {
      case ConjectureStatus::match: status = "match"; break;
      case ConjectureStatus::mismatch: status = "MISMATCH"; ++mismatched; break;
      case ConjectureStatus::skipped_budget: status = "skipped(budget)"; break;
      case ConjectureStatus::no_formula: status = "no formula"; break;
    }
    if (opt.format == "json") {
      out.push_back({{"family", e.family.str()},
                     {"predicted", e.predicted ? ordered_json(big_str(*e.predicted)) : ordered_json(nullptr)},
                     {"computed", e.computed ? ordered_json(big_str(*e.computed)) : ordered_json(nullptr)},
                     {"status", status}});
    } else {
      std::cout << e.family.str() << ": ";
      if (e.predicted) std::cout << "predicted=" << *e.predicted << " ";
      if (e.computed) std::cout << "computed=" << *e.computed << " ";
      std::cout << status << "\n";
    }
  }
  if (opt.format == "json") emit(ordered_json{{"rows", out}, {"mismatched", mismatched}});
  return mismatched ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification and resolution counting for the 4-dimensional quiver varieties"};
  app.require_subcommand(1);
  app.footer(kFamilyGrammar);

  Options opt;
  long long budget_knob = 0;
  app.add_option("--format", opt.format, "output format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--budget", budget_knob,
                 "cap on enumeration box sizes and counting work (default 1e8)");
  app.add_option("--threads", opt.budget.threads, "worker threads (outputs are identical)");
  app.fallthrough();

  std::string family_name, file, type_name;
  bool dump = false, sigma_only = false;
  Int max_rank = 5, max_weight = 6, max_param = 8;
  int max_hyperplanes = 0;
  std::vector<std::string> conj_names;

  auto* family = app.add_subcommand("family", "emit the quiver document of a named family instance");
  family->add_option("name", family_name, "family name, e.g. \"I(1,1,3)\"")->required();

  auto* classify = app.add_subcommand("classify", "enumerate the vectors with p = 2 and no positive balance");
  classify->add_option("--max-rank", max_rank, "vertex bound")->required();
  classify->add_option("--max-weight", max_weight, "entry bound")->required();
  classify->add_flag("--sigma-only", sigma_only, "drop the excluded families");

  auto* p_cmd = app.add_subcommand("p", "dimension invariant p of a quiver document");
  p_cmd->add_option("file", file, "quiver document, - for stdin")->required();

  auto* balance = app.add_subcommand("balance", "per-vertex balances");
  balance->add_option("file", file, "quiver document, - for stdin")->required();

  auto* is_root = app.add_subcommand("is-root", "root classification by reflection descent");
  is_root->add_option("file", file, "quiver document, - for stdin")->required();

  auto* in_sig = app.add_subcommand("in-sigma", "membership in the indecomposable locus");
  in_sig->add_option("file", file, "quiver document, - for stdin")->required();
  in_sig->add_flag("--oracle", opt.oracle, "use the brute-force decomposition maximizer");

  auto* canonical = app.add_subcommand("canonical", "canonical decomposition into indecomposable parts");
  canonical->add_option("file", file, "quiver document, - for stdin")->required();

  auto* decompose = app.add_subcommand("decompose", "slice types of the codimension-2 leaves");
  decompose->add_option("file", file, "quiver document, - for stdin")->required();

  auto* hasse = app.add_subcommand("hasse", "closure diagram of the symplectic leaves");
  hasse->add_option("file", file, "quiver document, - for stdin")->required();

  auto* sym2 = app.add_subcommand("sym2-hasse", "closure diagram of a symmetric square");
  sym2->add_option("type", type_name, "ADE label, e.g. A2")->required();

  auto* nami = app.add_subcommand("namikawa", "symmetry group of the codimension-2 slices");
  nami->add_option("file", file, "quiver document, - for stdin")->required();

  auto* arr_cmd = app.add_subcommand("arrangement", "hyperplane arrangement cut out by the splittings");
  arr_cmd->add_option("file", file, "quiver document, - for stdin")->required();
  arr_cmd->add_flag("--dump", dump, "print one integer normal per line");

  auto* resolutions = app.add_subcommand("resolutions", "count the projective symplectic resolutions");
  resolutions->add_option("file", file, "quiver document, - for stdin")->required();
  resolutions->add_flag("--oracle", opt.oracle, "cross-check the chamber count by sign enumeration");
  resolutions->add_option("--max-hyperplanes", max_hyperplanes, "override the chamber-count refusal bound");

  auto* tables = app.add_subcommand("check-tables", "golden comparison of the family catalogue");
  tables->add_option("--max-param", max_param, "largest family parameter")->capture_default_str();

  auto* conjectures = app.add_subcommand("check-conjectures", "compare counted resolutions with the closed formulas");
  conjectures->add_option("--family", conj_names, "family name to check (repeatable; default: a desk-scale sweep)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (budget_knob > 0) {
    opt.budget.max_box = budget_knob;
    opt.budget.max_decomp_nodes = budget_knob;
  }
  if (max_hyperplanes > 0) opt.budget.max_hyperplanes = max_hyperplanes;
  // the golden grid holds instances whose root boxes pass the default cap
  if (tables->parsed() && budget_knob == 0) opt.budget.max_box = 1'000'000'000'000LL;

  try {
    if (family->parsed()) return cmd_family(family_name, opt);
    if (classify->parsed()) return cmd_classify(max_rank, max_weight, sigma_only, opt);
    if (p_cmd->parsed()) return cmd_p(file, opt);
    if (balance->parsed()) return cmd_balance(file, opt);
    if (is_root->parsed()) return cmd_is_root(file, opt);
    if (in_sig->parsed()) return cmd_in_sigma(file, opt);
    if (canonical->parsed()) return cmd_canonical(file, opt);
    if (decompose->parsed()) return cmd_decompose(file, opt);
    if (hasse->parsed()) return cmd_hasse(file, opt);
    if (sym2->parsed()) return cmd_sym2_hasse(type_name, opt);
    if (nami->parsed()) return cmd_namikawa(file, opt);
    if (arr_cmd->parsed()) return cmd_arrangement(file, dump, opt);
    if (resolutions->parsed()) return cmd_resolutions(file, opt);
    if (tables->parsed()) return cmd_check_tables(max_param, opt);
    if (conjectures->parsed()) return cmd_check_conjectures(conj_names, opt);
  } catch (const budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
