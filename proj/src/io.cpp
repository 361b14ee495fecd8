#include "qv/io.hpp"

#include <istream>
#include <sstream>

#include "json.hpp"

namespace qv {

namespace {

using ordered_json = nlohmann::ordered_json;

Int checked_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string("quiver: ") + what + " must be an integer");
  return j.get<Int>();
}

}  // namespace

std::string write_quiver(const WeightedGraph& g, const DimVector& a) {
  ordered_json j;
  j["vertices"] = g.size();
  auto edges = ordered_json::array();
  for (int i = 0; i < g.size(); ++i)
    for (int k = i + 1; k < g.size(); ++k)
      if (g.edge_mult(i, k) > 0) edges.push_back({i, k, g.edge_mult(i, k)});
  j["edges"] = std::move(edges);
  auto loops = ordered_json::array();
  for (int i = 0; i < g.size(); ++i) loops.push_back(g.loops(i));
  j["loops"] = std::move(loops);
  j["dim"] = a;
  return j.dump(2) + "\n";
}

RootedGraph read_quiver(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("quiver: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("quiver: document must be an object");
  for (const char* key : {"vertices", "edges", "loops", "dim"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("quiver: missing key ") + key);
  if (j.size() != 4) throw std::invalid_argument("quiver: unexpected extra key");

  Int n = checked_int(j["vertices"], "vertices");
  if (n < 0 || n > 10'000) throw std::invalid_argument("quiver: vertex count out of range");
  WeightedGraph g(static_cast<int>(n));

  if (!j["edges"].is_array()) throw std::invalid_argument("quiver: edges must be a list");
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || row.size() != 3)
      throw std::invalid_argument("quiver: edge rows are [i, j, mult]");
    Int i = checked_int(row[0], "edge endpoint");
    Int k = checked_int(row[1], "edge endpoint");
    Int m = checked_int(row[2], "edge multiplicity");
    if (i < 0 || k < 0 || i >= n || k >= n || i >= k)
      throw std::invalid_argument("quiver: edge endpoints need 0 <= i < j < vertices");
    if (m <= 0) throw std::invalid_argument("quiver: edge multiplicity must be positive");
    if (g.edge_mult(static_cast<int>(i), static_cast<int>(k)) != 0)
      throw std::invalid_argument("quiver: duplicate edge row");
    g.set_edge(static_cast<int>(i), static_cast<int>(k), static_cast<int>(m));
  }

  if (!j["loops"].is_array() || static_cast<Int>(j["loops"].size()) != n)
    throw std::invalid_argument("quiver: loops must list one count per vertex");
  for (Int i = 0; i < n; ++i) {
    Int m = checked_int(j["loops"][static_cast<size_t>(i)], "loop count");
    if (m < 0) throw std::invalid_argument("quiver: loop count must be nonnegative");
    g.set_loops(static_cast<int>(i), static_cast<int>(m));
  }

  if (!j["dim"].is_array() || static_cast<Int>(j["dim"].size()) != n)
    throw std::invalid_argument("quiver: dim must list one entry per vertex");
  DimVector a;
  for (const auto& x : j["dim"]) {
    Int v = checked_int(x, "dim entry");
    if (v < 0) throw std::invalid_argument("quiver: dim entries must be nonnegative");
    a.push_back(v);
  }
  return {std::move(g), std::move(a)};
}

RootedGraph read_quiver(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_quiver(buf.str());
}

std::string hasse_dot(const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=TB;\n  node [shape=box];\n";
  for (size_t i = 0; i < h.nodes.size(); ++i)
    os << "  n" << i << " [label=\"dim " << h.nodes[i].dim << "\\n"
       << h.nodes[i].type.str() << "\"];\n";
  for (const auto& e : h.edges) {
    os << "  n" << e.upper << " -> n" << e.lower;
    if (e.label) os << " [label=\"" << e.label_str() << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string hasse_text(const HasseDiagram& h) {
  std::ostringstream os;
  for (size_t i = 0; i < h.nodes.size(); ++i)
    os << i << ": dim " << h.nodes[i].dim << "  " << h.nodes[i].type.str() << "\n";
  for (const auto& e : h.edges)
    os << e.upper << " -> " << e.lower << "  [" << e.label_str() << "]\n";
  return os.str();
}

}  // namespace qv
