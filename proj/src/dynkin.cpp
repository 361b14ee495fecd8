#include "qv/dynkin.hpp"

#include <algorithm>
#include <stdexcept>

namespace qv {

ADEType ADEType::parse(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'A' && s[0] != 'D' && s[0] != 'E'))
    throw std::invalid_argument("bad type label: " + s);
  size_t pos = 1;
  if (s[pos] == '_') ++pos;
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw std::invalid_argument("bad type label: " + s);
  int rank = std::stoi(s.substr(pos));
  ADEType t{s[0], rank};
  if (t.family == 'A' && rank >= 0) return t;
  if (t.family == 'D' && rank >= 2) return t;
  if (t.family == 'E' && rank >= 6 && rank <= 8) return t;
  throw std::invalid_argument("bad type label: " + s);
}

bool valid_affine(ADEType t) {
  if (t.family == 'A') return t.rank >= 0;
  if (t.family == 'D') return t.rank >= 4;
  return t.family == 'E' && t.rank >= 6 && t.rank <= 8;
}

RootedGraph path_graph(const std::vector<Int>& weights) {
  RootedGraph r;
  r.graph = WeightedGraph(static_cast<int>(weights.size()));
  r.dim = DimVector(weights.begin(), weights.end());
  for (int i = 0; i + 1 < static_cast<int>(weights.size()); ++i) r.graph.add_edge(i, i + 1);
  return r;
}

void attach_arm(RootedGraph& r, int at, const std::vector<Int>& weights) {
  int prev = at;
  for (Int w : weights) {
    int v = r.graph.add_vertex();
    r.dim.push_back(w);
    r.graph.add_edge(prev, v);
    prev = v;
  }
}

RootedGraph mir(ADEType t) {
  if (!valid_affine(t)) throw std::invalid_argument("mir: no affine diagram for " + t.str());
  RootedGraph r;
  if (t.family == 'A') {
    if (t.rank == 0) {
      r.graph = WeightedGraph(1);
      r.graph.set_loops(0, 1);
      r.dim = {1};
    } else if (t.rank == 1) {
      r.graph = WeightedGraph(2);
      r.graph.set_edge(0, 1, 2);
      r.dim = {1, 1};
    } else {
      int n = t.rank + 1;
      r.graph = WeightedGraph(n);
      r.dim.assign(n, 1);
      for (int i = 0; i < n; ++i) r.graph.add_edge(i, (i + 1) % n);
    }
    return r;
  }
  if (t.family == 'D') {
    int m = t.rank;
    // tips 0,1 on vertex 2; spine 2..m-2 of weight 2; tips m-1,m on vertex m-2
    r.graph = WeightedGraph(m + 1);
    r.dim.assign(m + 1, 2);
    r.dim[0] = r.dim[1] = r.dim[m - 1] = r.dim[m] = 1;
    r.graph.add_edge(0, 2);
    r.graph.add_edge(1, 2);
    for (int i = 2; i < m - 2; ++i) r.graph.add_edge(i, i + 1);
    r.graph.add_edge(m - 2, m - 1);
    r.graph.add_edge(m - 2, m);
    return r;
  }
  switch (t.rank) {
    case 6:
      r = path_graph({1, 2, 3, 2, 1});
      attach_arm(r, 2, {2, 1});
      return r;
    case 7:
      r = path_graph({1, 2, 3, 4, 3, 2, 1});
      attach_arm(r, 3, {2});
      return r;
    default:
      r = path_graph({2, 4, 6, 5, 4, 3, 2, 1});
      attach_arm(r, 2, {3});
      return r;
  }
}

RootedGraph hrr(ADEType t) {
  if (t.family == 'A') {
    if (t.rank < 0) throw std::invalid_argument("hrr: bad rank");
    return path_graph(std::vector<Int>(t.rank, 1));
  }
  if (t.family == 'D') {
    if (t.rank < 4) throw std::invalid_argument("hrr: no diagram for " + t.str());
    int m = t.rank;
    // leaf 0, spine 1..m-3 of weight 2, fork tips m-2 and m-1
    std::vector<Int> w(m, 2);
    w[0] = w[m - 2] = w[m - 1] = 1;
    RootedGraph r;
    r.graph = WeightedGraph(m);
    r.dim = DimVector(w.begin(), w.end());
    for (int i = 0; i < m - 3; ++i) r.graph.add_edge(i, i + 1);
    r.graph.add_edge(m - 3, m - 2);
    r.graph.add_edge(m - 3, m - 1);
    return r;
  }
  RootedGraph r;
  switch (t.rank) {
    case 6:
      r = path_graph({1, 2, 3, 2, 1});
      attach_arm(r, 2, {2});
      return r;
    case 7:
      r = path_graph({2, 3, 4, 3, 2, 1});
      attach_arm(r, 2, {2});
      return r;
    case 8:
      r = path_graph({2, 4, 6, 5, 4, 3, 2});
      attach_arm(r, 2, {3});
      return r;
    default:
      throw std::invalid_argument("hrr: no diagram for " + t.str());
  }
}

BigInt weyl_order(ADEType t) {
  if (t.family == 'A') return factorial(t.rank + 1);
  if (t.family == 'D') return pow2(t.rank - 1) * factorial(t.rank);
  switch (t.rank) {
    case 6: return 51840;
    case 7: return 2903040;
    default: return 696729600;
  }
}

BigInt weyl_order(const std::vector<ADEType>& factors) {
  BigInt r = 1;
  for (const ADEType& t : factors) r *= weyl_order(t);
  return r;
}

Int coxeter_positive_roots(ADEType t) {
  if (t.family == 'A') return Int(t.rank) * (t.rank + 1) / 2;
  if (t.family == 'D') return Int(t.rank) * (t.rank - 1);
  switch (t.rank) {
    case 6: return 36;
    case 7: return 63;
    default: return 120;
  }
}

Int coxeter_positive_roots(const std::vector<ADEType>& factors) {
  Int r = 0;
  for (const ADEType& t : factors) r += coxeter_positive_roots(t);
  return r;
}

std::vector<ADEType> normalize_factor(ADEType t) {
  if (t.family == 'A') return t.rank == 0 ? std::vector<ADEType>{} : std::vector<ADEType>{t};
  if (t.family == 'D') {
    if (t.rank == 2) return {A(1), A(1)};
    if (t.rank == 3) return {A(3)};
  }
  return {t};
}

std::vector<ADEType> normalize_factors(const std::vector<ADEType>& ts) {
  std::vector<ADEType> out;
  for (const ADEType& t : ts) {
    std::vector<ADEType> n = normalize_factor(t);
    out.insert(out.end(), n.begin(), n.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// vertex lists of the paths leading away from `center`; empty result on
// nested branching (some arm vertex has degree > 2)
std::vector<std::vector<int>> arms_from(const WeightedGraph& g, int center) {
  std::vector<std::vector<int>> arms;
  for (int nb = 0; nb < g.size(); ++nb) {
    if (nb == center || g.edge_mult(center, nb) == 0) continue;
    std::vector<int> arm;
    int prev = center, cur = nb;
    while (true) {
      arm.push_back(cur);
      int next = -1;
      for (int w = 0; w < g.size(); ++w) {
        if (w != prev && w != cur && g.edge_mult(cur, w) > 0) {
          if (next != -1) return {};
          next = w;
        }
      }
      if (next == -1) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(arm));
  }
  std::sort(arms.begin(), arms.end(),
            [](const auto& x, const auto& y) { return x.size() < y.size(); });
  return arms;
}

}  // namespace

std::optional<std::pair<ADEType, DimVector>> affine_diagram_delta(const WeightedGraph& g) {
  int n = g.size();
  if (n == 0) return std::nullopt;
  if (n == 1) {
    if (g.loops(0) == 1) return std::make_pair(A(0), DimVector{1});
    return std::nullopt;
  }
  for (int i = 0; i < n; ++i)
    if (g.loops(i) != 0) return std::nullopt;
  if (n == 2) {
    if (g.edge_mult(0, 1) == 2) return std::make_pair(A(1), DimVector{1, 1});
    return std::nullopt;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.edge_mult(i, j) > 1) return std::nullopt;
  if (!g.is_connected()) return std::nullopt;

  std::vector<int> deg(n);
  int degsum = 0;
  for (int i = 0; i < n; ++i) {
    deg[i] = g.degree(i);
    degsum += deg[i];
  }
  int maxdeg = *std::max_element(deg.begin(), deg.end());

  if (maxdeg == 2 && degsum == 2 * n) {
    // connected with every degree 2: a cycle
    return std::make_pair(A(n - 1), DimVector(n, 1));
  }
  if (degsum != 2 * (n - 1)) return std::nullopt;  // branched diagrams are trees

  if (maxdeg == 4) {
    if (n != 5) return std::nullopt;
    int center = -1;
    for (int i = 0; i < n; ++i) {
      if (deg[i] == 4) center = center == -1 ? i : -2;
      else if (deg[i] != 1) return std::nullopt;
    }
    if (center < 0) return std::nullopt;
    DimVector d(n, 1);
    d[center] = 2;
    return std::make_pair(D(4), d);
  }
  if (maxdeg != 3) return std::nullopt;

  std::vector<int> forks;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 3) forks.push_back(i);

  if (forks.size() == 2) {
    // D_{n-1}, n-1 >= 5: two tips per fork, spine of 2s between the forks
    for (int f : forks) {
      int tips = 0;
      for (int j = 0; j < n; ++j)
        if (j != f && g.edge_mult(f, j) > 0 && deg[j] == 1) ++tips;
      if (tips != 2) return std::nullopt;
    }
    DimVector d(n, 2);
    for (int i = 0; i < n; ++i)
      if (deg[i] == 1) d[i] = 1;
    return std::make_pair(D(n - 1), d);
  }
  if (forks.size() != 1) return std::nullopt;

  int center = forks[0];
  std::vector<std::vector<int>> arms = arms_from(g, center);
  if (arms.size() != 3) return std::nullopt;
  size_t l0 = arms[0].size(), l1 = arms[1].size(), l2 = arms[2].size();
  auto put = [&](DimVector& d, const std::vector<int>& arm, std::initializer_list<Int> w) {
    size_t k = 0;
    for (Int x : w) d[arm[k++]] = x;
  };
  DimVector d(n, 0);
  if (l0 == 2 && l1 == 2 && l2 == 2) {
    d[center] = 3;
    for (const auto& arm : arms) put(d, arm, {2, 1});
    return std::make_pair(E(6), d);
  }
  if (l0 == 1 && l1 == 3 && l2 == 3) {
    d[center] = 4;
    put(d, arms[0], {2});
    put(d, arms[1], {3, 2, 1});
    put(d, arms[2], {3, 2, 1});
    return std::make_pair(E(7), d);
  }
  if (l0 == 1 && l1 == 2 && l2 == 5) {
    d[center] = 6;
    put(d, arms[0], {3});
    put(d, arms[1], {4, 2});
    put(d, arms[2], {5, 4, 3, 2, 1});
    return std::make_pair(E(8), d);
  }
  return std::nullopt;
}

std::optional<ADEType> recognize_affine_dynkin(const WeightedGraph& g, const DimVector& d) {
  auto r = affine_diagram_delta(g);
  if (!r || r->second != d) return std::nullopt;
  return r->first;
}

} // namespace qv
