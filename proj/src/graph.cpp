#include "qv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qv {

void WeightedGraph::set_edge(int i, int j, int m) {
  if (i == j) throw std::invalid_argument("set_edge: use set_loops for i == j");
  adj_[idx(i, j)] = m;
  adj_[idx(j, i)] = m;
}

void WeightedGraph::add_edge(int i, int j, int m) {
  if (i == j) throw std::invalid_argument("add_edge: use set_loops for i == j");
  adj_[idx(i, j)] += m;
  adj_[idx(j, i)] += m;
}

int WeightedGraph::add_vertex() {
  WeightedGraph bigger(n_ + 1);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) bigger.adj_[static_cast<size_t>(i) * (n_ + 1) + j] = adj_[idx(i, j)];
  *this = std::move(bigger);
  return n_ - 1;
}

int WeightedGraph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < n_; ++j)
    if (j != i) d += edge_mult(i, j);
  return d;
}

Int WeightedGraph::euler_form(const DimVector& a, const DimVector& b) const {
  Int s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) s += a[i] * cartan(i, j) * b[j];
  }
  return s;
}

Int WeightedGraph::vertex_balance(const DimVector& a, int i) const {
  Int s = 2 * (1 - Int(loops(i))) * a[i];
  for (int j = 0; j < n_; ++j)
    if (j != i) s -= Int(edge_mult(i, j)) * a[j];
  return s;
}

std::vector<int> WeightedGraph::support(const DimVector& a) const {
  std::vector<int> s;
  for (int i = 0; i < n_; ++i)
    if (a[i] != 0) s.push_back(i);
  return s;
}

bool WeightedGraph::connected_support(const DimVector& a) const {
  std::vector<int> supp = support(a);
  if (supp.empty()) return false;
  std::vector<char> in(n_, 0), seen(n_, 0);
  for (int v : supp) in[v] = 1;
  std::vector<int> stack{supp[0]};
  seen[supp[0]] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n_; ++w) {
      if (w == v || !in[w] || seen[w] || edge_mult(v, w) == 0) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == supp.size();
}

bool WeightedGraph::is_connected() const {
  if (n_ == 0) return false;
  DimVector ones(n_, 1);
  return connected_support(ones);
}

WeightedGraph WeightedGraph::induced(const std::vector<int>& verts) const {
  WeightedGraph h(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i) {
    h.set_loops(static_cast<int>(i), loops(verts[i]));
    for (size_t j = i + 1; j < verts.size(); ++j) {
      int m = edge_mult(verts[i], verts[j]);
      if (m) h.set_edge(static_cast<int>(i), static_cast<int>(j), m);
    }
  }
  return h;
}

DimVector restrict_to(const DimVector& a, const std::vector<int>& verts) {
  DimVector r(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) r[i] = a[verts[i]];
  return r;
}

DimVector unit_vector(int n, int i) {
  DimVector e(n, 0);
  e[i] = 1;
  return e;
}

Int height(const DimVector& a) { return std::accumulate(a.begin(), a.end(), Int(0)); }

Int gcd_of(const DimVector& a) {
  Int g = 0;
  for (Int x : a) g = std::gcd(g, x);
  return g;
}

bool is_zero(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

bool is_nonneg(const DimVector& a) {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x >= 0; });
}

bool leq(const DimVector& a, const DimVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

DimVector add(const DimVector& a, const DimVector& b) {
  DimVector c(a);
  for (size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

DimVector sub(const DimVector& a, const DimVector& b) {
  DimVector c(a);
  for (size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

DimVector scale(Int n, const DimVector& a) {
  DimVector c(a);
  for (Int& x : c) x *= n;
  return c;
}

std::string to_string(const DimVector& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

namespace {

// Slot-by-slot minimal encoding.  The encoding of an ordering places, for
// each slot k, the weight and loop count of the vertex followed by its edge
// multiplicities to slots 0..k-1, so slot encodings have a fixed length and
// lexicographic comparison is positional.  At every slot only vertices whose
// slot encoding is minimal can extend to the minimal full encoding.
struct Canonizer {
  const WeightedGraph& g;
  const DimVector& a;
  int n;
  std::vector<int> perm, cur, best;
  std::vector<char> used;
  bool have_best = false;
  long long nodes = 0;
  long long node_cap;

  Canonizer(const WeightedGraph& g_, const DimVector& a_, long long cap)
      : g(g_), a(a_), n(g_.size()), used(g_.size(), 0), node_cap(cap) {}

  std::vector<int> slot_encoding(int v, int k) const {
    std::vector<int> e;
    e.reserve(2 + k);
    e.push_back(static_cast<int>(a[v]));
    e.push_back(g.loops(v));
    for (int s = 0; s < k; ++s) e.push_back(g.edge_mult(v, perm[s]));
    return e;
  }

  void dfs(int k) {
    if (++nodes > node_cap) throw budget_exceeded("canonical_key: node cap");
    if (k == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    std::vector<int> min_enc;
    std::vector<int> argmin;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::vector<int> e = slot_encoding(v, k);
      if (argmin.empty() || e < min_enc) {
        min_enc = std::move(e);
        argmin.assign(1, v);
      } else if (e == min_enc) {
        argmin.push_back(v);
      }
    }
    size_t base = cur.size();
    cur.insert(cur.end(), min_enc.begin(), min_enc.end());
    // prune: a partial encoding lexicographically above best cannot win; the
    // comparison must start at 0, an earlier slot may already differ
    if (have_best) {
      bool worse = false;
      for (size_t i = 0; i < cur.size(); ++i) {
        if (cur[i] != best[i]) {
          worse = cur[i] > best[i];
          break;
        }
      }
      if (worse) {
        cur.resize(base);
        return;
      }
    }
    for (int v : argmin) {
      used[v] = 1;
      perm.push_back(v);
      dfs(k + 1);
      perm.pop_back();
      used[v] = 0;
    }
    cur.resize(base);
  }
};

}  // namespace

std::string canonical_key(const WeightedGraph& g, const DimVector& a, const Budget& budget) {
  if (g.size() != static_cast<int>(a.size()))
    throw std::invalid_argument("canonical_key: size mismatch");
  if (g.size() > budget.max_iso_rank)
    throw budget_exceeded("canonical_key: rank beyond budget");
  Canonizer c(g, a, 5'000'000);
  c.dfs(0);
  std::ostringstream os;
  os << g.size() << ':';
  for (int x : c.best) os << x << ',';
  return os.str();
}

bool weighted_graph_isomorphic(const WeightedGraph& g1, const DimVector& a1,
                               const WeightedGraph& g2, const DimVector& a2,
                               const Budget& budget) {
  if (g1.size() != g2.size()) return false;
  return canonical_key(g1, a1, budget) == canonical_key(g2, a2, budget);
}

} // namespace qv
