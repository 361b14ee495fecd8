#pragma once

#include <string>
#include <vector>

#include "qv/base.hpp"

namespace qv {

/** Dimension vector / weight vector on the vertices of a graph. */
using DimVector = std::vector<Int>;

/** Finite undirected graph with edge multiplicities and loops.  This is the
    underlying graph of a quiver; orientation never matters for anything
    computed here.  Vertices are 0..size()-1. */
class WeightedGraph {
public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

  int size() const { return n_; }

  /** Number of edges between distinct vertices i and j. */
  int edge_mult(int i, int j) const { return adj_[idx(i, j)]; }
  /** Number of loops at i. */
  int loops(int i) const { return adj_[idx(i, i)]; }

  void set_edge(int i, int j, int m);
  void add_edge(int i, int j, int m = 1);
  void set_loops(int i, int m) { adj_[idx(i, i)] = m; }

  /** Appends an isolated vertex and returns its index. */
  int add_vertex();

  /** Sum of edge multiplicities at i, loops not counted. */
  int degree(int i) const;

  /** Symmetric generalized Cartan pairing of the graph:
      2(1 - loops(i)) on the diagonal, -edge_mult(i,j) off it. */
  Int cartan(int i, int j) const {
    return i == j ? 2 * (1 - Int(loops(i))) : -Int(edge_mult(i, j));
  }

  /** (a, b) under the Cartan pairing. */
  Int euler_form(const DimVector& a, const DimVector& b) const;

  /** (a, e_i): local balance of a at vertex i. */
  Int vertex_balance(const DimVector& a, int i) const;

  /** p(a) = 1 - (a,a)/2.  The pairing is even, so this is an integer. */
  Int p(const DimVector& a) const { return 1 - euler_form(a, a) / 2; }

  /** Vertices where a is nonzero, ascending. */
  std::vector<int> support(const DimVector& a) const;

  bool connected_support(const DimVector& a) const;
  bool is_connected() const;

  /** Subgraph induced on verts; vertex k of the result is verts[k]. */
  WeightedGraph induced(const std::vector<int>& verts) const;

  bool operator==(const WeightedGraph&) const = default;

private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<int> adj_;  // row-major symmetric, diagonal = loops
};

/** a restricted to verts, in their order. */
DimVector restrict_to(const DimVector& a, const std::vector<int>& verts);

DimVector unit_vector(int n, int i);

Int height(const DimVector& a);

/** gcd of the entries (0 for the zero vector). */
Int gcd_of(const DimVector& a);

bool is_zero(const DimVector& a);
bool is_nonneg(const DimVector& a);

/** Componentwise a <= b. */
bool leq(const DimVector& a, const DimVector& b);

DimVector add(const DimVector& a, const DimVector& b);
DimVector sub(const DimVector& a, const DimVector& b);
DimVector scale(Int n, const DimVector& a);

std::string to_string(const DimVector& a);

/** Canonical form of (g, a) under vertex relabeling: the lexicographically
    smallest encoding of weights, loops and adjacency over admissible
    orderings.  Equal keys iff weighted-graph isomorphic.  Intended for small
    ranks; throws budget_exceeded past budget.max_iso_rank. */
std::string canonical_key(const WeightedGraph& g, const DimVector& a,
                          const Budget& budget = {});

bool weighted_graph_isomorphic(const WeightedGraph& g1, const DimVector& a1,
                               const WeightedGraph& g2, const DimVector& a2,
                               const Budget& budget = {});

} // namespace qv
