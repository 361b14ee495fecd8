#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qv/dynkin.hpp"
#include "qv/roots.hpp"

namespace qv {

/** Stratum shape: groups (n_i, beta_i) summing to the ambient vector, with
    the grouping significant.  {(1,b),(1,b)} pairs two non-isomorphic simples
    of the same dimension while {(2,b)} repeats a single one, so the two are
    different types; a dimension vector with p = 0 carries exactly one simple
    and its copies stay merged. */
struct RepresentationType {
  // descending by group vector, then by multiplicity
  std::vector<std::pair<Int, DimVector>> parts;
  // 2 * sum of p(beta_i) over groups, each group counted once
  Int leaf_dim = 0;

  bool operator==(const RepresentationType&) const = default;
  bool operator<(const RepresentationType& o) const { return parts < o.parts; }

  std::string str() const;
};

/** Every representation type over the decomposable strata of a: each part
    of each decomposition with p >= 1 and multiplicity m splits one group per
    block of every partition of m.  Sorted by leaf_dim descending, then by
    part lists. */
std::vector<RepresentationType> representation_types(const WeightedGraph& g, const DimVector& a,
                                                     const Budget& budget = {});

/** Quiver of pairwise extensions between the groups of a type: one vertex
    per group carrying its multiplicity, -(beta_i, beta_j) edges between
    distinct vertices, p(beta_i) loops at i.  `recognized` holds the affine
    label when the loop-stripped graph is an affine diagram whose minimal
    imaginary root is exactly the multiplicity vector. */
struct ExtQuiver {
  WeightedGraph graph;
  DimVector dim;
  std::optional<ADEType> recognized;
};

ExtQuiver ext_quiver(const WeightedGraph& g, const std::vector<std::pair<Int, DimVector>>& parts);

/** a = beta + sum n_j e_j with beta isotropic and the e_j distinct simples,
    kept only when the extension quiver passes recognition.  delta is the
    type of beta's support diagram, theta the recognized label; these are the
    two slice singularities of the induced stratum. */
struct IsotropicDecomposition {
  DimVector isotropic;
  std::vector<std::pair<Int, DimVector>> real_parts;
  ADEType delta = A(0);
  ADEType theta = A(0);
  ExtQuiver quiver;
};

/** Requires a in Sigma with p(a) = 2 (std::invalid_argument otherwise). */
std::vector<IsotropicDecomposition> isotropic_decompositions(const WeightedGraph& g,
                                                             const DimVector& a,
                                                             const Budget& budget = {});

/** Closure order on the nonempty strata, three levels deep at p = 2: the
    open leaf, one codimension-2 leaf per isotropic decomposition, and the
    0-dimensional leaf when every support vertex is loopfree.  Covering
    edges carry the slice type: theta downward from the open leaf, delta
    onto the point stratum.  When no middle level exists the single covering
    edge is unlabeled. */
struct HasseDiagram {
  struct Node {
    RepresentationType type;
    Int dim = 0;
  };
  struct Edge {
    int upper = 0;
    int lower = 0;
    std::optional<ADEType> label;
    // the swap-induced A_1 of a symmetric square, distinguished from a
    // root-induced A_1 only by provenance
    bool diagonal = false;

    std::string label_str() const;
  };

  std::vector<Node> nodes; // dim descending, then type order
  std::vector<Edge> edges;
};

/** Requires a in Sigma with p(a) = 2. */
HasseDiagram hasse_diagram(const WeightedGraph& g, const DimVector& a, const Budget& budget = {});

/** Diagram of the symmetric square of the surface singularity of type t:
    a diamond with leaf dims 4, 2, 2, 0 and edge labels t, A_1 (diagonal),
    t, t.  Throws std::invalid_argument on A_0. */
HasseDiagram sym2_hasse(ADEType t);

/** Same shape: equal dim multisets and equal (upper dim, lower dim, label)
    edge multisets.  Ignores the diagonal mark, so diagrams over different
    graphs compare by their labeled poset alone. */
bool hasse_equal(const HasseDiagram& x, const HasseDiagram& y);

/** Sorted (delta, theta) pairs over the isotropic decompositions. */
std::vector<std::pair<ADEType, ADEType>> slice_pairs(const WeightedGraph& g, const DimVector& a,
                                                     const Budget& budget = {});

/** Partitions indices of instances by the multiset of slice pairs together
    with the diagram shape; blocks in order of first appearance, members in
    input order. */
std::vector<std::vector<size_t>>
distinct_by_invariants(const std::vector<std::pair<WeightedGraph, DimVector>>& instances,
                       const Budget& budget = {});

} // namespace qv
