#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qv/families.hpp"
#include "qv/graph.hpp"

namespace qv {

/** The three shapes of deficit a p = 2 solution can carry. */
enum class SolutionType { I, II, III };

std::string to_string(SolutionType t);

struct UnbalancedSignature {
  SolutionType type;
  // (vertex, weight, balance) for each vertex of negative balance, ascending
  std::vector<std::tuple<int, Int, Int>> unbalanced;

  bool operator==(const UnbalancedSignature&) const = default;
};

/** Reads off the unbalanced vertices of a vector with all balances <= 0 and
    total weighted deficit 2: either two vertices of weight 1 and balance -1
    (type I), one of weight 1 and balance -2 (type II), or one of weight 2
    and balance -1 (type III).  Throws std::invalid_argument off that grid. */
UnbalancedSignature unbalanced_signature(const WeightedGraph& g, const DimVector& a);

struct ClassifiedVector {
  WeightedGraph graph;
  DimVector dim;
  std::optional<FamilyName> family;  // empty: no constructor matches
  UnbalancedSignature signature;
};

/** Pruning predicate for a neighbor pair: when a_j is at most half of a_i,
    vertex j cannot be balanced, so its balance must already be nonpositive.
    Throws std::invalid_argument when i and j are not adjacent. */
bool half_lemma_ok(const WeightedGraph& g, const DimVector& a, int i, int j);

/** Exhaustive scan for connected weighted graphs carrying a vector with
    p = 2 and no positive balance, up to isomorphism: ranks to max_rank,
    weights to max_weight, edge multiplicities to 3, loops to 2 (both caps
    forced by the balance interval).  Each hit is matched against the family
    constructors.  Deterministic order.  Supported bounds: rank 7, weight 8. */
std::vector<ClassifiedVector> enumerate_p2_fundamental(Int max_rank, Int max_weight,
                                                       const Budget& budget = {});

/** The family instance isomorphic to (g, a) as a weighted graph, if any. */
std::optional<FamilyName> match_family(const WeightedGraph& g, const DimVector& a,
                                       const Budget& budget = {});

/** The star fragments an unbalanced vertex can show, as data: five for
    type I, thirteen for type II, nine for type III.  The center of each
    fragment is vertex 0. */
std::vector<RootedGraph> local_structures(SolutionType t);

} // namespace qv
