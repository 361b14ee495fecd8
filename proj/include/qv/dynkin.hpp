#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qv/graph.hpp"

namespace qv {

/** Simply laced Dynkin label.  A_m (m >= 0), D_m (m >= 2), E_6/E_7/E_8.
    The same label names a finite diagram and its affine extension; which one
    is meant is determined by the operation.  D_2 and D_3 are accepted as
    aliases for A_1+A_1 and A_3 where degenerate ranks arise from general
    formulas; normalize_factor resolves them. */
struct ADEType {
  char family = 'A';
  int rank = 0;

  auto operator<=>(const ADEType&) const = default;

  std::string str() const { return family + std::to_string(rank); }
  static ADEType parse(const std::string& s);
};

inline ADEType A(int m) { return {'A', m}; }
inline ADEType D(int m) { return {'D', m}; }
inline ADEType E(int m) { return {'E', m}; }

/** True for labels naming a valid affine diagram here: A_m (m>=0),
    D_m (m>=4), E_6..E_8. */
bool valid_affine(ADEType t);

/** A weighted graph together with a distinguished vector on it. */
struct RootedGraph {
  WeightedGraph graph;
  DimVector dim;
};

/** Affine diagram of t carrying its minimal imaginary root.
    A_0 is one vertex with a loop, A_1 a doubled edge; throws on D_2, D_3. */
RootedGraph mir(ADEType t);

/** Finite diagram of t carrying its highest root; A_0 gives the empty graph.
    Throws on D_2, D_3. */
RootedGraph hrr(ADEType t);

/** Order of the finite Weyl group of t (1 for A_0). */
BigInt weyl_order(ADEType t);
BigInt weyl_order(const std::vector<ADEType>& factors);

/** Number of positive roots = hyperplanes of the Coxeter arrangement. */
Int coxeter_positive_roots(ADEType t);
Int coxeter_positive_roots(const std::vector<ADEType>& factors);

/** Splits degenerate labels: A_0 -> (), D_2 -> A_1 A_1, D_3 -> A_3. */
std::vector<ADEType> normalize_factor(ADEType t);
std::vector<ADEType> normalize_factors(const std::vector<ADEType>& ts);

/** Path on the given weights; attach_arm hangs a further path off vertex `at`. */
RootedGraph path_graph(const std::vector<Int>& weights);
void attach_arm(RootedGraph& r, int at, const std::vector<Int>& weights);

/** If g is the affine diagram of some type (shape alone decides), returns the
    type and its minimal imaginary root on g's labeling.  Covers the one-vertex
    loop A_0 and the doubled-edge A_1.  nullopt otherwise. */
std::optional<std::pair<ADEType, DimVector>> affine_diagram_delta(const WeightedGraph& g);

/** Recognizes (g, d) as the affine diagram of some type carrying exactly its
    minimal imaginary root.  nullopt if the shape is wrong or d is not delta. */
std::optional<ADEType> recognize_affine_dynkin(const WeightedGraph& g, const DimVector& d);

} // namespace qv
