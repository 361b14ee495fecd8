#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qv/graph.hpp"

namespace qv {

enum class RootClass { NotRoot, Real, ImaginaryIsotropic, ImaginaryAnisotropic };

std::string to_string(RootClass c);

/** Multiset decomposition of a vector: distinct parts with multiplicities,
    parts kept in descending lexicographic order. */
struct Decomposition {
  std::vector<std::pair<Int, DimVector>> parts;

  bool operator==(const Decomposition&) const = default;
  bool operator<(const Decomposition& o) const { return parts < o.parts; }

  Int part_count() const;          // sum of multiplicities
  DimVector total(size_t n) const; // sum of mult * part, padded to n entries
};

/** s_i(a) = a - (a, e_i) e_i.  Throws when vertex i carries a loop. */
DimVector reflect(const WeightedGraph& g, const DimVector& a, int i);

/** Connected support and every vertex balance nonpositive. */
bool in_fundamental_set(const WeightedGraph& g, const DimVector& a);

/** Reflection descent: repeatedly reflect at the lowest vertex of positive
    balance.  Ends Real at a loopfree simple, imaginary in the fundamental
    set (split by p), NotRoot when an entry turns negative or the support
    disconnects. */
RootClass classify_root(const WeightedGraph& g, const DimVector& a);

bool is_root(const WeightedGraph& g, const DimVector& a);

/** All positive roots b with b <= bound, ascending lexicographic.  Seeds the
    box with loopfree simples and the fundamental-set members (found by a
    balance-pruned scan), then closes under reflections; descent only shrinks
    coordinates, so the closure inside the box is complete. */
std::vector<DimVector> positive_roots_below(const WeightedGraph& g, const DimVector& bound,
                                            const Budget& budget = {});

/** Membership in the set of roots whose variety does not decompose:
    p(a) strictly exceeds the summed p of every splitting of a into two or
    more positive roots.  Purely structural: real roots of height > 1 and
    imaginary roots outside the fundamental set always fail; inside it the
    failures are exactly multiples n >= 2 of an isotropic generator and the
    two single-bridge patterns.  Throws std::invalid_argument off roots. */
bool in_sigma(const WeightedGraph& g, const DimVector& a);

/** Brute-force counterpart of in_sigma: maximizes the summed p over all
    multiset decompositions by dynamic programming on the box under a.
    Exponential in principle; bounded by the box budget. */
bool in_sigma_oracle(const WeightedGraph& g, const DimVector& a, const Budget& budget = {});

/** Every multiset decomposition of a into in_sigma parts, sorted. */
std::vector<Decomposition> sigma_decompositions(const WeightedGraph& g, const DimVector& a,
                                                const Budget& budget = {});

/** The unique coarsest element of sigma_decompositions(a); every other
    decomposition refines it (verified, throwing std::logic_error on a
    violation). */
Decomposition canonical_decomposition(const WeightedGraph& g, const DimVector& a,
                                      const Budget& budget = {});

/** True when fine's parts can be grouped so that each group sums to one
    coarse part, using every part exactly once (with multiplicity). */
bool refines(const Decomposition& fine, const Decomposition& coarse);

} // namespace qv
