#pragma once

#include <optional>

#include "qv/families.hpp"
#include "qv/namikawa.hpp"

namespace qv {

/** Central hyperplane through the origin, stored as a primitive integer
    functional with its first nonzero entry positive. */
struct Hyperplane {
  std::vector<Int> normal;
  auto operator<=>(const Hyperplane&) const = default;
};

struct Arrangement {
  int ambient_dim = 0;
  std::vector<Hyperplane> hyperplanes;  // sorted, pairwise distinct
};

/** Normalizes, deduplicates and sorts raw functionals; zero rows and rows
    longer than dim are rejected. */
Arrangement arrangement_from_normals(int dim, const std::vector<std::vector<Int>>& normals);

/** All splittings a = b + (a - b) with both halves positive roots, one
    representative per unordered pair (the smaller half, or either half of a
    doubled root).  Requires a itself to be a positive root. */
std::vector<DimVector> two_part_decompositions(const WeightedGraph& g, const DimVector& a,
                                               const Budget& budget = {});

/** Hyperplane b-perp on the stability space a-perp for every two-part
    splitting of a, written on the fixed kernel-lattice basis of a and
    deduplicated there; opposite halves land on the same functional.
    Requires a an indivisible positive root. */
Arrangement secondary_arrangement(const WeightedGraph& g, const DimVector& a,
                                  const Budget& budget = {});

/** Connected components of the complement of the union, counted in the
    ambient space.  Walks the poset of intersection subspaces and sums the
    absolute Mobius values off the bottom. */
BigInt count_chambers(const Arrangement& arr, const Budget& budget = {});

/** Same count through the deletion and restriction recursion; an independent
    path that must agree with count_chambers.  Tighter hyperplane budget. */
BigInt count_chambers_dr(const Arrangement& arr, const Budget& budget = {});

/** Same count by testing every open sign cell for feasibility with exact
    variable elimination.  Only for small inputs: at most 14 hyperplanes in
    dimension at most 5. */
BigInt count_chambers_oracle(const Arrangement& arr, const Budget& budget = {});

/** Chamber count of the secondary arrangement next to the symmetry order it
    must split into; n_resolutions * weyl_order = chambers exactly. */
struct ResolutionCount {
  BigInt chambers;
  BigInt weyl_order;
  BigInt n_resolutions;
};

/** Requires a in Sigma, p(a) = 2, indivisible.  Non-divisibility of the
    chamber count by the group order signals a bug, not an input error. */
ResolutionCount num_resolutions(const WeightedGraph& g, const DimVector& a,
                                const Budget& budget = {});

/** Closed-form prediction of the resolution count, for the families that
    carry one: the chain families over D and E diagrams, the one-parameter
    star I(m), and the product-like families expected to admit exactly one
    resolution.  nullopt where no formula is on record. */
std::optional<BigInt> conjectured_resolutions(const FamilyName& f);

enum class ConjectureStatus { match, mismatch, skipped_budget, no_formula };

struct ConjectureEntry {
  FamilyName family;
  std::optional<BigInt> predicted;
  std::optional<BigInt> computed;  // missing when the budget stopped the count
  ConjectureStatus status = ConjectureStatus::no_formula;
};

/** Evaluates every instance of the given list against its predicted count.
    Budget overruns are recorded per entry and never abort the sweep. */
std::vector<ConjectureEntry> check_conjectures(const std::vector<FamilyName>& grid,
                                               const Budget& budget = {});

}  // namespace qv
