#pragma once

#include "qv/dynkin.hpp"
#include "qv/strat.hpp"

namespace qv {

/** Product of finite reflection groups attached to the codimension-2 leaves:
    one factor per isotropic decomposition, namely the finite type underlying
    its affine extension quiver.  Trivial factors are dropped, so `factors` can
    be empty with `order` 1. */
struct NamikawaGroup {
  std::vector<ADEType> factors;  // normalized labels, sorted
  BigInt order = 1;              // product of the factor group orders

  bool operator==(const NamikawaGroup&) const = default;
  std::string str() const;
};

/** Requires a in Sigma with p(a) = 2; throws std::invalid_argument otherwise. */
NamikawaGroup namikawa_group(const WeightedGraph& g, const DimVector& a,
                             const Budget& budget = {});

/** Number of reflection hyperplanes of the product group: positive roots
    summed over the factors. */
Int coxeter_hyperplane_count(const NamikawaGroup& ng);

}  // namespace qv
