#include "qv/namikawa.hpp"

#include <sstream>

namespace qv {

std::string NamikawaGroup::str() const {
  std::ostringstream out;
  if (factors.empty()) {
    out << "trivial";
  } else {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) out << " x ";
      out << factors[i].str();
    }
  }
  out << ", order " << order;
  return out.str();
}

NamikawaGroup namikawa_group(const WeightedGraph& g, const DimVector& a,
                             const Budget& budget) {
  std::vector<ADEType> raw;
  for (const auto& d : isotropic_decompositions(g, a, budget)) raw.push_back(d.theta);
  NamikawaGroup ng;
  ng.factors = normalize_factors(raw);  // sorted, degenerate labels split
  ng.order = weyl_order(ng.factors);
  return ng;
}

Int coxeter_hyperplane_count(const NamikawaGroup& ng) {
  return coxeter_positive_roots(ng.factors);
}

}  // namespace qv
