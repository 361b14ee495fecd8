#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qv/families.hpp"
#include "qv/namikawa.hpp"

#include <algorithm>

using namespace qv;

namespace {

NamikawaGroup group_of(const FamilyName& f, const Budget& budget = {}) {
  auto [g, a] = build_family(f);
  return namikawa_group(g, a, budget);
}

NamikawaGroup made(std::vector<ADEType> factors) {
  NamikawaGroup ng;
  ng.factors = std::move(factors);
  ng.order = weyl_order(ng.factors);
  return ng;
}

}  // namespace

TEST_CASE("reference groups and orders") {
  auto star = group_of(fam_i3(2, 3, 4));
  CHECK(star.factors == std::vector<ADEType>{A(1), A(2), A(3)});
  CHECK(star.order == 288);  // 2! 3! 4!
  CHECK(star.str() == "A1 x A2 x A3, order 288");

  auto kite = group_of(fam_i3(1, 1, 3));
  CHECK(kite.factors == std::vector<ADEType>{A(2)});
  CHECK(kite.order == 6);

  auto triple = group_of(fam_i3(1, 1, 1));
  CHECK(triple.factors.empty());
  CHECK(triple.order == 1);
  CHECK(triple.str() == "trivial, order 1");

  auto fused = group_of(fam_ichain(D(4), 0));
  CHECK(fused.factors == std::vector<ADEType>{A(3)});
  CHECK(fused.order == 24);

  CHECK(group_of(fam_fixed(FamilyName::Kind::Ia)).order == 23040);
  auto big = group_of(fam_fixed(FamilyName::Kind::IIb));
  CHECK(big.factors == std::vector<ADEType>{E(8)});
  CHECK(big.order == 696729600);
  CHECK(big.str() == "E8, order 696729600");
  auto widest = group_of(fam_fixed(FamilyName::Kind::IIIb));
  CHECK(widest.factors == std::vector<ADEType>{D(10)});
  CHECK(widest.order == 1857945600);
}

TEST_CASE("hyperplane counts of the factor arrangements") {
  CHECK(coxeter_hyperplane_count(made({})) == 0);
  CHECK(coxeter_hyperplane_count(made({A(1)})) == 1);
  CHECK(coxeter_hyperplane_count(made({A(3)})) == 6);
  CHECK(coxeter_hyperplane_count(made({A(2), A(2)})) == 6);
  CHECK(coxeter_hyperplane_count(made({E(7)})) == 63);
  CHECK(coxeter_hyperplane_count(made({D(10)})) == 90);
}

TEST_CASE("the catalogue orders match the closed formulas") {
  Budget wide;
  wide.max_box = 1'000'000'000'000LL;
  int checked = 0;
  for (const FamilyName& f : table_grid(8)) {
    CAPTURE(f.str());
    auto want_order = known_symmetry_order(f);
    auto want_pairs = known_slice_pairs(f);
    REQUIRE(want_order.has_value());
    REQUIRE(want_pairs.has_value());

    auto [g, a] = build_family(f);
    NamikawaGroup ng = namikawa_group(g, a, wide);
    CHECK(ng.order == *want_order);

    // the factor list is the slice table's transverse column, normalized
    std::vector<ADEType> upstairs;
    for (const auto& pr : *want_pairs) upstairs.push_back(pr.second);
    CHECK(ng.factors == normalize_factors(upstairs));

    CHECK(std::is_sorted(ng.factors.begin(), ng.factors.end()));
    for (const ADEType& t : ng.factors) {
      CHECK(t.rank >= 1);
      CHECK(weyl_order(t) >= 2);
    }
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("off-scope inputs are refused") {
  auto small = mir(D(4));  // p = 1
  CHECK_THROWS_AS(namikawa_group(small.graph, small.dim), std::invalid_argument);
  auto doubled = scale(2, small.dim);  // not in Sigma
  CHECK_THROWS_AS(namikawa_group(small.graph, doubled), std::invalid_argument);
}
