#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "qv/dynkin.hpp"
#include "qv/families.hpp"
#include "qv/roots.hpp"

using namespace qv;

namespace {

WeightedGraph path(int n) {
  WeightedGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

WeightedGraph cycle(int n) {
  WeightedGraph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

WeightedGraph star(int tips) {
  WeightedGraph g(tips + 1);
  for (int i = 1; i <= tips; ++i) g.add_edge(0, i);
  return g;
}

WeightedGraph bond(int mult) {
  WeightedGraph g(2);
  g.set_edge(0, 1, mult);
  return g;
}

WeightedGraph loop_vertex(int loops) {
  WeightedGraph g(1);
  g.set_loops(0, loops);
  return g;
}

// loop vertex joined to a plain vertex by mult parallel edges
WeightedGraph loop_bond(int mult) {
  WeightedGraph g(2);
  g.set_loops(0, 1);
  g.set_edge(0, 1, mult);
  return g;
}

std::vector<DimVector> box_vectors(const DimVector& bound) {
  std::vector<DimVector> out;
  DimVector v(bound.size(), 0);
  for (;;) {
    out.push_back(v);
    size_t k = 0;
    while (k < v.size() && v[k] == bound[k]) v[k++] = 0;
    if (k == v.size()) return out;
    ++v[k];
  }
}

// Weyl-orbit enumeration inside a box: the real roots are the orbit of the
// loopfree simples, the imaginary ones the orbit of the fundamental set, and
// descent never leaves the box, so in-box closure decides membership.
struct OrbitOracle {
  std::set<DimVector> real_orbit, imag_orbit;

  OrbitOracle(const WeightedGraph& g, const DimVector& bound) {
    for (int i = 0; i < g.size(); ++i)
      if (g.loops(i) == 0 && bound[static_cast<size_t>(i)] >= 1)
        real_orbit.insert(unit_vector(g.size(), i));
    for (const auto& v : box_vectors(bound))
      if (!is_zero(v) && in_fundamental_set(g, v)) imag_orbit.insert(v);
    close(g, bound, real_orbit);
    close(g, bound, imag_orbit);
  }

  static void close(const WeightedGraph& g, const DimVector& bound, std::set<DimVector>& s) {
    std::vector<DimVector> todo(s.begin(), s.end());
    while (!todo.empty()) {
      DimVector v = todo.back();
      todo.pop_back();
      for (int i = 0; i < g.size(); ++i) {
        if (g.loops(i) > 0) continue;
        DimVector w = reflect(g, v, i);
        if (is_nonneg(w) && !is_zero(w) && leq(w, bound) && s.insert(w).second)
          todo.push_back(w);
      }
    }
  }

  RootClass expect(const WeightedGraph& g, const DimVector& v) const {
    if (real_orbit.count(v)) return RootClass::Real;
    if (imag_orbit.count(v))
      return g.p(v) == 1 ? RootClass::ImaginaryIsotropic : RootClass::ImaginaryAnisotropic;
    return RootClass::NotRoot;
  }
};

Decomposition dec(std::vector<std::pair<Int, DimVector>> parts) { return Decomposition{std::move(parts)}; }

} // namespace

TEST_CASE("reflections move weight as the pairing dictates") {
  WeightedGraph a2 = path(2);
  CHECK(reflect(a2, {1, 1}, 0) == DimVector{0, 1});
  CHECK(reflect(a2, {1, 1}, 1) == DimVector{1, 0});
  CHECK(reflect(a2, {1, 0}, 0) == DimVector{-1, 0});
  CHECK(reflect(a2, {0, 1}, 0) == DimVector{1, 1});

  for (ADEType t : {A(2), A(5), D(4), D(6), E(6), E(7), E(8)}) {
    RootedGraph m = mir(t);
    for (int i = 0; i < m.graph.size(); ++i) CHECK(reflect(m.graph, m.dim, i) == m.dim);
  }

  WeightedGraph tri = cycle(3);
  for (const auto& v : box_vectors({2, 2, 2}))
    for (int i = 0; i < 3; ++i) CHECK(reflect(tri, reflect(tri, v, i), i) == v);

  CHECK_THROWS_AS(reflect(loop_vertex(1), {1}, 0), std::invalid_argument);
}

TEST_CASE("fundamental set: connected support, no positive balance") {
  for (ADEType t : {A(1), A(3), D(4), E(7)}) {
    RootedGraph m = mir(t);
    CHECK(in_fundamental_set(m.graph, m.dim));
    CHECK(in_fundamental_set(m.graph, scale(3, m.dim)));
    CHECK_FALSE(in_fundamental_set(m.graph, unit_vector(m.graph.size(), 0)));
  }
  RootedGraph h = hrr(D(4));
  CHECK_FALSE(in_fundamental_set(h.graph, h.dim));
  CHECK_FALSE(in_fundamental_set(path(3), {1, 0, 1}));
  CHECK_FALSE(in_fundamental_set(path(2), {0, 0}));
  for (const FamilyName& f : instances_up_to(8, 10)) {
    RootedGraph r = build_family(f);
    CHECK(in_fundamental_set(r.graph, r.dim));
  }
}

TEST_CASE("descent classification agrees with Weyl-orbit enumeration") {
  std::vector<std::pair<WeightedGraph, DimVector>> cases = {
      {path(2), {3, 3}},
      {path(3), {3, 3, 3}},
      {star(3), {3, 3, 3, 3}},
      {cycle(3), {3, 3, 3}},
      {cycle(4), {3, 3, 3, 3}},
      {bond(2), {3, 3}},
      {bond(3), {3, 3}},
      {loop_vertex(1), {3}},
      {loop_vertex(2), {3}},
      {loop_bond(1), {3, 3}},
      {loop_bond(2), {3, 3}},
      {mir(D(4)).graph, scale(2, mir(D(4)).dim)},
  };
  for (const auto& [g, bound] : cases) {
    OrbitOracle oracle(g, bound);
    std::vector<DimVector> expected_roots;
    for (const auto& v : box_vectors(bound)) {
      if (is_zero(v)) continue;
      RootClass got = classify_root(g, v);
      CHECK(got == oracle.expect(g, v));
      if (got == RootClass::Real) CHECK(g.p(v) == 0);
      if (got == RootClass::ImaginaryIsotropic) CHECK(g.p(v) == 1);
      if (got == RootClass::ImaginaryAnisotropic) CHECK(g.p(v) >= 2);
      if (got != RootClass::NotRoot) expected_roots.push_back(v);
    }
    std::sort(expected_roots.begin(), expected_roots.end());
    CHECK(positive_roots_below(g, bound) == expected_roots);
  }
}

TEST_CASE("classification landmarks") {
  CHECK(classify_root(path(3), unit_vector(3, 1)) == RootClass::Real);
  CHECK(classify_root(path(3), {1, 1, 1}) == RootClass::Real);
  CHECK(classify_root(loop_vertex(1), {1}) == RootClass::ImaginaryIsotropic);
  CHECK(classify_root(loop_vertex(1), {3}) == RootClass::ImaginaryIsotropic);
  CHECK(classify_root(loop_vertex(2), {1}) == RootClass::ImaginaryAnisotropic);

  for (ADEType t : {A(0), A(1), A(4), D(4), D(7), E(6), E(7), E(8)}) {
    RootedGraph m = mir(t);
    CHECK(classify_root(m.graph, m.dim) == RootClass::ImaginaryIsotropic);
    CHECK(classify_root(m.graph, scale(2, m.dim)) == RootClass::ImaginaryIsotropic);
  }
  for (ADEType t : {A(1), A(4), D(4), D(7), E(6), E(7), E(8)}) {
    RootedGraph h = hrr(t);
    CHECK(classify_root(h.graph, h.dim) == RootClass::Real);
  }
  for (const FamilyName& f : instances_up_to(8, 10)) {
    RootedGraph r = build_family(f);
    CHECK(classify_root(r.graph, r.dim) == RootClass::ImaginaryAnisotropic);
  }

  CHECK(classify_root(path(3), {1, 0, 1}) == RootClass::NotRoot);
  CHECK(classify_root(path(2), {2, 0}) == RootClass::NotRoot);
  CHECK(classify_root(path(2), {2, 2}) == RootClass::NotRoot);
  CHECK(classify_root(WeightedGraph(2), {1, 1}) == RootClass::NotRoot);
}

TEST_CASE("roots below a bound: landmarks and budget") {
  WeightedGraph a1(1);
  CHECK(positive_roots_below(a1, {5}) == std::vector<DimVector>{{1}});

  CHECK(positive_roots_below(bond(2), {1, 1}) ==
        std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_roots_below(bond(3), {1, 1}) ==
        std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_roots_below(cycle(3), {1, 1, 1}).size() == 7);

  Budget tight;
  tight.max_box = 10;
  CHECK_THROWS_AS(positive_roots_below(path(2), {3, 3}, tight), budget_exceeded);
}

TEST_CASE("sigma membership: structural rule equals maximizing search") {
  std::vector<std::pair<WeightedGraph, DimVector>> cases = {
      {bond(2), {3, 3}},
      {bond(3), {2, 2}},
      {cycle(3), {2, 2, 2}},
      {mir(D(4)).graph, scale(2, mir(D(4)).dim)},
      {loop_vertex(1), {4}},
      {loop_vertex(2), {3}},
      {loop_bond(1), {3, 3}},
      {loop_bond(2), {2, 2}},
      {star(3), {2, 2, 2, 2}},
      {build_family(fam_xi(A(0), A(0), 1)).graph, {2, 2}},
      {build_family(fam_xi(A(0), A(0), 2)).graph, {2, 2, 2}},
      {build_family(fam_xiii(A(0))).graph, {3, 2}},
      {build_family(fam_xiii(A(1))).graph, {2, 2, 2}},
  };
  for (const auto& [g, bound] : cases)
    for (const auto& r : positive_roots_below(g, bound))
      CHECK(in_sigma(g, r) == in_sigma_oracle(g, r));
}

TEST_CASE("sigma membership landmarks") {
  for (ADEType t : {A(0), A(1), A(3), D(4), D(6), E(6), E(7), E(8)}) {
    RootedGraph m = mir(t);
    CHECK(in_sigma(m.graph, m.dim));
    CHECK_FALSE(in_sigma(m.graph, scale(2, m.dim)));
    CHECK_FALSE(in_sigma(m.graph, scale(3, m.dim)));
  }
  RootedGraph h = hrr(E(6));
  CHECK_FALSE(in_sigma(h.graph, h.dim));
  CHECK(in_sigma(path(3), unit_vector(3, 0)));
  CHECK(in_sigma(loop_vertex(2), {1}));
  CHECK_THROWS_AS(in_sigma(path(3), DimVector{1, 0, 1}), std::invalid_argument);

  // the excluded families are precisely the instances that split
  for (const FamilyName& f : instances_up_to(8, 10)) {
    RootedGraph r = build_family(f);
    CHECK(in_sigma(r.graph, r.dim) == !f.is_excluded());
  }
}

TEST_CASE("sigma decompositions and the coarsest one") {
  WeightedGraph aff1 = bond(2);
  DimVector d1{1, 1};
  auto decs = sigma_decompositions(aff1, {2, 2});
  std::vector<Decomposition> expected = {
      dec({{2, {1, 1}}}),
      dec({{1, {1, 1}}, {1, {1, 0}}, {1, {0, 1}}}),
      dec({{2, {1, 0}}, {2, {0, 1}}}),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(decs == expected);
  CHECK(canonical_decomposition(aff1, {2, 2}) == dec({{2, {1, 1}}}));

  WeightedGraph tri = cycle(3);
  auto decs2 = sigma_decompositions(tri, {2, 1, 1});
  std::vector<Decomposition> expected2 = {
      dec({{1, {1, 1, 1}}, {1, {1, 0, 0}}}),
      dec({{2, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}}),
  };
  std::sort(expected2.begin(), expected2.end());
  CHECK(decs2 == expected2);
  CHECK(canonical_decomposition(tri, {2, 1, 1}) == dec({{1, {1, 1, 1}}, {1, {1, 0, 0}}}));

  WeightedGraph t3 = bond(3);
  CHECK(sigma_decompositions(t3, {1, 1}) ==
        std::vector<Decomposition>{dec({{1, {1, 0}}, {1, {0, 1}}}), dec({{1, {1, 1}}})});
  CHECK(canonical_decomposition(t3, {1, 1}) == dec({{1, {1, 1}}}));

  CHECK(sigma_decompositions(path(2), {1, 0}) ==
        std::vector<Decomposition>{dec({{1, {1, 0}}})});

  // members of sigma are their own coarsest decomposition
  for (const FamilyName& f : {fam_i3(1, 1, 1), fam_fixed(FamilyName::Kind::Ia),
                              fam_iipair(A(0), A(0)), fam_iiidi(4, 1)}) {
    RootedGraph r = build_family(f);
    CHECK(canonical_decomposition(r.graph, r.dim) == dec({{1, r.dim}}));
  }

  // the excluded families split into their building blocks
  RootedGraph xi = build_family(fam_xi(A(0), A(0), 2));
  CHECK(canonical_decomposition(xi.graph, xi.dim) ==
        dec({{1, {1, 0, 0}}, {1, {0, 1, 0}}, {1, {0, 0, 1}}}));
  RootedGraph xiii = build_family(fam_xiii(A(0)));
  CHECK(canonical_decomposition(xiii.graph, xiii.dim) == dec({{2, {1, 0}}, {1, {0, 1}}}));

  // every decomposition refines the coarsest one
  for (const auto& [g, a] : std::vector<std::pair<WeightedGraph, DimVector>>{
           {aff1, {2, 2}}, {aff1, {3, 3}}, {tri, {2, 1, 1}}, {tri, {2, 2, 2}},
           {mir(D(4)).graph, scale(2, mir(D(4)).dim)}, {xi.graph, xi.dim},
           {xiii.graph, xiii.dim}}) {
    Decomposition canon = canonical_decomposition(g, a);
    for (const auto& d : sigma_decompositions(g, a)) CHECK(refines(d, canon));
  }

  Budget tiny;
  tiny.max_decomp_nodes = 2;
  CHECK_THROWS_AS(sigma_decompositions(aff1, {2, 2}, tiny), budget_exceeded);
}

TEST_CASE("refinement matching") {
  Decomposition coarse = dec({{2, {1, 1}}});
  Decomposition mid = dec({{1, {1, 1}}, {1, {1, 0}}, {1, {0, 1}}});
  Decomposition fine = dec({{2, {1, 0}}, {2, {0, 1}}});
  CHECK(refines(coarse, coarse));
  CHECK(refines(mid, coarse));
  CHECK(refines(fine, coarse));
  CHECK(refines(fine, mid));
  CHECK_FALSE(refines(coarse, mid));
  CHECK_FALSE(refines(coarse, fine));
  CHECK_FALSE(refines(mid, fine));
  CHECK_FALSE(refines(dec({{1, {2, 0}}}), dec({{1, {1, 1}}})));
}
