#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qv/dynkin.hpp"

namespace qv {

/** Parametrized name of one of the classified diagram families, or of one of
    the two excluded X families.  Canonical forms: I(l,m,n) keeps l <= m <= n,
    II(d1,d2) and X-I(d1,d2,n) keep d1 <= d2, III(D_m,i) keeps the smaller of
    the two mirror-equivalent arm positions, and I(D_4,n)' collapses to
    I(D_4,n) (all four star tips are alike).  I(d,0) prints as II(d). */
struct FamilyName {
  enum class Kind {
    I3,      // I(l,m,n): theta graph with arms l <= m <= n
    IChain,  // I(t,n) / I(t,n)': affine diagram of t with a chain of n edges
    IM,      // I(m)
    Ia, Ib, Ic,
    IIPair,  // II(t1,t2): two affine diagrams sharing a weight-1 vertex
    IIM,     // II(m)
    IIa, IIb,
    IIIDi,   // III(D_m,i): pendant vertex on spine position i
    IIIE,    // III(E7), III(E8)
    IIIMN,   // III(m,n), n in {6,7,8}
    IIIa, IIIb,
    XI,      // X-I(t1,t2,n): two affine diagrams joined by a chain of n edges
    XIII,    // X-III(2t): doubled minimal root plus a pendant vertex
  };

  Kind kind = Kind::I3;
  Int a = 0, b = 0, c = 0;  // I3: (l,m,n); IChain/XI: n in a; IM/IIM: m in a;
                            // IIIDi: (m,i) in (a,b); IIIMN: (m,n) in (a,b)
  ADEType t1{}, t2{};       // IChain/IIIE/XIII: t1; IIPair/XI: t1,t2
  bool prime = false;       // IChain only

  std::string str() const;
  static FamilyName parse(const std::string& s);

  bool operator==(const FamilyName&) const = default;
  bool operator<(const FamilyName& o) const {
    return std::tie(kind, a, b, c, t1, t2, prime) <
           std::tie(o.kind, o.a, o.b, o.c, o.t1, o.t2, o.prime);
  }

  bool is_excluded() const { return kind == Kind::XI || kind == Kind::XIII; }
};

// Validated constructors; each throws std::invalid_argument out of range and
// returns the canonical form.
FamilyName fam_i3(Int l, Int m, Int n);
FamilyName fam_ichain(ADEType t, Int n, bool prime = false);
FamilyName fam_im(Int m);
FamilyName fam_fixed(FamilyName::Kind k);  // Ia..Ic, IIa, IIb, IIIa, IIIb
FamilyName fam_iipair(ADEType t1, ADEType t2);
FamilyName fam_iim(Int m);
FamilyName fam_iiidi(Int m, Int i);
FamilyName fam_iiie(int rank);
FamilyName fam_iiimn(Int m, Int n);
FamilyName fam_xi(ADEType t1, ADEType t2, Int n);
FamilyName fam_xiii(ADEType t);

/** Builds the named diagram and dimension vector in its documented vertex
    order.  Throws std::invalid_argument on out-of-range parameters. */
RootedGraph build_family(const FamilyName& f);

/** All canonical instances with every integer parameter (and every type rank)
    at most pmax: the golden-table grid. */
std::vector<FamilyName> table_grid(Int pmax);

/** Canonical instances whose built graph has at most max_rank vertices and
    every weight at most max_weight, deduplicated up to weighted-graph
    isomorphism (I(D_4,n) absorbs I(D_4,n)').  Sorted. */
std::vector<FamilyName> instances_up_to(Int max_rank, Int max_weight, const Budget& budget = {});

/** Slice-pair table: for each non-excluded family, the expected multiset of
    (isotropic type, transverse type) pairs, normalized (no D_2/D_3 entries).
    nullopt for the excluded X families. */
std::optional<std::vector<std::pair<ADEType, ADEType>>> known_slice_pairs(const FamilyName& f);

/** Symmetry-group order of a non-excluded family by the closed formulas
    (product over the slice types), e.g. III(D_m,i) -> 2^{m-1}(i+1)!(m-i-1)!. */
std::optional<BigInt> known_symmetry_order(const FamilyName& f);

} // namespace qv
