#include "qv/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qv {

namespace {

// First vertex carrying weight 1; every affine diagram has one.
int weight_one_vertex(const RootedGraph& r) {
  for (int i = 0; i < r.graph.size(); ++i)
    if (r.dim[static_cast<size_t>(i)] == 1) return i;
  throw std::logic_error("no weight-1 vertex");
}

// Appends s disjointly to r and returns the index offset of its vertices.
int append_graph(RootedGraph& r, const RootedGraph& s) {
  int off = r.graph.size();
  for (int i = 0; i < s.graph.size(); ++i) {
    r.graph.add_vertex();
    r.dim.push_back(s.dim[static_cast<size_t>(i)]);
    r.graph.set_loops(off + i, s.graph.loops(i));
  }
  for (int i = 0; i < s.graph.size(); ++i)
    for (int j = i + 1; j < s.graph.size(); ++j)
      if (s.graph.edge_mult(i, j) > 0)
        r.graph.set_edge(off + i, off + j, s.graph.edge_mult(i, j));
  return off;
}

// Identifies v with u: edge multiplicities add, an existing u-v edge becomes
// loops, and indices above v shift down by one.  The weight at u is kept.
void merge_vertices(RootedGraph& r, int u, int v) {
  if (u == v) throw std::logic_error("merge of a vertex with itself");
  if (u > v) std::swap(u, v);
  int n = r.graph.size();
  WeightedGraph g(n - 1);
  DimVector d;
  d.reserve(static_cast<size_t>(n) - 1);
  auto remap = [&](int w) { return w < v ? w : (w == v ? u : w - 1); };
  for (int i = 0; i < n; ++i)
    if (i != v) d.push_back(r.dim[static_cast<size_t>(i)]);
  for (int i = 0; i < n; ++i) {
    int gi = remap(i);
    g.set_loops(gi, g.loops(gi) + r.graph.loops(i));
    for (int j = i + 1; j < n; ++j) {
      int m = r.graph.edge_mult(i, j);
      if (m == 0) continue;
      int gj = remap(j);
      if (gi == gj)
        g.set_loops(gi, g.loops(gi) + m);
      else
        g.add_edge(gi, gj, m);
    }
  }
  r.graph = std::move(g);
  r.dim = std::move(d);
}

// Chain of n edges between u and v: n-1 fresh weight-1 vertices, or for n=0
// the identification of v with u.
void connect_chain(RootedGraph& r, int u, int v, Int n) {
  if (n == 0) {
    merge_vertices(r, u, v);
    return;
  }
  int prev = u;
  for (Int k = 1; k < n; ++k) {
    int w = r.graph.add_vertex();
    r.dim.push_back(1);
    r.graph.add_edge(prev, w);
    prev = w;
  }
  r.graph.add_edge(prev, v);
}

void pendant(RootedGraph& r, int at, Int w = 1) {
  int v = r.graph.add_vertex();
  r.dim.push_back(w);
  r.graph.add_edge(at, v);
}

// Attach vertices of the chain families: two weight-1 vertices of the
// affine diagram, at opposite ends except for the primed D layout.
std::pair<int, int> chain_ports(ADEType t, bool prime) {
  if (t.family == 'D') return prime ? std::pair{0, 1} : std::pair{0, (int)t.rank - 1};
  if (t == E(6)) return {0, 4};
  if (t == E(7)) return {0, 6};
  throw std::logic_error("no chain ports for " + t.str());
}

ADEType norm1(ADEType t) {
  if (t.family == 'D' && t.rank == 3) return A(3);
  if (t.family == 'D' && t.rank == 2) throw std::logic_error("D2 slice entry");
  return t;
}

using PairList = std::vector<std::pair<ADEType, ADEType>>;

void sort_pairs(PairList& ps) {
  std::sort(ps.begin(), ps.end());
}

} // namespace

FamilyName fam_i3(Int l, Int m, Int n) {
  if (l < 1 || m < 1 || n < 1) throw std::invalid_argument("I(l,m,n) needs l,m,n >= 1");
  std::vector<Int> v{l, m, n};
  std::sort(v.begin(), v.end());
  FamilyName f;
  f.kind = FamilyName::Kind::I3;
  f.a = v[0]; f.b = v[1]; f.c = v[2];
  return f;
}

FamilyName fam_ichain(ADEType t, Int n, bool prime) {
  bool d_ok = t.family == 'D' && t.rank >= 4;
  bool e_ok = t == E(6) || t == E(7);
  if (!d_ok && !e_ok)
    throw std::invalid_argument("I(t,n) needs t in {D_m (m>=4), E6, E7}");
  if (n < 0) throw std::invalid_argument("I(t,n) needs n >= 0");
  if (prime && !d_ok) throw std::invalid_argument("primed chains exist only for D_m");
  if (t == D(4)) prime = false;  // all four star tips are alike
  FamilyName f;
  f.kind = FamilyName::Kind::IChain;
  f.t1 = t; f.a = n; f.prime = prime;
  return f;
}

FamilyName fam_im(Int m) {
  if (m < 4) throw std::invalid_argument("I(m) needs m >= 4");
  FamilyName f;
  f.kind = FamilyName::Kind::IM;
  f.a = m;
  return f;
}

FamilyName fam_fixed(FamilyName::Kind k) {
  using K = FamilyName::Kind;
  if (k != K::Ia && k != K::Ib && k != K::Ic && k != K::IIa && k != K::IIb &&
      k != K::IIIa && k != K::IIIb)
    throw std::invalid_argument("not a parameterless family");
  FamilyName f;
  f.kind = k;
  return f;
}

FamilyName fam_iipair(ADEType t1, ADEType t2) {
  if (!valid_affine(t1) || !valid_affine(t2))
    throw std::invalid_argument("II(t1,t2) needs affine types");
  if (t2 < t1) std::swap(t1, t2);
  FamilyName f;
  f.kind = FamilyName::Kind::IIPair;
  f.t1 = t1; f.t2 = t2;
  return f;
}

FamilyName fam_iim(Int m) {
  if (m < 4) throw std::invalid_argument("II(m) needs m >= 4");
  FamilyName f;
  f.kind = FamilyName::Kind::IIM;
  f.a = m;
  return f;
}

FamilyName fam_iiidi(Int m, Int i) {
  if (m < 4) throw std::invalid_argument("III(D_m,i) needs m >= 4");
  if (i < 1 || i > m - 3) throw std::invalid_argument("III(D_m,i) needs 1 <= i <= m-3");
  i = std::min(i, m - 2 - i);  // mirror symmetry of the spine
  FamilyName f;
  f.kind = FamilyName::Kind::IIIDi;
  f.a = m; f.b = i;
  return f;
}

FamilyName fam_iiie(int rank) {
  if (rank != 7 && rank != 8) throw std::invalid_argument("III(E_n) needs n in {7,8}");
  FamilyName f;
  f.kind = FamilyName::Kind::IIIE;
  f.t1 = E(rank);
  return f;
}

FamilyName fam_iiimn(Int m, Int n) {
  if (m < 4) throw std::invalid_argument("III(m,n) needs m >= 4");
  if (n < 6 || n > 8) throw std::invalid_argument("III(m,n) needs n in {6,7,8}");
  FamilyName f;
  f.kind = FamilyName::Kind::IIIMN;
  f.a = m; f.b = n;
  return f;
}

FamilyName fam_xi(ADEType t1, ADEType t2, Int n) {
  if (!valid_affine(t1) || !valid_affine(t2))
    throw std::invalid_argument("X-I(t1,t2,n) needs affine types");
  if (n < 1) throw std::invalid_argument("X-I(t1,t2,n) needs n >= 1");
  if (t2 < t1) std::swap(t1, t2);
  FamilyName f;
  f.kind = FamilyName::Kind::XI;
  f.t1 = t1; f.t2 = t2; f.a = n;
  return f;
}

FamilyName fam_xiii(ADEType t) {
  if (!valid_affine(t)) throw std::invalid_argument("X-III(2t) needs an affine type");
  FamilyName f;
  f.kind = FamilyName::Kind::XIII;
  f.t1 = t;
  return f;
}

std::string FamilyName::str() const {
  using K = Kind;
  std::ostringstream os;
  switch (kind) {
    case K::I3: os << "I(" << a << "," << b << "," << c << ")"; break;
    case K::IChain:
      if (a == 0 && !prime)
        os << "II(" << t1.str() << ")";
      else
        os << "I(" << t1.str() << "," << a << ")" << (prime ? "'" : "");
      break;
    case K::IM: os << "I(" << a << ")"; break;
    case K::Ia: os << "Ia"; break;
    case K::Ib: os << "Ib"; break;
    case K::Ic: os << "Ic"; break;
    case K::IIPair: os << "II(" << t1.str() << "," << t2.str() << ")"; break;
    case K::IIM: os << "II(" << a << ")"; break;
    case K::IIa: os << "IIa"; break;
    case K::IIb: os << "IIb"; break;
    case K::IIIDi: os << "III(D" << a << "," << b << ")"; break;
    case K::IIIE: os << "III(" << t1.str() << ")"; break;
    case K::IIIMN: os << "III(" << a << "," << b << ")"; break;
    case K::IIIa: os << "IIIa"; break;
    case K::IIIb: os << "IIIb"; break;
    case K::XI: os << "X-I(" << t1.str() << "," << t2.str() << "," << a << ")"; break;
    case K::XIII: os << "X-III(2" << t1.str() << ")"; break;
  }
  return os.str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Int to_int(const std::string& s) {
  if (!all_digits(s)) throw std::invalid_argument("expected a number, got '" + s + "'");
  return std::stoll(s);
}

std::vector<std::string> split_args(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') { out.push_back(cur); cur.clear(); }
    else if (!std::isspace(static_cast<unsigned char>(c))) cur.push_back(c);
  }
  out.push_back(cur);
  return out;
}

} // namespace

FamilyName FamilyName::parse(const std::string& input) {
  std::string s;
  for (char c : input)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  using K = Kind;
  if (s == "Ia") return fam_fixed(K::Ia);
  if (s == "Ib") return fam_fixed(K::Ib);
  if (s == "Ic") return fam_fixed(K::Ic);
  if (s == "IIa") return fam_fixed(K::IIa);
  if (s == "IIb") return fam_fixed(K::IIb);
  if (s == "IIIa") return fam_fixed(K::IIIa);
  if (s == "IIIb") return fam_fixed(K::IIIb);

  bool prime = false;
  if (!s.empty() && s.back() == '\'') { prime = true; s.pop_back(); }
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw std::invalid_argument("cannot parse family name '" + input + "'");
  std::string head = s.substr(0, open);
  auto args = split_args(s.substr(open + 1, s.size() - open - 2));

  if (head == "I") {
    if (args.size() == 3) return fam_i3(to_int(args[0]), to_int(args[1]), to_int(args[2]));
    if (args.size() == 1) return fam_im(to_int(args[0]));
    if (args.size() == 2) return fam_ichain(ADEType::parse(args[0]), to_int(args[1]), prime);
    throw std::invalid_argument("cannot parse family name '" + input + "'");
  }
  if (head == "II") {
    if (args.size() == 1) {
      if (all_digits(args[0])) return fam_iim(to_int(args[0]));
      return fam_ichain(ADEType::parse(args[0]), 0, prime);
    }
    if (args.size() == 2)
      return fam_iipair(ADEType::parse(args[0]), ADEType::parse(args[1]));
    throw std::invalid_argument("cannot parse family name '" + input + "'");
  }
  if (head == "III") {
    if (args.size() == 1) {
      ADEType t = ADEType::parse(args[0]);
      return fam_iiie(t.rank);
    }
    if (args.size() == 2) {
      if (all_digits(args[0])) return fam_iiimn(to_int(args[0]), to_int(args[1]));
      ADEType t = ADEType::parse(args[0]);
      if (t.family != 'D') throw std::invalid_argument("III(t,i) needs t = D_m");
      return fam_iiidi(t.rank, to_int(args[1]));
    }
    throw std::invalid_argument("cannot parse family name '" + input + "'");
  }
  if (head == "X-I") {
    if (args.size() == 3)
      return fam_xi(ADEType::parse(args[0]), ADEType::parse(args[1]), to_int(args[2]));
    throw std::invalid_argument("cannot parse family name '" + input + "'");
  }
  if (head == "X-III") {
    if (args.size() == 1 && args[0].size() > 1 && args[0][0] == '2')
      return fam_xiii(ADEType::parse(args[0].substr(1)));
    throw std::invalid_argument("cannot parse family name '" + input + "'");
  }
  throw std::invalid_argument("cannot parse family name '" + input + "'");
}

RootedGraph build_family(const FamilyName& f) {
  using K = FamilyName::Kind;
  switch (f.kind) {
    case K::I3: {
      // Two junctions joined by three paths; length-1 paths pile up edge
      // multiplicity between the junctions.
      RootedGraph r;
      r.graph = WeightedGraph(2);
      r.dim = {1, 1};
      for (Int len : {f.a, f.b, f.c}) {
        if (len == 1) {
          r.graph.add_edge(0, 1);
          continue;
        }
        int prev = 0;
        for (Int k = 1; k < len; ++k) {
          int w = r.graph.add_vertex();
          r.dim.push_back(1);
          r.graph.add_edge(prev, w);
          prev = w;
        }
        r.graph.add_edge(prev, 1);
      }
      return r;
    }
    case K::IChain: {
      RootedGraph r = mir(f.t1);
      auto [u, v] = chain_ports(f.t1, f.prime);
      connect_chain(r, u, v, f.a);
      return r;
    }
    case K::IM: {
      Int m = f.a;
      std::vector<Int> w{1, 2};
      w.insert(w.end(), static_cast<size_t>(m - 3), 3);
      w.push_back(2);
      w.push_back(1);
      RootedGraph r = path_graph(w);
      pendant(r, 2);
      pendant(r, static_cast<int>(m) - 2);
      return r;
    }
    case K::Ia: {
      RootedGraph r = path_graph({3, 4, 3, 2, 1});
      attach_arm(r, 1, {2});
      pendant(r, 0);
      pendant(r, 0);
      return r;
    }
    case K::Ib: {
      RootedGraph r = path_graph({5, 4, 3, 2, 1});
      attach_arm(r, 0, {3, 1});
      attach_arm(r, 0, {3, 1});
      return r;
    }
    case K::Ic: {
      RootedGraph r = path_graph({3, 4, 5, 6, 4, 2});
      attach_arm(r, 3, {3});
      pendant(r, 0);
      pendant(r, 0);
      return r;
    }
    case K::IIPair: {
      RootedGraph r = mir(f.t1);
      int u = weight_one_vertex(r);
      RootedGraph s = mir(f.t2);
      int v = append_graph(r, s) + weight_one_vertex(s);
      merge_vertices(r, u, v);
      return r;
    }
    case K::IIM: {
      Int m = f.a;
      RootedGraph r = path_graph(std::vector<Int>(static_cast<size_t>(m - 3), 4));
      attach_arm(r, 0, {2});
      attach_arm(r, 0, {2});
      attach_arm(r, static_cast<int>(m) - 4, {3, 2, 1});
      attach_arm(r, static_cast<int>(m) - 4, {1});
      return r;
    }
    case K::IIa: {
      RootedGraph r = path_graph({4, 5, 6, 4, 2});
      attach_arm(r, 0, {2});
      attach_arm(r, 2, {3});
      pendant(r, 0);
      return r;
    }
    case K::IIb: {
      RootedGraph r = path_graph({4, 7, 10, 8, 6, 4, 2});
      attach_arm(r, 2, {5});
      pendant(r, 0);
      return r;
    }
    case K::IIIDi: {
      RootedGraph r = mir(D(static_cast<int>(f.a)));
      pendant(r, static_cast<int>(f.b) + 1);
      return r;
    }
    case K::IIIE: {
      RootedGraph r = mir(f.t1);
      pendant(r, f.t1 == E(7) ? 7 : 0);
      return r;
    }
    case K::IIIMN: {
      Int m = f.a, n = f.b;
      std::vector<Int> w(static_cast<size_t>(m - 3), 2);
      int hub;  // the high-degree E-tail vertex carrying the extra arm(s)
      if (n == 6) {
        w.push_back(3);
        hub = static_cast<int>(m) - 3;
      } else if (n == 7) {
        for (Int x : {3, 4, 3, 2, 1}) w.push_back(x);
        hub = static_cast<int>(m) - 2;
      } else {
        for (Int x : {3, 4, 5, 6, 4, 2}) w.push_back(x);
        hub = static_cast<int>(m);
      }
      RootedGraph r = path_graph(w);
      if (n == 6) {
        attach_arm(r, hub, {2, 1});
        attach_arm(r, hub, {2, 1});
      } else if (n == 7) {
        attach_arm(r, hub, {2});
      } else {
        attach_arm(r, hub, {3});
      }
      pendant(r, 0);
      pendant(r, 0);
      return r;
    }
    case K::IIIa: {
      RootedGraph r = path_graph({1, 2, 3, 4, 5, 4, 3, 2, 1});
      attach_arm(r, 4, {2});
      return r;
    }
    case K::IIIb: {
      RootedGraph r = path_graph({2, 5, 8, 7, 6, 5, 4, 3, 2, 1});
      attach_arm(r, 2, {4});
      return r;
    }
    case K::XI: {
      RootedGraph r = mir(f.t1);
      int u = weight_one_vertex(r);
      RootedGraph s = mir(f.t2);
      int v = append_graph(r, s) + weight_one_vertex(s);
      connect_chain(r, u, v, f.a);
      return r;
    }
    case K::XIII: {
      RootedGraph r = mir(f.t1);
      int u = weight_one_vertex(r);
      r.dim = scale(2, r.dim);
      pendant(r, u);
      return r;
    }
  }
  throw std::logic_error("unhandled family kind");
}

namespace {

std::vector<ADEType> affine_types_up_to(Int pmax) {
  std::vector<ADEType> ts;
  for (Int m = 0; m <= pmax; ++m) ts.push_back(A(static_cast<int>(m)));
  for (Int m = 4; m <= pmax; ++m) ts.push_back(D(static_cast<int>(m)));
  for (int m = 6; m <= 8 && m <= pmax; ++m) ts.push_back(E(m));
  return ts;
}

} // namespace

std::vector<FamilyName> table_grid(Int pmax) {
  using K = FamilyName::Kind;
  std::vector<FamilyName> out;
  for (Int l = 1; l <= pmax; ++l)
    for (Int m = l; m <= pmax; ++m)
      for (Int n = m; n <= pmax; ++n) out.push_back(fam_i3(l, m, n));
  for (Int m = 4; m <= pmax; ++m)
    for (Int n = 0; n <= pmax; ++n) {
      out.push_back(fam_ichain(D(static_cast<int>(m)), n, false));
      if (m >= 5) out.push_back(fam_ichain(D(static_cast<int>(m)), n, true));
    }
  for (int e : {6, 7})
    for (Int n = 0; n <= pmax; ++n) out.push_back(fam_ichain(E(e), n, false));
  for (Int m = 4; m <= pmax; ++m) out.push_back(fam_im(m));
  for (K k : {K::Ia, K::Ib, K::Ic, K::IIa, K::IIb, K::IIIa, K::IIIb})
    out.push_back(fam_fixed(k));
  auto ts = affine_types_up_to(pmax);
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = i; j < ts.size(); ++j) out.push_back(fam_iipair(ts[i], ts[j]));
  for (Int m = 4; m <= pmax; ++m) out.push_back(fam_iim(m));
  for (Int m = 4; m <= pmax; ++m)
    for (Int i = 1; 2 * i <= m - 2 && i <= m - 3; ++i) out.push_back(fam_iiidi(m, i));
  out.push_back(fam_iiie(7));
  out.push_back(fam_iiie(8));
  for (Int m = 4; m <= pmax; ++m)
    for (Int n = 6; n <= 8; ++n) out.push_back(fam_iiimn(m, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FamilyName> instances_up_to(Int max_rank, Int max_weight, const Budget& budget) {
  // Every parameter adds at least one vertex, so max_rank bounds them all.
  Int pmax = max_rank + 2;
  std::vector<FamilyName> cands = table_grid(pmax);
  auto ts = affine_types_up_to(pmax);
  for (size_t i = 0; i < ts.size(); ++i)
    for (size_t j = i; j < ts.size(); ++j)
      for (Int n = 1; n <= pmax; ++n) cands.push_back(fam_xi(ts[i], ts[j], n));
  for (ADEType t : ts) cands.push_back(fam_xiii(t));
  std::sort(cands.begin(), cands.end());

  std::vector<FamilyName> out;
  std::map<std::string, FamilyName> seen;
  for (const FamilyName& f : cands) {
    RootedGraph r = build_family(f);
    if (r.graph.size() > max_rank) continue;
    if (*std::max_element(r.dim.begin(), r.dim.end()) > max_weight) continue;
    std::string key = canonical_key(r.graph, r.dim, budget);
    if (seen.emplace(key, f).second) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<PairList> known_slice_pairs(const FamilyName& f) {
  using K = FamilyName::Kind;
  auto p = [](ADEType x, ADEType y) { return std::pair{norm1(x), norm1(y)}; };
  PairList ps;
  switch (f.kind) {
    case K::I3: {
      Int l = f.a, m = f.b, n = f.c;
      if (l >= 2) {
        ps = {p(A((int)(m + n - 1)), A((int)(l - 1))),
              p(A((int)(l + n - 1)), A((int)(m - 1))),
              p(A((int)(l + m - 1)), A((int)(n - 1)))};
      } else if (m >= 2) {
        ps = {p(A((int)n), A((int)(m - 1))), p(A((int)m), A((int)(n - 1)))};
      } else if (n >= 2) {
        ps = {p(A(1), A((int)(n - 1)))};
      }  // I(1,1,1): none
      break;
    }
    case K::IChain: {
      Int n = f.a;
      if (f.t1.family == 'D') {
        int m = f.t1.rank;
        if (f.prime) {
          if (n >= 2) ps.push_back(p(D(m), A((int)(n - 1))));
          ps.push_back(p(A((int)(n + 1)), D(m - 1)));
        } else {
          if (n >= 2) ps.push_back(p(D(m), A((int)(n - 1))));
          ps.push_back(p(A((int)(m + n - 3)), A(m - 1)));
        }
      } else if (f.t1 == E(6)) {
        if (n >= 2) ps.push_back(p(E(6), A((int)(n - 1))));
        ps.push_back(p(A((int)(n + 3)), D(5)));
      } else {
        if (n >= 2) ps.push_back(p(E(7), A((int)(n - 1))));
        ps.push_back(p(A((int)(n + 5)), E(6)));
      }
      break;
    }
    case K::IM: ps = {p(D((int)f.a), A((int)(f.a + 1)))}; break;
    case K::Ia: ps = {p(D(5), D(6))}; break;
    case K::Ib: ps = {p(E(6), D(7))}; break;
    case K::Ic: ps = {p(D(7), E(7))}; break;
    case K::IIPair: {
      bool z1 = f.t1 == A(0), z2 = f.t2 == A(0);
      if (z1 && z2) break;
      if (z1) { ps = {p(A(0), f.t2)}; break; }
      ps = {p(f.t1, f.t2), p(f.t2, f.t1)};
      break;
    }
    case K::IIM: ps = {p(D((int)f.a), D((int)f.a + 2))}; break;
    case K::IIa: ps = {p(D(6), E(7))}; break;
    case K::IIb: ps = {p(E(7), E(8))}; break;
    case K::IIIDi: {
      int m = (int)f.a, i = (int)f.b;
      if (m == 4) {
        ps.assign(5, p(D(4), A(1)));
      } else if (i == 1) {
        ps.assign(3, p(D(m), A(1)));
        ps.push_back(p(D(4), D(m - 2)));
      } else {
        ps = {p(D(m), A(1)), p(D(m - i + 1), D(i + 1)), p(D(i + 3), D(m - i - 1))};
      }
      break;
    }
    case K::IIIE:
      ps = f.t1 == E(7) ? PairList{p(E(6), A(7)), p(E(7), A(1))}
                        : PairList{p(E(7), D(8)), p(E(8), A(1))};
      break;
    case K::IIIMN: {
      int m = (int)f.a, n = (int)f.b;
      if (n == 6) {
        if (m == 4) ps = {p(D(5), A(5)), p(E(6), A(1)), p(E(6), A(1))};
        else ps = {p(D(m + 1), A(5)), p(E(6), D(m - 2))};
      } else if (n == 7) {
        if (m == 4) ps = {p(D(6), D(6)), p(E(7), A(1)), p(E(7), A(1))};
        else ps = {p(D(m + 2), D(6)), p(E(7), D(m - 2))};
      } else {
        if (m == 4) ps = {p(D(8), E(7)), p(E(8), A(1)), p(E(8), A(1))};
        else ps = {p(D(m + 4), E(7)), p(E(8), D(m - 2))};
      }
      break;
    }
    case K::IIIa: ps = {p(E(7), A(9))}; break;
    case K::IIIb: ps = {p(E(8), D(10))}; break;
    case K::XI:
    case K::XIII: return std::nullopt;
  }
  sort_pairs(ps);
  return ps;
}

std::optional<BigInt> known_symmetry_order(const FamilyName& f) {
  using K = FamilyName::Kind;
  switch (f.kind) {
    case K::I3: return factorial(f.a) * factorial(f.b) * factorial(f.c);
    case K::IChain: {
      Int n = f.a;
      if (f.t1 == E(6)) return BigInt(1920) * factorial(n);
      if (f.t1 == E(7)) return BigInt(51840) * factorial(n);
      Int m = f.t1.rank;
      if (f.prime) return pow2(m - 2) * factorial(m - 1) * factorial(n);
      return factorial(m) * factorial(n);
    }
    case K::IM: return factorial(f.a + 2);
    case K::Ia: return BigInt(23040);
    case K::Ib: return BigInt(322560);
    case K::Ic: return BigInt(2903040);
    case K::IIPair: return weyl_order(f.t1) * weyl_order(f.t2);
    case K::IIM: return pow2(f.a + 1) * factorial(f.a + 2);
    case K::IIa: return BigInt(2903040);
    case K::IIb: return BigInt(696729600);
    case K::IIIDi: return pow2(f.a - 1) * factorial(f.b + 1) * factorial(f.a - f.b - 1);
    case K::IIIE: return f.t1 == E(7) ? BigInt(80640) : BigInt(10321920);
    case K::IIIMN: {
      BigInt base = f.b == 6 ? 90 : (f.b == 7 ? 2880 : 362880);
      return pow2(f.a) * base * factorial(f.a - 2);
    }
    case K::IIIa: return BigInt(3628800);
    case K::IIIb: return BigInt(1857945600);
    case K::XI:
    case K::XIII: return std::nullopt;
  }
  return std::nullopt;
}

} // namespace qv
