#include "qv/roots.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "qv/dynkin.hpp"

namespace qv {

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::NotRoot: return "not-root";
    case RootClass::Real: return "real";
    case RootClass::ImaginaryIsotropic: return "imaginary-isotropic";
    case RootClass::ImaginaryAnisotropic: return "imaginary-anisotropic";
  }
  return "?";
}

Int Decomposition::part_count() const {
  Int c = 0;
  for (const auto& [m, part] : parts) c += m;
  return c;
}

DimVector Decomposition::total(size_t n) const {
  DimVector t(n, 0);
  for (const auto& [m, part] : parts)
    for (size_t i = 0; i < part.size() && i < n; ++i) t[i] += m * part[i];
  return t;
}

DimVector reflect(const WeightedGraph& g, const DimVector& a, int i) {
  if (g.loops(i) > 0) throw std::invalid_argument("reflect: vertex carries a loop");
  DimVector b = a;
  b[static_cast<size_t>(i)] -= g.vertex_balance(a, i);
  return b;
}

bool in_fundamental_set(const WeightedGraph& g, const DimVector& a) {
  if (is_zero(a) || !is_nonneg(a)) return false;
  if (!g.connected_support(a)) return false;
  for (int i = 0; i < g.size(); ++i)
    if (a[static_cast<size_t>(i)] > 0 && g.vertex_balance(a, i) > 0) return false;
  return true;
}

RootClass classify_root(const WeightedGraph& g, const DimVector& a) {
  if (static_cast<int>(a.size()) != g.size())
    throw std::invalid_argument("classify_root: size mismatch");
  if (is_zero(a) || !is_nonneg(a)) return RootClass::NotRoot;
  DimVector v = a;
  for (;;) {
    if (!g.connected_support(v)) return RootClass::NotRoot;
    // off-support balances are never positive, so scanning the support
    // suffices for the lowest vertex with positive balance
    int pos = -1;
    for (int i = 0; i < g.size(); ++i) {
      if (v[static_cast<size_t>(i)] > 0 && g.vertex_balance(v, i) > 0) {
        pos = i;
        break;
      }
    }
    if (pos < 0)
      return g.p(v) == 1 ? RootClass::ImaginaryIsotropic : RootClass::ImaginaryAnisotropic;
    if (height(v) == 1) return RootClass::Real;
    // positive balance forces a_pos > 0 and no loop at pos, and the
    // reflection drops the height by that balance, so descent terminates
    v = reflect(g, v, pos);
    if (!is_nonneg(v)) return RootClass::NotRoot;
  }
}

bool is_root(const WeightedGraph& g, const DimVector& a) {
  return classify_root(g, a) != RootClass::NotRoot;
}

namespace {

// minimum balance at j over all completions of the partial assignment
// cur[0..k], taking unassigned neighbors at their bound
Int min_balance(const WeightedGraph& g, const DimVector& cur, const DimVector& bound, int k,
                int j) {
  Int b = 2 * (1 - Int(g.loops(j))) * cur[static_cast<size_t>(j)];
  for (int u = 0; u < g.size(); ++u) {
    if (u == j) continue;
    int m = g.edge_mult(j, u);
    if (m == 0) continue;
    b -= Int(m) * (u <= k ? cur[static_cast<size_t>(u)] : bound[static_cast<size_t>(u)]);
  }
  return b;
}

void fundamental_scan(const WeightedGraph& g, const DimVector& bound, int k, DimVector& cur,
                      std::set<DimVector>& out) {
  int n = g.size();
  if (k == n) {
    if (!is_zero(cur) && in_fundamental_set(g, cur)) out.insert(cur);
    return;
  }
  for (Int v = 0; v <= bound[static_cast<size_t>(k)]; ++v) {
    cur[static_cast<size_t>(k)] = v;
    // a vertex whose balance cannot come back down to zero kills the branch
    bool dead = min_balance(g, cur, bound, k, k) > 0;
    for (int j = 0; !dead && j < k; ++j)
      if (g.edge_mult(j, k) > 0 && min_balance(g, cur, bound, k, j) > 0) dead = true;
    if (!dead) fundamental_scan(g, bound, k + 1, cur, out);
  }
  cur[static_cast<size_t>(k)] = 0;
}

} // namespace

std::vector<DimVector> positive_roots_below(const WeightedGraph& g, const DimVector& bound,
                                            const Budget& budget) {
  int n = g.size();
  if (static_cast<int>(bound.size()) != n)
    throw std::invalid_argument("positive_roots_below: size mismatch");
  if (!is_nonneg(bound)) throw std::invalid_argument("positive_roots_below: negative bound");
  long long box = 1;
  for (Int b : bound) {
    box *= static_cast<long long>(b) + 1;
    if (box > budget.max_box) throw budget_exceeded("root box exceeds budget");
  }

  std::set<DimVector> seen;
  for (int i = 0; i < n; ++i)
    if (bound[static_cast<size_t>(i)] >= 1 && g.loops(i) == 0) seen.insert(unit_vector(n, i));
  DimVector cur(static_cast<size_t>(n), 0);
  fundamental_scan(g, bound, 0, cur, seen);

  // every root's descent chain moves through the box coordinatewise
  // monotonically, so closing the seeds under in-box reflections finds all
  std::queue<DimVector> bfs;
  for (const auto& v : seen) bfs.push(v);
  while (!bfs.empty()) {
    DimVector v = std::move(bfs.front());
    bfs.pop();
    for (int i = 0; i < n; ++i) {
      if (g.loops(i) > 0) continue;
      DimVector w = reflect(g, v, i);
      if (!is_nonneg(w) || is_zero(w) || !leq(w, bound)) continue;
      if (seen.insert(w).second) bfs.push(w);
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

// is edge {u, v} (multiplicity 1) a bridge of g, and if so, which vertices
// land on v's side?  empty result when the edge is not a bridge.
std::vector<int> bridge_side(const WeightedGraph& g, int u, int v) {
  std::vector<char> vis(static_cast<size_t>(g.size()), 0);
  std::vector<int> stack{v}, side;
  vis[static_cast<size_t>(v)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    side.push_back(x);
    for (int y = 0; y < g.size(); ++y) {
      if (x == u && y == v) continue;
      if (x == v && y == u) continue;
      if (g.edge_mult(x, y) > 0 && !vis[static_cast<size_t>(y)]) {
        vis[static_cast<size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  if (vis[static_cast<size_t>(u)]) return {};
  std::sort(side.begin(), side.end());
  return side;
}

// does a restricted to comp equal n * delta, n >= 2, of an affine diagram
// whose delta-weight at vertex `at` is 1?
bool is_higher_delta_with_unit_port(const WeightedGraph& g, const DimVector& a,
                                    const std::vector<int>& comp, int at) {
  auto ad = affine_diagram_delta(g.induced(comp));
  if (!ad) return false;
  const DimVector& delta = ad->second;
  Int n = 0;
  for (size_t k = 0; k < comp.size(); ++k) {
    Int av = a[static_cast<size_t>(comp[k])];
    if (av % delta[k] != 0) return false;
    Int q = av / delta[k];
    if (k == 0) n = q;
    if (q != n) return false;
  }
  if (n < 2) return false;
  auto it = std::find(comp.begin(), comp.end(), at);
  return delta[static_cast<size_t>(it - comp.begin())] == 1;
}

} // namespace

bool in_sigma(const WeightedGraph& g, const DimVector& a) {
  RootClass c = classify_root(g, a);
  if (c == RootClass::NotRoot) throw std::invalid_argument("in_sigma: not a root");
  if (height(a) == 1) return true;
  // a real root of height > 1 splits against its own descent chain
  if (c == RootClass::Real) return false;
  // an imaginary root outside the fundamental set splits off the simple it
  // was last reflected at; p is reflection invariant, so equality holds and
  // the strict inequality fails
  if (!in_fundamental_set(g, a)) return false;

  std::vector<int> sup = g.support(a);
  WeightedGraph s = g.induced(sup);
  DimVector as = restrict_to(a, sup);

  if (c == RootClass::ImaginaryIsotropic) {
    // totally balanced with p = 1: the support diagram is affine and a is a
    // multiple of its null vector; only the generator itself stays
    auto ad = affine_diagram_delta(s);
    if (!ad) throw std::logic_error("in_sigma: isotropic fundamental vector off affine support");
    return as == ad->second;
  }

  // anisotropic in the fundamental set: fails only on a multiplicity-one
  // bridge whose ends are both weight 1, or one end weight 1 and the other
  // side a higher multiple of an affine null vector met at delta-weight 1
  int m = s.size();
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (s.edge_mult(u, v) != 1) continue;
      std::vector<int> vside = bridge_side(s, u, v);
      if (vside.empty()) continue;
      if (as[static_cast<size_t>(u)] == 1 && as[static_cast<size_t>(v)] == 1) return false;
      if (as[static_cast<size_t>(u)] == 1 &&
          is_higher_delta_with_unit_port(s, as, vside, v))
        return false;
      if (as[static_cast<size_t>(v)] == 1) {
        // the support graph is connected, so u's side is the complement
        std::vector<int> uside;
        for (int x = 0; x < m; ++x)
          if (!std::binary_search(vside.begin(), vside.end(), x)) uside.push_back(x);
        if (is_higher_delta_with_unit_port(s, as, uside, u)) return false;
      }
    }
  }
  return true;
}

bool in_sigma_oracle(const WeightedGraph& g, const DimVector& a, const Budget& budget) {
  if (classify_root(g, a) == RootClass::NotRoot)
    throw std::invalid_argument("in_sigma_oracle: not a root");
  std::vector<DimVector> roots = positive_roots_below(g, a, budget);
  std::map<DimVector, Int> memo;
  // best summed p over decompositions of v into one or more positive roots;
  // v > 0 always splits into simples, so the maximum exists
  std::function<Int(const DimVector&)> best = [&](const DimVector& v) -> Int {
    if (is_zero(v)) return 0;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    Int b = std::numeric_limits<Int>::min();
    for (const auto& r : roots)
      if (leq(r, v)) b = std::max(b, g.p(r) + best(sub(v, r)));
    memo[v] = b;
    return b;
  };
  bool any = false;
  Int split = std::numeric_limits<Int>::min();
  for (const auto& r : roots) {
    if (r == a || !leq(r, a)) continue;
    any = true;
    split = std::max(split, g.p(r) + best(sub(a, r)));
  }
  if (!any) return true;
  return g.p(a) > split;
}

std::vector<Decomposition> sigma_decompositions(const WeightedGraph& g, const DimVector& a,
                                                const Budget& budget) {
  if (!is_nonneg(a)) throw std::invalid_argument("sigma_decompositions: negative vector");
  if (is_zero(a)) return {Decomposition{}};
  std::vector<DimVector> sigmas;
  for (const auto& r : positive_roots_below(g, a, budget))
    if (in_sigma(g, r)) sigmas.push_back(r);
  std::sort(sigmas.begin(), sigmas.end(), std::greater<DimVector>());

  size_t n = a.size();
  // union of supports of the suffix from each index, for early cutoff
  std::vector<std::vector<char>> suffsup(sigmas.size() + 1, std::vector<char>(n, 0));
  for (size_t i = sigmas.size(); i-- > 0;) {
    suffsup[i] = suffsup[i + 1];
    for (size_t j = 0; j < n; ++j)
      if (sigmas[i][j] > 0) suffsup[i][j] = 1;
  }

  std::vector<Decomposition> out;
  Decomposition cur;
  long long nodes = 0;
  std::function<void(size_t, DimVector&)> rec = [&](size_t i, DimVector& rem) {
    if (++nodes > budget.max_decomp_nodes)
      throw budget_exceeded("decomposition search exceeds budget");
    if (is_zero(rem)) {
      out.push_back(cur);
      return;
    }
    if (i == sigmas.size()) return;
    for (size_t j = 0; j < n; ++j)
      if (rem[j] > 0 && !suffsup[i][j]) return;
    Int maxm = std::numeric_limits<Int>::max();
    for (size_t j = 0; j < n; ++j)
      if (sigmas[i][j] > 0) maxm = std::min(maxm, rem[j] / sigmas[i][j]);
    for (Int m = maxm; m >= 1; --m) {
      cur.parts.emplace_back(m, sigmas[i]);
      DimVector next = rem;
      for (size_t j = 0; j < n; ++j) next[j] -= m * sigmas[i][j];
      rec(i + 1, next);
      cur.parts.pop_back();
    }
    rec(i + 1, rem);
  };
  DimVector rem = a;
  rec(0, rem);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool match_targets(const std::vector<DimVector>& targets, size_t t,
                   const std::vector<std::pair<Int, DimVector>>& pool, std::vector<Int>& avail) {
  if (t == targets.size()) return true;
  size_t n = targets[t].size();
  // pick a sub-multiset of the pool summing to targets[t]
  std::function<bool(size_t, DimVector&)> pick = [&](size_t j, DimVector& rest) -> bool {
    if (is_zero(rest)) return match_targets(targets, t + 1, pool, avail);
    if (j == pool.size()) return false;
    Int maxm = avail[j];
    for (size_t k = 0; k < n && maxm > 0; ++k)
      if (pool[j].second[k] > 0) maxm = std::min(maxm, rest[k] / pool[j].second[k]);
    for (Int m = maxm; m >= 0; --m) {
      DimVector next = rest;
      for (size_t k = 0; k < n; ++k) next[k] -= m * pool[j].second[k];
      avail[j] -= m;
      if (pick(j + 1, next)) return true;
      avail[j] += m;
    }
    return false;
  };
  DimVector rest = targets[t];
  return pick(0, rest);
}

} // namespace

bool refines(const Decomposition& fine, const Decomposition& coarse) {
  size_t n = 0;
  for (const auto& [m, part] : fine.parts) n = std::max(n, part.size());
  for (const auto& [m, part] : coarse.parts) n = std::max(n, part.size());
  if (fine.total(n) != coarse.total(n)) return false;
  std::vector<DimVector> targets;
  for (const auto& [m, part] : coarse.parts) {
    DimVector p = part;
    p.resize(n, 0);
    for (Int k = 0; k < m; ++k) targets.push_back(p);
  }
  std::vector<std::pair<Int, DimVector>> pool;
  std::vector<Int> avail;
  for (const auto& [m, part] : fine.parts) {
    DimVector p = part;
    p.resize(n, 0);
    pool.emplace_back(m, p);
    avail.push_back(m);
  }
  return match_targets(targets, 0, pool, avail);
}

Decomposition canonical_decomposition(const WeightedGraph& g, const DimVector& a,
                                      const Budget& budget) {
  std::vector<Decomposition> decs = sigma_decompositions(g, a, budget);
  if (decs.empty()) throw std::logic_error("canonical_decomposition: no decomposition");
  // grouping two or more parts into one strictly raises the summed p, so the
  // coarsest decomposition is the strict maximizer
  auto sump = [&](const Decomposition& d) {
    Int s = 0;
    for (const auto& [m, part] : d.parts) s += m * g.p(part);
    return s;
  };
  size_t bi = 0;
  Int bp = sump(decs[0]);
  bool tie = false;
  for (size_t i = 1; i < decs.size(); ++i) {
    Int p = sump(decs[i]);
    if (p > bp) {
      bp = p;
      bi = i;
      tie = false;
    } else if (p == bp) {
      tie = true;
    }
  }
  if (tie) throw std::logic_error("canonical_decomposition: maximizer not unique");
  for (size_t i = 0; i < decs.size(); ++i)
    if (i != bi && !refines(decs[i], decs[bi]))
      throw std::logic_error("canonical_decomposition: found one that does not refine");
  return decs[bi];
}

} // namespace qv
