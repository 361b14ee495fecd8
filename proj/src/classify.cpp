#include "qv/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qv {

std::string to_string(SolutionType t) {
  switch (t) {
    case SolutionType::I: return "I";
    case SolutionType::II: return "II";
    case SolutionType::III: return "III";
  }
  return "?";
}

UnbalancedSignature unbalanced_signature(const WeightedGraph& g, const DimVector& a) {
  UnbalancedSignature sig{SolutionType::I, {}};
  for (int i = 0; i < g.size(); ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    Int b = g.vertex_balance(a, i);
    if (b > 0) throw std::invalid_argument("unbalanced_signature: positive balance");
    if (b < 0) sig.unbalanced.emplace_back(i, a[static_cast<size_t>(i)], b);
  }
  auto is = [&](size_t k, Int w, Int b) {
    return std::get<1>(sig.unbalanced[k]) == w && std::get<2>(sig.unbalanced[k]) == b;
  };
  if (sig.unbalanced.size() == 2 && is(0, 1, -1) && is(1, 1, -1)) {
    sig.type = SolutionType::I;
  } else if (sig.unbalanced.size() == 1 && is(0, 1, -2)) {
    sig.type = SolutionType::II;
  } else if (sig.unbalanced.size() == 1 && is(0, 2, -1)) {
    sig.type = SolutionType::III;
  } else {
    throw std::invalid_argument("unbalanced_signature: total deficit is not 2");
  }
  return sig;
}

bool half_lemma_ok(const WeightedGraph& g, const DimVector& a, int i, int j) {
  if (g.edge_mult(i, j) == 0)
    throw std::invalid_argument("half_lemma_ok: vertices not adjacent");
  if (a[static_cast<size_t>(j)] > (a[static_cast<size_t>(i)] + 1) / 2) return true;
  return g.vertex_balance(a, j) <= 0;
}

namespace {

// Scan over symmetric multiplicity matrices for a fixed weight tuple.  Each
// vertex must end with 2a_v <= s_v <= 2a_v + 2 where s_v sums incident
// weight (loops twice), and the weighted deficits must add up to exactly 2;
// rows are filled in lexicographic pair order with interval pruning.
struct Scan {
  int n;
  const DimVector& a;
  const Budget& budget;
  std::vector<Int> suffix;  // suffix[j] = a[j] + ... + a[n-1]
  std::vector<int> loops;
  std::vector<std::vector<int>> mult;
  std::vector<Int> s;
  std::map<std::string, std::pair<WeightedGraph, DimVector>>& hits;

  Scan(int n_, const DimVector& a_, const Budget& b,
       std::map<std::string, std::pair<WeightedGraph, DimVector>>& h)
      : n(n_), a(a_), budget(b), suffix(static_cast<size_t>(n_) + 1, 0),
        loops(static_cast<size_t>(n_), 0),
        mult(static_cast<size_t>(n_), std::vector<int>(static_cast<size_t>(n_), 0)),
        s(static_cast<size_t>(n_), 0), hits(h) {
    for (int j = n - 1; j >= 0; --j)
      suffix[static_cast<size_t>(j)] = suffix[static_cast<size_t>(j) + 1] + a[static_cast<size_t>(j)];
  }

  Int cap(int v) const { return 2 * a[static_cast<size_t>(v)] + 2; }

  void choose_loops(int v) {
    if (v == n) {
      row(0, 1, 0);
      return;
    }
    for (int l = 0; l <= 2; ++l) {
      Int sv = 2 * Int(l) * a[static_cast<size_t>(v)];
      if (sv > cap(v)) break;
      loops[static_cast<size_t>(v)] = l;
      s[static_cast<size_t>(v)] = sv;
      choose_loops(v + 1);
    }
    loops[static_cast<size_t>(v)] = 0;
    s[static_cast<size_t>(v)] = 0;
  }

  void row(int i, int j, Int deficit) {
    if (i == n - 1) {
      Int d = s[static_cast<size_t>(i)] - 2 * a[static_cast<size_t>(i)];
      if (d >= 0 && d <= 2 && deficit + a[static_cast<size_t>(i)] * d == 2) emit();
      return;
    }
    if (j == n) {
      Int d = s[static_cast<size_t>(i)] - 2 * a[static_cast<size_t>(i)];
      if (d < 0 || d > 2) return;
      Int next = deficit + a[static_cast<size_t>(i)] * d;
      if (next > 2) return;
      row(i + 1, i + 2, next);
      return;
    }
    // row i can still gain at most 3 * (a_j + ... + a_{n-1})
    if (s[static_cast<size_t>(i)] + 3 * suffix[static_cast<size_t>(j)] <
        2 * a[static_cast<size_t>(i)])
      return;
    for (int m = 0; m <= 3; ++m) {
      Int si = s[static_cast<size_t>(i)] + m * a[static_cast<size_t>(j)];
      Int sj = s[static_cast<size_t>(j)] + m * a[static_cast<size_t>(i)];
      if (si > cap(i) || sj > cap(j)) break;
      mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = m;
      Int oi = s[static_cast<size_t>(i)], oj = s[static_cast<size_t>(j)];
      s[static_cast<size_t>(i)] = si;
      s[static_cast<size_t>(j)] = sj;
      row(i, j + 1, deficit);
      s[static_cast<size_t>(i)] = oi;
      s[static_cast<size_t>(j)] = oj;
    }
    mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
  }

  void emit() {
    WeightedGraph g(n);
    for (int v = 0; v < n; ++v) g.set_loops(v, loops[static_cast<size_t>(v)]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mult[static_cast<size_t>(i)][static_cast<size_t>(j)] > 0)
          g.set_edge(i, j, mult[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    if (!g.is_connected()) return;
    hits.try_emplace(canonical_key(g, a, budget), g, a);
  }
};

void weight_tuples(int n, int k, Int cap, DimVector& a, const Budget& budget,
                   std::map<std::string, std::pair<WeightedGraph, DimVector>>& hits) {
  if (k == n) {
    Scan scan(n, a, budget, hits);
    scan.choose_loops(0);
    return;
  }
  for (Int w = cap; w >= 1; --w) {
    a[static_cast<size_t>(k)] = w;
    weight_tuples(n, k + 1, w, a, budget, hits);
  }
}

std::map<std::string, FamilyName> instance_keys(Int max_rank, Int max_weight,
                                                const Budget& budget) {
  std::map<std::string, FamilyName> keys;
  for (const FamilyName& f : instances_up_to(max_rank, max_weight, budget)) {
    RootedGraph r = build_family(f);
    keys.emplace(canonical_key(r.graph, r.dim, budget), f);
  }
  return keys;
}

} // namespace

std::vector<ClassifiedVector> enumerate_p2_fundamental(Int max_rank, Int max_weight,
                                                       const Budget& budget) {
  if (max_rank < 1 || max_weight < 1)
    throw std::invalid_argument("enumerate_p2_fundamental: empty bounds");
  if (max_rank > 7 || max_weight > 8)
    throw budget_exceeded("enumeration bounds beyond the supported budget");
  std::map<std::string, std::pair<WeightedGraph, DimVector>> hits;
  for (int n = 1; n <= max_rank; ++n) {
    DimVector a(static_cast<size_t>(n));
    weight_tuples(n, 0, max_weight, a, budget, hits);
  }
  std::map<std::string, FamilyName> names = instance_keys(max_rank, max_weight, budget);
  std::vector<ClassifiedVector> out;
  out.reserve(hits.size());
  for (const auto& [key, ga] : hits) {
    ClassifiedVector cv{ga.first, ga.second, std::nullopt,
                        unbalanced_signature(ga.first, ga.second)};
    auto it = names.find(key);
    if (it != names.end()) cv.family = it->second;
    out.push_back(std::move(cv));
  }
  return out;
}

std::optional<FamilyName> match_family(const WeightedGraph& g, const DimVector& a,
                                       const Budget& budget) {
  Int w = 0;
  for (Int v : a) w = std::max(w, v);
  std::map<std::string, FamilyName> names = instance_keys(g.size(), w, budget);
  auto it = names.find(canonical_key(g, a, budget));
  if (it == names.end()) return std::nullopt;
  return it->second;
}

namespace {

RootedGraph frag(Int center, int center_loops, std::vector<std::pair<int, Int>> nbrs) {
  RootedGraph r;
  r.graph = WeightedGraph(1 + static_cast<int>(nbrs.size()));
  r.graph.set_loops(0, center_loops);
  r.dim.push_back(center);
  int k = 1;
  for (const auto& [m, w] : nbrs) {
    r.graph.set_edge(0, k, m);
    r.dim.push_back(w);
    ++k;
  }
  return r;
}

} // namespace

std::vector<RootedGraph> local_structures(SolutionType t) {
  switch (t) {
    case SolutionType::I:
      // neighboring weight sums to 3, or 1 past a loop
      return {
          frag(1, 0, {{1, 3}}),
          frag(1, 0, {{2, 1}, {1, 1}}),
          frag(1, 0, {{1, 2}, {1, 1}}),
          frag(1, 0, {{1, 1}, {1, 1}, {1, 1}}),
          frag(1, 1, {{1, 1}}),
      };
    case SolutionType::II:
      // neighboring weight sums to 4, or 2 past one loop, 0 past two
      return {
          frag(1, 0, {{2, 2}}),
          frag(1, 0, {{1, 4}}),
          frag(1, 0, {{2, 1}, {2, 1}}),
          frag(1, 0, {{2, 1}, {1, 2}}),
          frag(1, 0, {{1, 2}, {1, 2}}),
          frag(1, 0, {{1, 1}, {1, 3}}),
          frag(1, 0, {{2, 1}, {1, 1}, {1, 1}}),
          frag(1, 0, {{1, 2}, {1, 1}, {1, 1}}),
          frag(1, 0, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}),
          frag(1, 1, {{2, 1}}),
          frag(1, 1, {{1, 2}}),
          frag(1, 1, {{1, 1}, {1, 1}}),
          frag(1, 2, {}),
      };
    case SolutionType::III:
      // neighboring weight sums to 5, or 1 past a loop
      return {
          frag(2, 0, {{1, 5}}),
          frag(2, 0, {{2, 2}, {1, 1}}),
          frag(2, 0, {{1, 2}, {1, 3}}),
          frag(2, 0, {{1, 1}, {1, 4}}),
          frag(2, 0, {{1, 2}, {1, 2}, {1, 1}}),
          frag(2, 0, {{1, 1}, {1, 1}, {1, 3}}),
          frag(2, 0, {{1, 2}, {1, 1}, {1, 1}, {1, 1}}),
          frag(2, 0, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}),
          frag(2, 1, {{1, 1}}),
      };
  }
  return {};
}

} // namespace qv
