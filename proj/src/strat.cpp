#include "qv/strat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qv {

namespace {

// unordered partitions of m, parts descending within each
std::vector<std::vector<Int>> partitions_of(Int m) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  std::function<void(Int, Int)> rec = [&](Int left, Int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (Int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

void sort_groups(std::vector<std::pair<Int, DimVector>>& parts) {
  std::sort(parts.begin(), parts.end(),
            [](const std::pair<Int, DimVector>& x, const std::pair<Int, DimVector>& y) {
              if (x.second != y.second) return y.second < x.second;
              return y.first < x.first;
            });
}

} // namespace

std::string RepresentationType::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "; ";
    os << parts[i].first << ',' << to_string(parts[i].second);
  }
  os << ')';
  return os.str();
}

std::vector<RepresentationType> representation_types(const WeightedGraph& g, const DimVector& a,
                                                     const Budget& budget) {
  std::vector<RepresentationType> out;
  for (const auto& dec : sigma_decompositions(g, a, budget)) {
    // per-part group splittings: a part with p >= 1 carries arbitrarily many
    // non-isomorphic simples, so its multiplicity splits along every
    // partition; a part with p = 0 carries exactly one
    std::vector<std::vector<std::vector<std::pair<Int, DimVector>>>> options;
    for (const auto& [m, beta] : dec.parts) {
      auto& opt = options.emplace_back();
      if (g.p(beta) >= 1) {
        for (const auto& lambda : partitions_of(m)) {
          auto& grp = opt.emplace_back();
          for (Int block : lambda) grp.emplace_back(block, beta);
        }
      } else {
        opt.push_back({{m, beta}});
      }
    }
    std::vector<std::pair<Int, DimVector>> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == options.size()) {
        RepresentationType t;
        t.parts = cur;
        sort_groups(t.parts);
        for (const auto& [n, beta] : t.parts) t.leaf_dim += 2 * g.p(beta);
        out.push_back(std::move(t));
        return;
      }
      for (const auto& grp : options[i]) {
        size_t keep = cur.size();
        cur.insert(cur.end(), grp.begin(), grp.end());
        rec(i + 1);
        cur.resize(keep);
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end(), [](const RepresentationType& x, const RepresentationType& y) {
    if (x.leaf_dim != y.leaf_dim) return x.leaf_dim > y.leaf_dim;
    return x.parts < y.parts;
  });
  return out;
}

ExtQuiver ext_quiver(const WeightedGraph& g, const std::vector<std::pair<Int, DimVector>>& parts) {
  int k = static_cast<int>(parts.size());
  ExtQuiver q;
  q.graph = WeightedGraph(k);
  q.dim.reserve(parts.size());
  for (const auto& [n, beta] : parts) q.dim.push_back(n);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      Int arrows = -g.euler_form(parts[static_cast<size_t>(i)].second,
                                 parts[static_cast<size_t>(j)].second);
      if (arrows < 0) throw std::invalid_argument("ext_quiver: parts pair positively");
      if (arrows > 0) q.graph.set_edge(i, j, static_cast<int>(arrows));
    }
    Int pi = g.p(parts[static_cast<size_t>(i)].second);
    if (pi < 0) throw std::invalid_argument("ext_quiver: part with negative p");
    q.graph.set_loops(i, static_cast<int>(pi));
  }
  WeightedGraph stripped = q.graph;
  for (int i = 0; i < k; ++i) stripped.set_loops(i, 0);
  q.recognized = recognize_affine_dynkin(stripped, q.dim);
  return q;
}

std::vector<IsotropicDecomposition> isotropic_decompositions(const WeightedGraph& g,
                                                             const DimVector& a,
                                                             const Budget& budget) {
  if (!in_sigma(g, a) || g.p(a) != 2)
    throw std::invalid_argument(
        "isotropic_decompositions: need an indecomposable vector with p = 2");
  std::vector<IsotropicDecomposition> out;
  for (const auto& dec : sigma_decompositions(g, a, budget)) {
    Int weighted = 0;
    for (const auto& [m, beta] : dec.parts) weighted += m * g.p(beta);
    // a proper split of a Sigma member strictly loses p, so at most one
    // isotropic part survives, with multiplicity one
    if (weighted >= 2) {
      if (dec.part_count() == 1) continue; // the trivial decomposition
      throw std::logic_error("isotropic_decompositions: proper split keeps p");
    }
    if (weighted == 0) continue; // fully rigid, the point stratum
    IsotropicDecomposition d;
    for (const auto& [m, beta] : dec.parts) {
      if (g.p(beta) == 1) {
        d.isotropic = beta;
      } else {
        if (height(beta) != 1)
          throw std::logic_error("isotropic_decompositions: non-simple rigid part");
        d.real_parts.emplace_back(m, beta);
      }
    }
    std::vector<std::pair<Int, DimVector>> parts;
    parts.emplace_back(1, d.isotropic);
    parts.insert(parts.end(), d.real_parts.begin(), d.real_parts.end());
    d.quiver = ext_quiver(g, parts);
    if (!d.quiver.recognized) continue; // extension quiver not affine: empty stratum
    d.theta = *d.quiver.recognized;
    std::vector<int> supp = g.support(d.isotropic);
    auto ad = affine_diagram_delta(g.induced(supp));
    if (!ad || ad->second != restrict_to(d.isotropic, supp))
      throw std::logic_error("isotropic_decompositions: isotropic part off its minimal root");
    d.delta = ad->first;
    out.push_back(std::move(d));
  }
  return out;
}

std::string HasseDiagram::Edge::label_str() const {
  if (!label) return "-";
  if (diagonal) return label->str() + "-diagonal";
  return label->str();
}

HasseDiagram hasse_diagram(const WeightedGraph& g, const DimVector& a, const Budget& budget) {
  std::vector<IsotropicDecomposition> isos = isotropic_decompositions(g, a, budget);

  HasseDiagram h;
  RepresentationType top;
  top.parts.emplace_back(1, a);
  top.leaf_dim = 2 * g.p(a);
  h.nodes.push_back({top, top.leaf_dim});

  struct Mid {
    RepresentationType type;
    ADEType theta, delta;
  };
  std::vector<Mid> mids;
  for (const auto& d : isos) {
    RepresentationType t;
    t.parts.emplace_back(1, d.isotropic);
    for (const auto& rp : d.real_parts) t.parts.push_back(rp);
    sort_groups(t.parts);
    t.leaf_dim = 2;
    mids.push_back({std::move(t), d.theta, d.delta});
  }
  std::sort(mids.begin(), mids.end(),
            [](const Mid& x, const Mid& y) { return x.type < y.type; });
  for (const auto& m : mids) {
    int idx = static_cast<int>(h.nodes.size());
    h.edges.push_back({0, idx, m.theta, false});
    h.nodes.push_back({m.type, 2});
  }

  bool loopfree = true;
  std::vector<int> supp = g.support(a);
  for (int v : supp)
    if (g.loops(v) > 0) loopfree = false;
  if (loopfree && height(a) > 1) {
    RepresentationType bot;
    for (int v : supp)
      bot.parts.emplace_back(a[static_cast<size_t>(v)], unit_vector(g.size(), v));
    sort_groups(bot.parts);
    bot.leaf_dim = 0;
    int bi = static_cast<int>(h.nodes.size());
    h.nodes.push_back({bot, 0});
    if (mids.empty()) {
      h.edges.push_back({0, bi, std::nullopt, false});
    } else {
      for (size_t i = 0; i < mids.size(); ++i)
        h.edges.push_back({static_cast<int>(1 + i), bi, mids[i].delta, false});
    }
  }
  return h;
}

HasseDiagram sym2_hasse(ADEType t) {
  if (t.family == 'A' && t.rank == 0)
    throw std::invalid_argument("sym2_hasse: trivial surface group");
  RootedGraph r = mir(t);
  DimVector two = scale(2, r.dim);
  std::vector<RepresentationType> types = representation_types(r.graph, two);
  // expected strata: two distinct simples, a repeated simple, one simple
  // plus point modules, all points
  if (types.size() != 4 || types[0].leaf_dim != 4 || types[1].leaf_dim != 2 ||
      types[2].leaf_dim != 2 || types[3].leaf_dim != 0)
    throw std::logic_error("sym2_hasse: unexpected strata");
  auto is_diag = [&](const RepresentationType& rt) {
    return rt.parts.size() == 1 && rt.parts[0].first == 2 && rt.parts[0].second == r.dim;
  };
  size_t ri = is_diag(types[2]) ? 2 : 1;
  size_t li = 3 - ri;
  if (!is_diag(types[ri]) ||
      types[0].parts != std::vector<std::pair<Int, DimVector>>{{1, r.dim}, {1, r.dim}})
    throw std::logic_error("sym2_hasse: unexpected strata");

  HasseDiagram h;
  for (size_t i = 0; i < 4; ++i) h.nodes.push_back({types[i], types[i].leaf_dim});
  h.edges.push_back({0, static_cast<int>(li), t, false});
  h.edges.push_back({0, static_cast<int>(ri), A(1), true});
  h.edges.push_back({static_cast<int>(li), 3, t, false});
  h.edges.push_back({static_cast<int>(ri), 3, t, false});
  return h;
}

namespace {

std::vector<Int> node_dims(const HasseDiagram& h) {
  std::vector<Int> d;
  for (const auto& n : h.nodes) d.push_back(n.dim);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::tuple<Int, Int, std::optional<ADEType>>> edge_triples(const HasseDiagram& h) {
  std::vector<std::tuple<Int, Int, std::optional<ADEType>>> e;
  for (const auto& ed : h.edges)
    e.emplace_back(h.nodes[static_cast<size_t>(ed.upper)].dim,
                   h.nodes[static_cast<size_t>(ed.lower)].dim, ed.label);
  std::sort(e.begin(), e.end());
  return e;
}

} // namespace

bool hasse_equal(const HasseDiagram& x, const HasseDiagram& y) {
  return node_dims(x) == node_dims(y) && edge_triples(x) == edge_triples(y);
}

std::vector<std::pair<ADEType, ADEType>> slice_pairs(const WeightedGraph& g, const DimVector& a,
                                                     const Budget& budget) {
  std::vector<std::pair<ADEType, ADEType>> out;
  for (const auto& d : isotropic_decompositions(g, a, budget)) out.emplace_back(d.delta, d.theta);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<size_t>>
distinct_by_invariants(const std::vector<std::pair<WeightedGraph, DimVector>>& instances,
                       const Budget& budget) {
  // slice pairs alone cannot tell the two all-rigid stratifications apart
  // (both have none), so the diagram shape joins the key
  using Key = std::tuple<std::vector<std::pair<ADEType, ADEType>>, std::vector<Int>,
                         std::vector<std::tuple<Int, Int, std::optional<ADEType>>>>;
  std::map<Key, size_t> seen;
  std::vector<std::vector<size_t>> blocks;
  for (size_t i = 0; i < instances.size(); ++i) {
    HasseDiagram h = hasse_diagram(instances[i].first, instances[i].second, budget);
    Key key{slice_pairs(instances[i].first, instances[i].second, budget), node_dims(h),
            edge_triples(h)};
    auto [it, fresh] = seen.try_emplace(std::move(key), blocks.size());
    if (fresh) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  return blocks;
}

} // namespace qv
