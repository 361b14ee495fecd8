#include "qv/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qv/linalg.hpp"
#include "qv/roots.hpp"

namespace qv {

Arrangement arrangement_from_normals(int dim, const std::vector<std::vector<Int>>& normals) {
  std::set<std::vector<Int>> dedup;
  for (std::vector<Int> v : normals) {
    if (static_cast<int>(v.size()) > dim)
      throw std::invalid_argument("arrangement_from_normals: row longer than dim");
    v.resize(static_cast<size_t>(dim), 0);
    make_primitive(v);
    if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; }))
      throw std::invalid_argument("arrangement_from_normals: zero normal");
    dedup.insert(std::move(v));
  }
  Arrangement arr;
  arr.ambient_dim = dim;
  for (const auto& v : dedup) arr.hyperplanes.push_back({v});
  return arr;
}

std::vector<DimVector> two_part_decompositions(const WeightedGraph& g, const DimVector& a,
                                               const Budget& budget) {
  if (!is_root(g, a)) throw std::invalid_argument("two_part_decompositions: not a root");
  std::vector<DimVector> roots = positive_roots_below(g, a, budget);
  std::set<DimVector> pool(roots.begin(), roots.end());
  std::vector<DimVector> out;
  for (const auto& b : roots) {
    DimVector c(a.size());
    bool zero = true;
    for (size_t i = 0; i < a.size(); ++i) {
      c[i] = a[i] - b[i];
      if (c[i] != 0) zero = false;
    }
    if (zero || b > c) continue;  // b == a, or the pair is handled from the other side
    if (pool.count(c)) out.push_back(b);
  }
  return out;
}

Arrangement secondary_arrangement(const WeightedGraph& g, const DimVector& a,
                                  const Budget& budget) {
  Int content = 0;
  for (Int x : a) content = std::gcd(content, x);
  if (content != 1) throw std::invalid_argument("secondary_arrangement: divisible vector");
  std::vector<std::vector<Int>> basis = kernel_basis(a);
  std::vector<std::vector<Int>> restricted;
  for (const DimVector& b : two_part_decompositions(g, a, budget)) {
    std::vector<Int> v(basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
      Int s = 0;
      for (size_t i = 0; i < a.size(); ++i) s += b[i] * basis[j][i];
      v[j] = s;
    }
    // an indivisible a cannot be parallel to a proper part
    if (std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; }))
      throw std::logic_error("secondary_arrangement: part vanished on the stability space");
    restricted.push_back(std::move(v));
  }
  return arrangement_from_normals(static_cast<int>(basis.size()), restricted);
}

namespace {

RatRow to_rational(const std::vector<Int>& v) {
  RatRow r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = BigRat(v[i]);
  return r;
}

bool is_zero_row(const RatRow& v) {
  return std::all_of(v.begin(), v.end(), [](const BigRat& x) { return x == 0; });
}

}  // namespace

BigInt count_chambers(const Arrangement& arr, const Budget& budget) {
  const int k = static_cast<int>(arr.hyperplanes.size());
  if (k > budget.max_hyperplanes) throw budget_exceeded("hyperplane count exceeds budget");
  if (k == 0) return 1;

  std::vector<RatRow> normals;
  normals.reserve(static_cast<size_t>(k));
  for (const Hyperplane& h : arr.hyperplanes) normals.push_back(to_rational(h.normal));

  // one flat per closed mask; the mask determines the subspace and vice versa
  struct Flat {
    uint64_t mask;
    int codim;
  };
  std::vector<Flat> flats{{0, 0}};
  std::set<uint64_t> seen{0};
  std::vector<std::pair<uint64_t, RatMat>> frontier{{0, {}}};
  long long work = 0;
  while (!frontier.empty()) {
    std::vector<std::pair<uint64_t, RatMat>> next;
    for (const auto& [mask, basis] : frontier) {
      for (int h = 0; h < k; ++h) {
        if (mask & (1ULL << h)) continue;
        if (++work > budget.max_decomp_nodes)
          throw budget_exceeded("intersection poset exceeds budget");
        RatMat m2 = basis;
        m2.push_back(normals[static_cast<size_t>(h)]);
        m2 = rref(m2);
        uint64_t closed = mask | (1ULL << h);
        for (int j = 0; j < k; ++j) {
          if (closed & (1ULL << j)) continue;
          if (is_zero_row(reduce_by(m2, normals[static_cast<size_t>(j)])))
            closed |= 1ULL << j;
        }
        if (!seen.insert(closed).second) continue;
        flats.push_back({closed, static_cast<int>(m2.size())});
        next.emplace_back(closed, std::move(m2));
      }
    }
    frontier = std::move(next);
  }

  // same codim never nests, so the discovery order lists every subset of a
  // flat before the flat itself
  std::stable_sort(flats.begin(), flats.end(),
                   [](const Flat& x, const Flat& y) { return x.codim < y.codim; });
  std::vector<BigInt> mu(flats.size());
  BigInt total = 0;
  for (size_t f = 0; f < flats.size(); ++f) {
    BigInt m = f == 0 ? BigInt(1) : BigInt(0);
    for (size_t e = 0; e < f; ++e)
      if ((flats[e].mask & flats[f].mask) == flats[e].mask) m -= mu[e];
    mu[f] = m;
    total += abs(m);
  }
  return total;
}

namespace {

BigInt dr_count(int dim, const std::vector<std::vector<Int>>& normals) {
  if (normals.empty()) return 1;
  std::vector<std::vector<Int>> rest(normals.begin(), normals.end() - 1);
  const std::vector<Int>& h = normals.back();
  BigInt deleted = dr_count(dim, rest);

  std::vector<std::vector<Int>> sub = kernel_basis(h);
  std::set<std::vector<Int>> on_h;
  for (const auto& v : rest) {
    std::vector<Int> w(sub.size());
    for (size_t j = 0; j < sub.size(); ++j) {
      Int s = 0;
      for (size_t i = 0; i < v.size(); ++i) s += v[i] * sub[j][i];
      w[j] = s;
    }
    make_primitive(w);
    if (std::all_of(w.begin(), w.end(), [](Int x) { return x == 0; })) continue;
    on_h.insert(std::move(w));
  }
  BigInt restricted = dr_count(dim - 1, {on_h.begin(), on_h.end()});
  return deleted + restricted;
}

}  // namespace

BigInt count_chambers_dr(const Arrangement& arr, const Budget& budget) {
  if (static_cast<int>(arr.hyperplanes.size()) > budget.max_hyperplanes_dr)
    throw budget_exceeded("hyperplane count exceeds the recursion budget");
  std::vector<std::vector<Int>> normals;
  for (const Hyperplane& h : arr.hyperplanes) normals.push_back(h.normal);
  return dr_count(arr.ambient_dim, normals);
}

namespace {

// inequality rows are one-sided, so unlike hyperplane normals they may only
// be rescaled by positive factors
void divide_content(std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

// strict homogeneous feasibility: some x with c*x > 0 for every row
bool sign_cell_feasible(std::vector<std::vector<Int>> cons, int dim) {
  std::set<std::vector<Int>> cur;
  for (auto& c : cons) {
    divide_content(c);
    cur.insert(std::move(c));
  }
  for (int var = 0; var < dim; ++var) {
    std::vector<std::vector<Int>> pos, neg;
    std::set<std::vector<Int>> next;
    for (const auto& c : cur) {
      Int x = c[static_cast<size_t>(var)];
      if (x > 0)
        pos.push_back(c);
      else if (x < 0)
        neg.push_back(c);
      else
        next.insert(c);
    }
    // one-sided variables escape to infinity, dropping their rows
    if (!pos.empty() && !neg.empty()) {
      for (const auto& p : pos) {
        for (const auto& q : neg) {
          std::vector<Int> r(p.size());
          Int pj = p[static_cast<size_t>(var)], qj = q[static_cast<size_t>(var)];
          for (size_t i = 0; i < p.size(); ++i) r[i] = -qj * p[i] + pj * q[i];
          divide_content(r);
          if (std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; })) return false;
          next.insert(std::move(r));
        }
      }
    }
    cur = std::move(next);
    if (cur.empty()) return true;
  }
  return cur.empty();
}

}  // namespace

BigInt count_chambers_oracle(const Arrangement& arr, const Budget& budget) {
  (void)budget;
  const int k = static_cast<int>(arr.hyperplanes.size());
  if (k == 0) return 1;
  if (k > 14 || arr.ambient_dim > 5)
    throw budget_exceeded("sign enumeration out of range");

  long long feasible = 0;
  // cells pair up under x -> -x, so pin the first sign and double
  for (uint64_t bits = 0; bits < (1ULL << (k - 1)); ++bits) {
    std::vector<std::vector<Int>> cons;
    cons.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      std::vector<Int> c = arr.hyperplanes[static_cast<size_t>(i)].normal;
      bool flip = i > 0 && (bits & (1ULL << (i - 1)));
      if (flip)
        for (Int& x : c) x = -x;
      cons.push_back(std::move(c));
    }
    if (sign_cell_feasible(std::move(cons), arr.ambient_dim)) ++feasible;
  }
  return BigInt(2) * feasible;
}

ResolutionCount num_resolutions(const WeightedGraph& g, const DimVector& a,
                                const Budget& budget) {
  if (!in_sigma(g, a) || g.p(a) != 2)
    throw std::invalid_argument("num_resolutions: need a simple-parametrizing vector with p = 2");
  NamikawaGroup ng = namikawa_group(g, a, budget);
  Arrangement arr = secondary_arrangement(g, a, budget);
  ResolutionCount rc;
  rc.weyl_order = ng.order;
  rc.chambers = count_chambers(arr, budget);
  if (rc.chambers % rc.weyl_order != 0)
    throw std::logic_error("num_resolutions: chamber count not divisible by the group order");
  rc.n_resolutions = rc.chambers / rc.weyl_order;
  return rc;
}

namespace {

// product over the positive roots of (n * c + height)/height, where c is the
// root's coefficient at a weight-1 node of the highest root; gives the
// dimension of the irreducible representation with that multiple of the
// corresponding fundamental weight
BigInt minuscule_multiple_dim(ADEType t, Int n) {
  RootedGraph top = hrr(t);
  size_t node = 0;
  while (node < top.dim.size() && top.dim[node] != 1) ++node;
  if (node == top.dim.size()) throw std::logic_error("minuscule_multiple_dim: no unit node");
  BigInt num = 1, den = 1;
  for (const DimVector& r : positive_roots_below(top.graph, top.dim)) {
    Int height = 0;
    for (Int x : r) height += x;
    num *= n * r[node] + height;
    den *= height;
  }
  if (num % den != 0) throw std::logic_error("minuscule_multiple_dim: non-integral");
  return num / den;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  if (num % den != 0) throw std::logic_error("conjectured_resolutions: non-integral formula");
  return num / den;
}

}  // namespace

std::optional<BigInt> conjectured_resolutions(const FamilyName& f) {
  using K = FamilyName::Kind;
  switch (f.kind) {
    case K::IIPair:
    case K::IIM:
    case K::IIa:
    case K::IIb:
      return BigInt(1);
    case K::IChain: {
      Int n = f.a;
      if (n == 0) return BigInt(1);  // product-like shape, one resolution expected
      if (f.t1.family == 'E') return minuscule_multiple_dim(f.t1, n);
      Int m = f.t1.rank;
      if (f.prime) {
        BigInt num = 2 * BigInt(m + n - 1);
        for (Int i = 1; i <= n - 1; ++i) num *= 2 * m + i - 2;
        return exact_quotient(num, factorial(n));
      }
      if (m == 4) return exact_quotient(BigInt(n + 3) * binomial(n + 5, 5), BigInt(3));
      if (n == 1) return pow2(m - 1);
      return std::nullopt;
    }
    case K::IM: {
      BigInt num = 1, den = 1;
      for (Int i = 0; i < f.a; ++i) {
        num *= factorial(2 * i) * factorial(f.a + 2 * i + 1);
        den *= factorial(3 * i + 1) * factorial(f.a + i);
      }
      return exact_quotient(num, den);
    }
    default:
      return std::nullopt;
  }
}

std::vector<ConjectureEntry> check_conjectures(const std::vector<FamilyName>& grid,
                                               const Budget& budget) {
  std::vector<ConjectureEntry> report;
  for (const FamilyName& f : grid) {
    ConjectureEntry e;
    e.family = f;
    e.predicted = conjectured_resolutions(f);
    if (!e.predicted) {
      report.push_back(std::move(e));
      continue;
    }
    try {
      auto [g, a] = build_family(f);
      e.computed = num_resolutions(g, a, budget).n_resolutions;
      e.status = *e.computed == *e.predicted ? ConjectureStatus::match : ConjectureStatus::mismatch;
    } catch (const budget_exceeded&) {
      e.status = ConjectureStatus::skipped_budget;
    }
    report.push_back(std::move(e));
  }
  return report;
}

}  // namespace qv
