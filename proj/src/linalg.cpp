#include "qv/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace qv {

RatMat rref(RatMat m) {
  size_t cols = 0;
  for (const RatRow& row : m) cols = std::max(cols, row.size());
  for (RatRow& row : m) row.resize(cols, BigRat(0));
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    size_t found = pivot_row;
    while (found < m.size() && m[found][col] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[pivot_row], m[found]);
    BigRat lead = m[pivot_row][col];
    for (size_t j = col; j < cols; ++j) m[pivot_row][j] /= lead;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == pivot_row || m[i][col] == 0) continue;
      BigRat factor = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[pivot_row][j];
    }
    ++pivot_row;
  }
  m.resize(pivot_row);
  return m;
}

RatRow reduce_by(const RatMat& r, RatRow v) {
  for (const RatRow& row : r) {
    size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p >= v.size() || v[p] == 0) continue;
    BigRat factor = v[p];
    for (size_t j = p; j < v.size(); ++j) v[j] -= factor * row[j];
  }
  return v;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  if (g == 0) return;
  for (Int& x : v) x /= g;
  for (Int x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
}

namespace {

// g = gcd(a,b) >= 0 with s*a + t*b = g
void xgcd(Int a, Int b, Int& g, Int& s, Int& t) {
  Int r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

}  // namespace

std::vector<std::vector<Int>> kernel_basis(const std::vector<Int>& a) {
  size_t n = a.size();
  std::vector<Int> v = a;
  Int content = 0;
  for (Int x : v) content = std::gcd(content, x);
  if (content == 0) throw std::invalid_argument("kernel_basis: zero functional");
  for (Int& x : v) x /= content;

  // columns of u, with a*u maintained in v; pairwise unimodular sweeps drive
  // v to (1,0,...,0)
  std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  for (size_t i = 1; i < n; ++i) {
    if (v[i] == 0) continue;
    Int g, s, t;
    xgcd(v[0], v[i], g, s, t);
    Int f0 = v[0] / g, fi = v[i] / g;
    for (size_t r = 0; r < n; ++r) {
      Int c0 = u[r][0], ci = u[r][i];
      u[r][0] = s * c0 + t * ci;
      u[r][i] = -fi * c0 + f0 * ci;
    }
    v[0] = g;
    v[i] = 0;
  }

  std::vector<std::vector<Int>> basis;
  for (size_t i = 1; i < n; ++i) {
    std::vector<Int> row(n);
    for (size_t r = 0; r < n; ++r) row[r] = u[r][i];
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace qv
