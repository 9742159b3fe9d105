#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hfk/grid.hpp"

// Alexander polynomial of a grid knot from the winding numbers around the
// lattice points, independent of the chain complex.

#define ORACLE_REQUIRE(cond) \
  if (!(cond)) throw std::logic_error("oracle: " #cond)

namespace hfk::test {

using Laurent = std::map<std::int64_t, std::int64_t>;

inline void trim(Laurent& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

// Winding number of the grid knot around each lattice point, verticals
// running from X to O. Entry [i][j]: lattice point at the left edge of
// column i and the bottom edge of row j.
inline std::vector<std::vector<int>> winding(const GridDiagram& g) {
  const int n = g.n;
  std::vector<int> row_o(n), row_x(n);
  for (int r = 0; r < n; ++r) {
    row_o[g.O[r]] = r;
    row_x[g.X[r]] = r;
  }
  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = i; c < n; ++c) {
        int lo = std::min(row_x[c], row_o[c]), hi = std::max(row_x[c], row_o[c]);
        if (lo < j && j <= hi) w[i][j] += row_o[c] > row_x[c] ? 1 : -1;
      }
  return w;
}

// det(t^{-w(i,j)}) = ± t^k (1 - t)^{n-1} Δ(t); returns Δ, symmetrized with Δ(1) = 1.
inline Laurent winding_alexander(const GridDiagram& g) {
  const int n = g.n;
  auto w = winding(g);
  Laurent det;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inv += p[a] > p[b];
    std::int64_t e = 0;
    for (int a = 0; a < n; ++a) e -= w[a][p[a]];
    det[e] += inv % 2 ? -1 : 1;
  } while (std::next_permutation(p.begin(), p.end()));
  trim(det);
  for (int k = 0; k < n - 1; ++k) {
    // divide by (1 - t): q_e = p_e + q_{e-1}
    Laurent q;
    std::int64_t carry = 0;
    const std::int64_t lo = det.begin()->first, hi = det.rbegin()->first;
    for (std::int64_t e = lo; e < hi; ++e) {
      carry += det.count(e) ? det.at(e) : 0;
      q[e] = carry;
    }
    ORACLE_REQUIRE(carry + det.at(hi) == 0);
    trim(q);
    det = q;
  }
  // center and fix the sign
  const std::int64_t lo = det.begin()->first, hi = det.rbegin()->first;
  ORACLE_REQUIRE((lo + hi) % 2 == 0);
  Laurent out;
  std::int64_t at_one = 0;
  for (auto [e, c] : det) at_one += c;
  ORACLE_REQUIRE((at_one == 1 || at_one == -1));
  for (auto [e, c] : det) out[e - (lo + hi) / 2] = c * at_one;
  return out;
}

}  // namespace hfk::test
