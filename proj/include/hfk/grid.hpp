#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hfk/chain.hpp"
#include "hfk/diagram.hpp"

namespace hfk {

// n x n toroidal grid. Row r (counted from the bottom) carries its O in
// column O[r] and its X in column X[r]. The text format lists rows from the
// top down.
struct GridDiagram {
  int n = 0;
  std::vector<int> O, X;
};

GridDiagram parse_grid(const std::string& text);
GridDiagram load_grid_file(const std::string& path);
std::string grid_to_text(const GridDiagram& g);
// Empty when the grid is valid.
std::vector<std::string> validate_grid(const GridDiagram& g);
// Number of components of the link the grid presents.
int grid_components(const GridDiagram& g);

// Bigraded polynomial: (M, A) -> coefficient.
using BigradedPoly = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;

// Generators are permutations: x[c] is the row of the point on column line c.
struct GridComplex {
  int n = 0;
  std::vector<std::vector<int>> gens;
  ChainComplexF2 complex;  // one class, absolute gradings
};

std::int64_t grid_maslov(const std::vector<int>& x, const std::vector<int>& marks);
std::int64_t grid_alexander(const GridDiagram& g, const std::vector<int>& x);

GridComplex tilde_complex(const GridDiagram& g, std::uint64_t budget);
BigradedPoly poincare_polynomial(const RankTable& t);
// Exact quotient by (1 + q^-1 t^-1)^(n-1); throws InvariantError on a remainder.
BigradedPoly hat_deconvolve(const BigradedPoly& p, int n);
// Hat table as a RankTable with a single class.
RankTable poly_to_table(const BigradedPoly& p);
// Symmetrized graded Euler characteristic, exponent -> coefficient.
std::map<std::int64_t, std::int64_t> alexander_polynomial(const BigradedPoly& hat);
std::string laurent_to_string(const std::map<std::int64_t, std::int64_t>& p);

// The grid as a multi-pointed genus one diagram (w at the O's, z at the X's).
PointedDiagram grid_to_pointed(const GridDiagram& g);

}  // namespace hfk
