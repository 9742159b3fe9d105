#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hfk/errors.hpp"
#include "hfk/grid.hpp"
#include "hfk/symmetry.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace hfk;
using test::Laurent;
using test::winding_alexander;

namespace {

GridDiagram corpus_grid(const char* name) { return load_grid_file(test::corpus(name)); }

BigradedPoly hat_of(const GridDiagram& g) {
  GridComplex gc = tilde_complex(g, 1000000);
  return hat_deconvolve(poincare_polynomial(homology(gc.complex)), g.n);
}

GridDiagram rotate(const GridDiagram& g) {
  GridDiagram h = g;
  for (int r = 0; r < g.n; ++r) {
    h.O[g.n - 1 - r] = g.n - 1 - g.O[r];
    h.X[g.n - 1 - r] = g.n - 1 - g.X[r];
  }
  return h;
}

GridDiagram shift(const GridDiagram& g, int dr, int dc) {
  GridDiagram h = g;
  for (int r = 0; r < g.n; ++r) {
    h.O[(r + dr) % g.n] = (g.O[r] + dc) % g.n;
    h.X[(r + dr) % g.n] = (g.X[r] + dc) % g.n;
  }
  return h;
}

}  // namespace

TEST_CASE("grid parsing") {
  GridDiagram u = parse_grid("1 0\n0 1\n");
  CHECK(u.n == 2);
  CHECK(validate_grid(u).empty());
  CHECK_THROWS_AS(parse_grid("0 0\n1 0\n"), InputError);
  CHECK_THROWS_AS(parse_grid("0 1\n"), InputError);
  CHECK_THROWS_AS(parse_grid("0 1\n0 1\n"), InputError);  // O and X share cells
  CHECK_THROWS_AS(load_grid_file(test::corpus("missing.grid")), IoError);
  GridDiagram t = corpus_grid("trefoil.grid");
  CHECK(t.n == 5);
  CHECK(parse_grid(grid_to_text(t)).O == t.O);
  CHECK(parse_grid(grid_to_text(t)).X == t.X);
  CHECK(grid_components(t) == 1);
  CHECK(grid_components(parse_grid("0 1 2 3\n1 0 3 2\n")) == 2);
}

TEST_CASE("unknot grids") {
  GridComplex gc = tilde_complex(corpus_grid("unknot2.grid"), 1000000);
  CHECK(gc.gens.size() == 2);
  CHECK(homology(gc.complex).total() == 2);
  for (const char* f : {"unknot2.grid", "unknot3.grid"}) {
    CAPTURE(f);
    CHECK(hat_of(corpus_grid(f)) == BigradedPoly{{{0, 0}, 1}});
    CHECK(alexander_polynomial(hat_of(corpus_grid(f))) == Laurent{{0, 1}});
  }
}

TEST_CASE("trefoil tilde complex and hat table") {
  GridDiagram g = corpus_grid("trefoil.grid");
  GridComplex gc = tilde_complex(g, 1000000);
  CHECK(gc.gens.size() == 120);
  CHECK(verify_d_squared(gc.complex));
  CHECK(grading_violation(gc.complex).empty());
  RankTable t = homology(gc.complex);
  CHECK(t.total() % 16 == 0);
  BigradedPoly hat = hat_deconvolve(poincare_polynomial(t), 5);
  // (M, A)
  CHECK(hat == BigradedPoly{{{0, 1}, 1}, {{-1, 0}, 1}, {{-2, -1}, 1}});
  CHECK(alexander_polynomial(hat) == Laurent{{-1, 1}, {0, -1}, {1, 1}});
  CHECK(laurent_to_string(alexander_polynomial(hat)) == "t - 1 + t^-1");
}

TEST_CASE("figure eight") {
  BigradedPoly hat = hat_of(corpus_grid("figure8.grid"));
  CHECK(alexander_polynomial(hat) == Laurent{{-1, -1}, {0, 3}, {1, -1}});
  CHECK(hat == BigradedPoly{{{-1, -1}, 1}, {{0, 0}, 3}, {{1, 1}, 1}});
}

TEST_CASE("winding number determinant agrees with the Euler characteristic") {
  for (const char* f : {"trefoil.grid", "figure8.grid", "unknot2.grid", "unknot3.grid"}) {
    CAPTURE(f);
    GridDiagram g = corpus_grid(f);
    CHECK(winding_alexander(g) == alexander_polynomial(hat_of(g)));
  }
  CHECK(winding_alexander(corpus_grid("figure8.grid")) == Laurent{{-1, -1}, {0, 3}, {1, -1}});
  CHECK(winding_alexander(corpus_grid("trefoil.grid")) == Laurent{{-1, 1}, {0, -1}, {1, 1}});

  std::mt19937_64 rng(23);
  int tested = 0;
  while (tested < 25) {
    const int n = 2 + static_cast<int>(rng() % 4);
    GridDiagram g;
    g.n = n;
    g.O.resize(n);
    g.X.resize(n);
    std::iota(g.O.begin(), g.O.end(), 0);
    std::iota(g.X.begin(), g.X.end(), 0);
    std::shuffle(g.O.begin(), g.O.end(), rng);
    std::shuffle(g.X.begin(), g.X.end(), rng);
    if (!validate_grid(g).empty() || grid_components(g) != 1) continue;
    CAPTURE(grid_to_text(g));
    CHECK(winding_alexander(g) == alexander_polynomial(hat_of(g)));
    ++tested;
  }
}

TEST_CASE("hat tables are symmetric") {
  for (const char* f : {"trefoil.grid", "figure8.grid", "unknot2.grid", "unknot3.grid"}) {
    CAPTURE(f);
    BigradedPoly hat = hat_of(corpus_grid(f));
    BigradedPoly flipped;
    for (auto [k, v] : hat) flipped[{k.first - 2 * k.second, -k.second}] = v;
    CHECK(flipped == hat);
  }
}

TEST_CASE("other presentations give the same table") {
  CHECK(hat_of(corpus_grid("unknot2.grid")) == hat_of(corpus_grid("unknot3.grid")));
  GridDiagram t = corpus_grid("trefoil.grid");
  BigradedPoly ref = hat_of(t);
  CHECK(hat_of(rotate(t)) == ref);
  CHECK(hat_of(shift(t, 1, 0)) == ref);
  CHECK(hat_of(shift(t, 2, 3)) == ref);
}

TEST_CASE("deconvolution") {
  CHECK_THROWS_AS(hat_deconvolve(BigradedPoly{{{0, 0}, 1}}, 2), InvariantError);
  BigradedPoly w{{{0, 0}, 1}, {{-1, -1}, 1}};
  CHECK(hat_deconvolve(w, 2) == BigradedPoly{{{0, 0}, 1}});
  CHECK(hat_deconvolve(BigradedPoly{{{3, 1}, 2}}, 1) == BigradedPoly{{{3, 1}, 2}});
}

TEST_CASE("multi-pointed route reproduces the grid complex") {
  for (const char* f : {"unknot3.grid", "trefoil.grid"}) {
    CAPTURE(f);
    GridDiagram g = corpus_grid(f);
    RankTable t = homology(tilde_complex(g, 1000000).complex);
    RankTable u = homology(differential(grid_to_pointed(g)));
    CHECK(u.total() == t.total());
    CHECK_FALSE(compare_relative_tables(t, u, {0}, Regrading{}));
  }
}

TEST_CASE("parallel differential of a grid-derived diagram") {
  PointedDiagram d = grid_to_pointed(corpus_grid("trefoil.grid"));
  ChainComplexF2 a = differential(d, DifferentialOptions{1, false});
  ChainComplexF2 b = differential(d, DifferentialOptions{4, false});
  CHECK(a.boundary == b.boundary);
}
