#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hfk/builders.hpp"
#include "hfk/chain.hpp"
#include "hfk/errors.hpp"
#include "hfk/grid.hpp"
#include "support.hpp"

using namespace hfk;

namespace {

// Number of matchings of the bipartite alpha/beta intersection pattern,
// counted with point multiplicity.
long permanent(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long s = 0;
  do {
    long t = 1;
    for (int i = 0; i < n; ++i) t *= m[i][p[i]];
    s += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}

// Differential by exhaustive search over 0/1 domains supported away from the
// basepoints, with its own boundary and index evaluation from the quadrant
// data. Only usable for small diagrams.
std::vector<std::vector<int>> brute_force_differential(const PointedDiagram& d, const std::vector<Generator>& gens,
                                                       int orient) {
  std::vector<int> free_regions;
  for (int r = 0; r < static_cast<int>(d.regions.size()); ++r)
    if (std::find(d.z.begin(), d.z.end(), r) == d.z.end() && std::find(d.w.begin(), d.w.end(), r) == d.w.end())
      free_regions.push_back(r);
  REQUIRE(free_regions.size() <= 16);

  // corner counts of each region
  std::vector<int> corners(d.regions.size(), 0);
  for (const auto& p : d.points)
    for (int q : p.quadrants) corners[q]++;

  // D lies in π2(x, y) iff the alpha part of its boundary runs from y to x
  // and the beta part from x to y (orientation calibrated on the figure2
  // bigon). Arc coefficients are read off the region boundary words.
  auto arc_coefficients = [&](const std::vector<int>& D) {
    std::vector<int> c(d.arcs.size(), 0);
    for (std::size_t r = 0; r < d.regions.size(); ++r)
      if (D[r])
        for (const auto& comp : d.regions[r].boundary)
          for (const auto& s : comp) c[s.arc] += D[r] * s.sign;
    return c;
  };
  std::vector<std::vector<int>> out(gens.size());
  const std::uint32_t total = 1U << free_regions.size();
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::vector<int> D(d.regions.size(), 0);
    for (std::size_t i = 0; i < free_regions.size(); ++i)
      if (mask >> i & 1U) D[free_regions[i]] = 1;
    std::vector<int> coef = arc_coefficients(D);
    // 4 e(D)
    int e4 = 0;
    for (std::size_t r = 0; r < D.size(); ++r) e4 += D[r] * (4 * d.regions[r].euler_char - corners[r]);
    for (std::size_t x = 0; x < gens.size(); ++x)
      for (std::size_t y = 0; y < gens.size(); ++y) {
        if (x == y) continue;
        std::vector<int> want(d.points.size(), 0);
        for (int p : gens[y].points) want[p] += 1;
        for (int p : gens[x].points) want[p] -= 1;
        bool ok = true;
        for (CurveKind kind : {CurveKind::alpha, CurveKind::beta}) {
          std::vector<int> ends(d.points.size(), 0);
          for (std::size_t a = 0; a < d.arcs.size(); ++a)
            if (d.arcs[a].kind == kind) {
              ends[d.arcs[a].to] += coef[a];
              ends[d.arcs[a].from] -= coef[a];
            }
          int s = kind == CurveKind::alpha ? orient : -orient;
          for (std::size_t p = 0; p < ends.size(); ++p) ok = ok && ends[p] == s * want[p];
        }
        if (!ok) continue;
        // n_x + n_y, times four
        int n4 = 0;
        for (int p : gens[x].points)
          for (int q : d.points[p].quadrants) n4 += D[q];
        for (int p : gens[y].points)
          for (int q : d.points[p].quadrants) n4 += D[q];
        if (e4 + n4 == 4) out[x].push_back(static_cast<int>(y));
      }
  }
  // parity of the number of domains
  for (auto& row : out) {
    std::sort(row.begin(), row.end());
    std::vector<int> odd;
    for (std::size_t i = 0; i < row.size();) {
      std::size_t j = i;
      while (j < row.size() && row[j] == row[i]) ++j;
      if ((j - i) % 2) odd.push_back(row[i]);
      i = j;
    }
    row = odd;
  }
  return out;
}

}  // namespace

TEST_CASE("generator counts match the permanent of the intersection matrix") {
  for (const char* f : {"figure2.hd.json", "adapted_g2.hd.json", "lens_e5.hd.json"}) {
    CAPTURE(f);
    PointedDiagram d = test::corpus_diagram(f);
    CHECK(static_cast<long>(enumerate_generators(d).size()) == permanent(intersection_matrix(d)));
  }
  PointedDiagram g = grid_to_pointed(parse_grid("0 1 2 3\n1 2 3 0\n"));
  CHECK(enumerate_generators(g).size() == 24);
  CHECK(permanent(intersection_matrix(g)) == 24);
}

TEST_CASE("generator budget") {
  PointedDiagram g = grid_to_pointed(parse_grid("0 1 2 3\n1 2 3 0\n"));
  CHECK_THROWS_AS(enumerate_generators(g, 23), BudgetError);
}

TEST_CASE("figure2 differential") {
  PointedDiagram d = test::corpus_diagram("figure2.hd.json");
  ChainComplexF2 c = differential(d);
  REQUIRE(c.names == std::vector<std::string>{"x", "y"});
  CHECK(c.boundary[0] == std::vector<int>{1});
  CHECK(c.boundary[1].empty());
  CHECK(verify_d_squared(c));
  CHECK(grading_violation(c).empty());
  CHECK(homology(c).total() == 0);
}

TEST_CASE("lens differentials vanish") {
  for (int e = 1; e <= 6; ++e) {
    ChainComplexF2 c = differential(lens_diagram(e));
    for (const auto& b : c.boundary) CHECK(b.empty());
    RankTable t = homology(c);
    CHECK(t.total() == e);
    CHECK(t.num_classes == e);
    for (int k = 0; k < e; ++k) CHECK(t.class_total(k) == 1);
  }
}

TEST_CASE("differential agrees with exhaustive domain search") {
  std::vector<PointedDiagram> ds = {test::corpus_diagram("figure2.hd.json"),
                                    test::corpus_diagram("adapted_g2.hd.json"),
                                    lens_diagram(3),
                                    grid_to_pointed(parse_grid("1 0\n0 1\n")),
                                    grid_to_pointed(parse_grid("0 1 2\n1 2 0\n")),
                                    grid_to_pointed(parse_grid("3 1 2 0\n2 3 0 1\n")),
                                    grid_to_pointed(parse_grid("3 2 0 1\n0 1 2 3\n"))};
  // calibrate: the bigon D1 of figure2 runs from x to y
  int orient = 0;
  for (int o : {1, -1})
    if (brute_force_differential(ds[0], Analysis(ds[0]).generators(), o)[0] == std::vector<int>{1}) orient = o;
  REQUIRE(orient != 0);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CAPTURE(i);
    Analysis a(ds[i]);
    ChainComplexF2 c = differential(a, DifferentialOptions{1, true});
    CHECK(c.boundary == brute_force_differential(ds[i], a.generators(), orient));
  }
}

TEST_CASE("d squared and grading law on the corpus") {
  for (const char* f : {"figure2.hd.json", "adapted_g2.hd.json", "lens_e4.hd.json"}) {
    ChainComplexF2 c = differential(test::corpus_diagram(f), DifferentialOptions{1, true});
    CHECK(verify_d_squared(c));
    CHECK(grading_violation(c).empty());
  }
}

TEST_CASE("parallel differential is identical") {
  PointedDiagram d = grid_to_pointed(parse_grid("3 1 2 0\n2 3 0 1\n"));
  ChainComplexF2 one = differential(d);
  for (int jobs : {2, 3, 8}) {
    ChainComplexF2 many = differential(d, DifferentialOptions{jobs, false});
    CHECK(many.boundary == one.boundary);
    CHECK(many.names == one.names);
  }
}

TEST_CASE("detecting broken complexes") {
  ChainComplexF2 c;
  c.names = {"a", "b", "c"};
  c.cls = {0, 0, 0};
  c.alexander = {0, 0, 0};
  c.maslov = {2, 1, 0};
  c.delta_a = {0};
  c.delta_m = {0};
  c.boundary = {{1}, {2}, {}};
  CHECK_FALSE(verify_d_squared(c));
  c.boundary = {{1}, {}, {}};
  CHECK(verify_d_squared(c));
  CHECK(grading_violation(c).empty());
  c.maslov = {2, 2, 0};
  CHECK_FALSE(grading_violation(c).empty());
  c.maslov = {2, 1, 0};
  c.alexander = {0, 1, 0};
  CHECK_FALSE(grading_violation(c).empty());
}

TEST_CASE("homology of a zero differential counts generators") {
  ChainComplexF2 c;
  c.names = {"a", "b", "c"};
  c.cls = {0, 0, 1};
  c.alexander = {0, 0, 1};
  c.maslov = {0, 0, 3};
  c.delta_a = {0, 0};
  c.delta_m = {0, 0};
  c.boundary = {{}, {}, {}};
  RankTable t = homology(c);
  CHECK(t.total() == 3);
  CHECK(t.entries.at({0, 0, 0}) == 2);
  CHECK(t.entries.at({1, 1, 3}) == 1);
}

TEST_CASE("F2 matrix rank") {
  F2Matrix m(3, 3);
  m.set(0, 0, true);
  m.set(1, 1, true);
  m.set(2, 0, true);
  m.set(2, 1, true);
  CHECK(m.rank() == 2);
  CHECK(m.mul(F2Matrix(3, 3)).is_zero());
}

TEST_CASE("preconditions") {
  PointedDiagram d = test::corpus_diagram("figure2.hd.json");
  d.z = {d.region_index("D1")};
  CHECK_THROWS_AS(differential(d), InputError);  // A is an unmarked annulus
}
