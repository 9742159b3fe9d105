#include <doctest.h>
#include <json.hpp>

#include <random>

#include "hfk/builders.hpp"
#include "hfk/domains.hpp"
#include "hfk/generators.hpp"
#include "hfk/grid.hpp"
#include "support.hpp"

using namespace hfk;

namespace {

PointedDiagram figure2() { return test::corpus_diagram("figure2.hd.json"); }

Generator gen(const PointedDiagram& d, std::initializer_list<const char*> ids) {
  Generator g;
  for (const char* id : ids) g.points.push_back(d.point_index(id));
  return g;
}

DomainVector only(const PointedDiagram& d, const char* region) {
  DomainVector v(d.regions.size());
  v[d.region_index(region)] = 1;
  return v;
}

IntVec boundary_rhs(const DomainSystem& ds, const Generator& x, const Generator& y) {
  IntVec b = ds.point_vector(y), a = ds.point_vector(x);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] -= a[i];
  return b;
}

bool nonnegative_nonzero(const DomainVector& v) {
  bool any = false;
  for (const auto& x : v) {
    if (x < 0) return false;
    any = any || x > 0;
  }
  return any;
}

}  // namespace

TEST_CASE("generators") {
  PointedDiagram d = figure2();
  auto gens = enumerate_generators(d);
  REQUIRE(gens.size() == 2);
  CHECK(generator_name(d, gens[0]) == "x");
  CHECK(generator_name(d, gens[1]) == "y");
  CHECK(enumerate_generators(lens_diagram(4)).size() == 4);
  CHECK(enumerate_generators(test::corpus_diagram("adapted_g2.hd.json")).size() > 0);
}

TEST_CASE("connecting domains on figure2") {
  PointedDiagram d = figure2();
  DomainSystem ds(d);
  Generator x = gen(d, {"x"}), y = gen(d, {"y"});
  auto phi = ds.connecting_domain(x, y);
  REQUIRE(phi);
  CHECK(ds.matrix().mul(*phi) == boundary_rhs(ds, x, y));
  // the bigon D1 is one of them, and it avoids both basepoints
  DomainVector bigon = only(d, "D1");
  CHECK(ds.matrix().mul(bigon) == boundary_rhs(ds, x, y));
  CHECK(n_z(d, bigon) == 0);
  CHECK(n_w(d, bigon) == 0);
  // differences are periodic
  DomainVector diff = *phi;
  for (std::size_t r = 0; r < diff.size(); ++r) diff[r] -= bigon[r];
  CHECK(ds.is_periodic(diff));
  auto self = ds.connecting_domain(x, x);
  REQUIRE(self);
  CHECK(ds.is_periodic(*self));
}

TEST_CASE("distinct lens generators are not connected") {
  PointedDiagram d = lens_diagram(3);
  DomainSystem ds(d);
  auto gens = enumerate_generators(d);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      CHECK(ds.connecting_domain(gens[i], gens[j]).has_value() == (i == j));
}

TEST_CASE("periodic domain lattices") {
  auto s3 = periodic_domains(slope_diagram(0, 1, 0, 0));
  CHECK(s3.pinned.empty());
  auto f2 = periodic_domains(figure2());
  CHECK(f2.pinned.size() == 1);
  CHECK(f2.basis.size() == 2);
  // [Σ] lies in the span: the lattice plus [Σ] has the same rank
  PointedDiagram d = figure2();
  DomainSystem ds(d);
  CHECK(ds.is_periodic(full_surface(d)));
  for (const auto& p : f2.basis) CHECK(ds.is_periodic(p));
  for (const auto& p : f2.pinned) CHECK(n_z(d, p) == 0);
}

TEST_CASE("multiplicities") {
  PointedDiagram d = figure2();
  CHECK(n_z(d, DomainVector(d.regions.size())) == 0);
  for (int r = 0; r < static_cast<int>(d.regions.size()); ++r) CHECK(multiplicity(full_surface(d), r) == 1);
}

TEST_CASE("euler and point measures") {
  PointedDiagram d = figure2();
  CHECK(euler_measure(d, only(d, "D1")) == Rat(1, 2));
  CHECK(euler_measure(d, full_surface(d)) == 0);
  PointedDiagram g2 = test::corpus_diagram("adapted_g2.hd.json");
  CHECK(euler_measure(g2, full_surface(g2)) == -2);

  PointedDiagram l = lens_diagram(3);
  CHECK(euler_measure(l, only(l, "R2")) == 0);

  Generator x = gen(d, {"x"}), y = gen(d, {"y"});
  CHECK(point_measure(d, DomainVector(d.regions.size()), x) == 0);
  CHECK(point_measure(d, full_surface(d), x) == 1);
  for (const auto& gx : enumerate_generators(g2)) CHECK(point_measure(g2, full_surface(g2), gx) == 2);
  CHECK(point_measure(d, only(d, "D1"), x) == Rat(1, 4));
}

TEST_CASE("maslov index") {
  PointedDiagram d = figure2();
  Generator x = gen(d, {"x"}), y = gen(d, {"y"});
  CHECK(maslov_index(d, only(d, "D1"), x, y) == 1);
  CHECK(maslov_index(d, full_surface(d), x, x) == 2);
  PointedDiagram g2 = test::corpus_diagram("adapted_g2.hd.json");
  for (const auto& gx : enumerate_generators(g2)) CHECK(maslov_index(g2, full_surface(g2), gx, gx) == 2);

  // a unit square of a grid, from two opposite corners to the other two
  PointedDiagram t = grid_to_pointed(parse_grid("0 1 2\n1 2 0\n"));
  int checked = 0;
  for (std::size_t r = 0; r < t.regions.size(); ++r) {
    std::vector<int> corners;
    for (std::size_t p = 0; p < t.points.size(); ++p)
      for (int q = 0; q < 4; ++q)
        if (t.points[p].quadrants[q] == static_cast<int>(r)) corners.push_back(static_cast<int>(p));
    if (corners.size() != 4) continue;
    Generator a, b;
    for (int p : corners) {
      bool first_pair = t.points[p].alpha == t.points[corners[0]].alpha ? t.points[p].beta == t.points[corners[0]].beta
                                                                         : t.points[p].beta != t.points[corners[0]].beta;
      (first_pair ? a : b).points.push_back(p);
    }
    REQUIRE(a.points.size() == 2);
    DomainVector sq(t.regions.size());
    sq[r] = 1;
    CHECK(maslov_index(t, sq, a, b) == 1);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("weak admissibility") {
  CHECK(is_weakly_admissible(slope_diagram(0, 1, 0, 0)).admissible);

  PointedDiagram d = figure2();
  auto res = is_weakly_admissible(d);
  REQUIRE(res.admissible);
  auto pinned = periodic_domains(d).pinned;
  REQUIRE(pinned.size() == 1);
  bool pos = false, neg = false;
  for (const auto& v : pinned[0]) {
    pos = pos || v > 0;
    neg = neg || v < 0;
  }
  CHECK((pos && neg));
  REQUIRE(res.area_form.size() == d.regions.size());
  Rat pairing = 0;
  for (std::size_t r = 0; r < d.regions.size(); ++r) {
    CHECK(res.area_form[r] > 0);
    pairing += res.area_form[r] * Rat(pinned[0][r]);
  }
  CHECK(pairing == 0);

  // z moved into the bigon D1
  d.z = {d.region_index("D1")};
  auto bad = is_weakly_admissible(d);
  CHECK_FALSE(bad.admissible);
  CHECK(nonnegative_nonzero(bad.positive_domain));
  CHECK(DomainSystem(d).is_periodic(bad.positive_domain));
  CHECK(n_z(d, bad.positive_domain) == 0);
  auto pin = periodic_domains(d).pinned;
  REQUIRE(pin.size() == 1);
  // exhaustive sign scan of the single basis element
  bool all_ge = true, all_le = true;
  for (const auto& v : pin[0]) {
    all_ge = all_ge && v >= 0;
    all_le = all_le && v <= 0;
  }
  CHECK((all_ge || all_le));
}

TEST_CASE("positivity test agrees with a brute force search") {
  std::mt19937_64 rng(17);
  int found = 0, certified = 0;
  for (int t = 0; t < 150; ++t) {
    std::size_t R = 3 + rng() % 3, k = 1 + rng() % 2;
    std::vector<DomainVector> basis(k, DomainVector(R));
    for (auto& b : basis)
      for (auto& v : b) v = static_cast<int>(rng() % 5) - 2;
    auto res = positivity_test(basis, R);
    bool brute = false;
    for (int a = -4; a <= 4 && !brute; ++a)
      for (int b = (k > 1 ? -4 : 0); b <= (k > 1 ? 4 : 0) && !brute; ++b) {
        DomainVector v(R);
        for (std::size_t r = 0; r < R; ++r) v[r] = a * basis[0][r] + (k > 1 ? b * basis[1][r] : Int(0));
        brute = nonnegative_nonzero(v);
      }
    if (brute) {
      CHECK_FALSE(res.admissible);
      ++found;
    }
    if (res.admissible) {
      ++certified;
      for (const auto& b : basis) {
        Rat s = 0;
        for (std::size_t r = 0; r < R; ++r) s += res.area_form[r] * Rat(b[r]);
        CHECK(s == 0);
      }
    } else {
      CHECK(nonnegative_nonzero(res.positive_domain));
    }
  }
  CHECK(found > 0);
  CHECK(certified > 0);
}

TEST_CASE("niceness") {
  CHECK(is_nice(figure2()));
  for (int e = 1; e <= 6; ++e) CHECK(is_nice(lens_diagram(e)));
  PointedDiagram d = figure2();
  d.z = {d.region_index("D1")};
  CHECK_FALSE(is_nice(d));  // the annulus A is now unmarked
}
