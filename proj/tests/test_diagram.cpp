#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hfk/builders.hpp"
#include "hfk/errors.hpp"
#include "hfk/surface.hpp"
#include "support.hpp"

using namespace hfk;
using nlohmann::json;

namespace {

json corpus_json(const std::string& name) {
  std::ifstream in(test::corpus(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

bool mentions(const ValidationReport& r, const std::string& word) {
  for (const auto& p : r.problems)
    if (p.find(word) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("two point torus diagram is accepted") {
  PointedDiagram d = lens_diagram(2);
  CHECK(d.points.size() == 2);
  CHECK(d.arcs.size() == 4);
  CHECK(d.regions.size() == 2);
  CHECK(validate(d).ok());
}

TEST_CASE("raising a region's euler characteristic is rejected") {
  json j = json::parse(diagram_to_json(lens_diagram(2)));
  j["regions"][0]["euler_char"] = j["regions"][0]["euler_char"].get<int>() + 1;
  CHECK_FALSE(validate(parse_diagram_json(j.dump())).ok());
}

TEST_CASE("lowering a region's euler characteristic by two is an Euler mismatch") {
  json j = corpus_json("figure2.hd.json");
  j["regions"][2]["euler_char"] = -2;  // annulus with a handle: locally consistent
  auto r = validate(parse_diagram_json(j.dump()));
  CHECK(mentions(r, "Euler characteristic mismatch"));
}

TEST_CASE("bundled figure2 is accepted and recounts to a torus") {
  PointedDiagram d = test::corpus_diagram("figure2.hd.json");
  CHECK(validate(d).ok());
  long chi = static_cast<long>(d.points.size()) - static_cast<long>(d.arcs.size());
  for (const auto& r : d.regions) chi += r.euler_char;
  CHECK(chi == 0);
}

TEST_CASE("every corpus diagram validates") {
  for (const char* f : {"figure2.hd.json", "adapted_g2.hd.json", "lens_e1.hd.json", "lens_e2.hd.json",
                        "lens_e3.hd.json", "lens_e4.hd.json", "lens_e5.hd.json", "lens_e6.hd.json"}) {
    CAPTURE(f);
    CHECK(validate(test::corpus_diagram(f)).ok());
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_diagram_json("{not json"), InputError);
  CHECK_THROWS_AS(parse_diagram_json("{}"), InputError);
  CHECK_THROWS_AS(load_diagram_file(test::corpus("no_such_file.hd.json")), IoError);

  json j = corpus_json("figure2.hd.json");
  j["points"][0]["quadrants"][0] = "Nowhere";
  CHECK_FALSE(validate(parse_diagram_json(j.dump())).ok());

  json k = corpus_json("figure2.hd.json");
  k["curves"][0]["kind"] = "gamma";
  CHECK_THROWS_AS(parse_diagram_json(k.dump()), InputError);

  json m = corpus_json("figure2.hd.json");
  m["basepoints"]["w"] = "A";
  CHECK(mentions(validate(parse_diagram_json(m.dump())), "share region"));
  m["basepoints"]["allow_coincident"] = true;
  CHECK(validate(parse_diagram_json(m.dump())).ok());
}

TEST_CASE("a wrong quadrant is caught") {
  json j = corpus_json("figure2.hd.json");
  std::swap(j["points"][0]["quadrants"][0], j["points"][0]["quadrants"][2]);
  CHECK_FALSE(validate(parse_diagram_json(j.dump())).ok());
}

TEST_CASE("json round trip") {
  for (const char* f : {"figure2.hd.json", "adapted_g2.hd.json", "lens_e5.hd.json"}) {
    CAPTURE(f);
    PointedDiagram d = test::corpus_diagram(f);
    PointedDiagram e = parse_diagram_json(diagram_to_json(d));
    CHECK(e == d);
    CHECK(diagram_to_json(e) == diagram_to_json(d));
  }
}

TEST_CASE("named domains") {
  PointedDiagram d = test::corpus_diagram("adapted_g2.hd.json");
  int p = d.domain_index("P");
  REQUIRE(p >= 0);
  CHECK(d.domains[p].multiplicity[d.region_index("RP")] == 1);
  CHECK(d.domain_index("missing") < 0);

  json j = corpus_json("adapted_g2.hd.json");
  j["domains"][0]["multiplicities"]["Nowhere"] = 1;
  CHECK_FALSE(validate(parse_diagram_json(j.dump())).ok());
}

TEST_CASE("swap and conjugation are involutions and stay valid") {
  for (const char* f : {"figure2.hd.json", "adapted_g2.hd.json", "lens_e4.hd.json"}) {
    CAPTURE(f);
    PointedDiagram d = test::corpus_diagram(f);
    PointedDiagram s = swap_basepoints(d), c = conjugate_diagram(d);
    CHECK(validate(s).ok());
    CHECK(validate(c).ok());
    CHECK(s.z == d.w);
    CHECK(s.w == d.z);
    CHECK(swap_basepoints(s) == d);
    CHECK(conjugate_diagram(c) == d);
  }
}

TEST_CASE("surface homology of curve classes") {
  // alpha (1,0), beta (1,e): the algebraic intersection pairing gives #(alpha ∩ beta) = e
  for (int e = 1; e <= 6; ++e) {
    CAPTURE(e);
    PointedDiagram d = lens_diagram(e);
    SurfaceH1 h = surface_h1(d);
    REQUIRE(h.rank == 2);
    const IntVec& a = h.alpha_classes[0];
    const IntVec& b = h.beta_classes[0];
    Int pairing = a[0] * b[1] - a[1] * b[0];
    CHECK(abs(pairing) == e);
    CHECK(static_cast<long>(d.points.size()) == e);
  }
  CHECK(surface_h1(test::corpus_diagram("adapted_g2.hd.json")).rank == 4);
}

TEST_CASE("ambient homology") {
  CHECK(ambient_h1(test::corpus_diagram("figure2.hd.json")).describe() == "Z");
  CHECK(ambient_h1(lens_diagram(3)).describe() == "Z/3");
  CHECK(ambient_h1(slope_diagram(0, 1, 0, 0)).order() == 1);
  CHECK(ambient_h1(test::corpus_diagram("adapted_g2.hd.json")).describe() == "Z");
}

TEST_CASE("knot class") {
  AbelianGroup z3 = ambient_h1(lens_diagram(3));
  IntVec k = recover_knot_data(lens_diagram(3));
  CHECK(z3.element_order(k) == 3);

  PointedDiagram f2 = test::corpus_diagram("figure2.hd.json");
  IntVec kf = recover_knot_data(f2);
  REQUIRE(kf.size() == 1);
  CHECK(abs(kf[0]) == 1);

  PointedDiagram u = slope_diagram(0, 1, 0, 0);
  u.allow_coincident = true;
  CHECK(ambient_h1(u).is_zero(recover_knot_data(u)));
}
