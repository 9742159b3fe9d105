#include "hfk/builders.hpp"

#include <numeric>

#include "hfk/errors.hpp"

namespace hfk {

namespace {
int mod(int a, int q) { return ((a % q) + q) % q; }
}  // namespace

PointedDiagram slope_diagram(int p, int q, int z_region, int w_region) {
  if (q < 1 || std::gcd(p, q) != 1) throw InputError("slope (p,q) needs q >= 1 and gcd(p,q) = 1");
  PointedDiagram d;
  d.genus = 1;
  for (int j = 0; j < q; ++j) {
    IntersectionPoint pt;
    pt.id = "x" + std::to_string(j);
    pt.alpha = 0;
    pt.beta = 0;
    pt.sign = 1;
    pt.quadrants = {j, mod(j - 1, q), mod(j - p - 1, q), mod(j - p, q)};
    d.points.push_back(pt);
  }
  // arcs a0..a{q-1} along alpha, then b0..b{q-1} along beta
  for (int j = 0; j < q; ++j) d.arcs.push_back({"a" + std::to_string(j), j, mod(j + 1, q), CurveKind::alpha, 0});
  for (int j = 0; j < q; ++j) d.arcs.push_back({"b" + std::to_string(j), j, mod(j + p, q), CurveKind::beta, 0});
  Curve alpha{CurveKind::alpha, 0, {}};
  for (int j = 0; j < q; ++j) alpha.arcs.push_back(j);
  Curve beta{CurveKind::beta, 0, {}};
  for (int j = 0, k = 0; k < q; ++k, j = mod(j + p, q)) beta.arcs.push_back(q + j);
  d.alphas.push_back(alpha);
  d.betas.push_back(beta);
  for (int j = 0; j < q; ++j) {
    Region r;
    r.id = "R" + std::to_string(j);
    r.euler_char = 1;
    r.boundary = {{{j, 1}, {q + mod(j + 1, q), 1}, {mod(j + p, q), -1}, {q + j, -1}}};
    d.regions.push_back(r);
  }
  d.z = {mod(z_region, q)};
  d.w = {mod(w_region, q)};
  d.allow_coincident = d.z == d.w;
  return d;
}

PointedDiagram lens_diagram(int e) {
  if (e < 1) throw InputError("lens diagram needs e >= 1");
  PointedDiagram d = slope_diagram(1, e, 1, 0);
  d.description = "Knot in the lens space with H1 = Z/" + std::to_string(e) +
                  ", genus one diagram with alpha of slope (1,0) and beta of slope (1," + std::to_string(e) +
                  "); w in R0 and z in R1 are adjacent across a beta arc.";
  return d;
}

}  // namespace hfk
