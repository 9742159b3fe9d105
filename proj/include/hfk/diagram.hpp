#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hfk {

enum class CurveKind { alpha, beta };

// Quadrant slots at an intersection point. In a local chart where the alpha
// curve points east and the beta curve is vertical, NE is bounded by the east
// ray and the north ray, then counterclockwise.
enum Quadrant { NE = 0, NW = 1, SW = 2, SE = 3 };

const char* quadrant_name(int q);

struct IntersectionPoint {
  std::string id;
  int alpha = -1;
  int beta = -1;
  // +1 when beta crosses alpha from right to left (beta points north), -1 otherwise.
  int sign = 1;
  std::array<int, 4> quadrants{-1, -1, -1, -1};
};

struct Arc {
  std::string id;
  int from = -1;
  int to = -1;
  // filled from curve membership
  CurveKind kind = CurveKind::alpha;
  int curve = -1;
};

struct Curve {
  CurveKind kind = CurveKind::alpha;
  int index = 0;
  std::vector<int> arcs;  // cyclic, oriented head to tail
};

struct SignedArc {
  int arc = -1;
  int sign = 1;
  bool operator==(const SignedArc&) const = default;
};

struct Region {
  std::string id;
  int euler_char = 1;
  // Each component is traversed with the region on the left.
  std::vector<std::vector<SignedArc>> boundary;
  // Optional declared corners, checked against the point quadrants.
  std::vector<std::pair<int, int>> declared_corners;
  bool has_declared_corners = false;
};

// A 2-chain stored with the diagram and referenced by id (for example a
// periodic domain for Chern class evaluation).
struct NamedDomain {
  std::string id;
  std::vector<int> multiplicity;  // per region
  bool operator==(const NamedDomain&) const = default;
};

struct PointedDiagram {
  int genus = 1;
  std::vector<IntersectionPoint> points;
  std::vector<Arc> arcs;
  std::vector<Curve> alphas;
  std::vector<Curve> betas;
  std::vector<Region> regions;
  std::vector<int> z;  // basepoint regions; size d - g + 1
  std::vector<int> w;
  bool allow_coincident = false;
  std::string description;
  std::vector<NamedDomain> domains;

  // Structural problems noticed while reading (dangling ids and the like).
  std::vector<std::string> load_issues;

  int d() const { return static_cast<int>(alphas.size()); }
  int point_index(const std::string& id) const;
  int region_index(const std::string& id) const;
  int arc_index(const std::string& id) const;
  int domain_index(const std::string& id) const;

  // Number of quadrant slots that reference region r.
  int corner_count(int r) const;
  bool operator==(const PointedDiagram& o) const;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

ValidationReport validate(const PointedDiagram& d);
// Throws InputError listing the problems when the diagram is invalid.
void require_valid(const PointedDiagram& d);

PointedDiagram parse_diagram_json(const std::string& text);
std::string diagram_to_json(const PointedDiagram& d);
PointedDiagram load_diagram_file(const std::string& path);

// Exchange z and w.
PointedDiagram swap_basepoints(const PointedDiagram& d);
// Reverse the surface orientation and exchange the roles of alpha and beta
// (and of z and w).
PointedDiagram conjugate_diagram(const PointedDiagram& d);

// Arcs of the alpha (beta) curve leaving / entering a point.
struct PointArcs {
  int alpha_out = -1, alpha_in = -1, beta_out = -1, beta_in = -1;
};
std::vector<PointArcs> point_arcs(const PointedDiagram& d);

// Quadrant of the corner where a boundary enters a point along `in` and
// leaves along `out`, or -1 when that turn is not a convex corner.
int junction_quadrant(const PointedDiagram& d, const PointArcs& pa, int point, SignedArc in,
                      SignedArc out);

int start_point(const PointedDiagram& d, SignedArc s);
int end_point(const PointedDiagram& d, SignedArc s);

}  // namespace hfk
