#pragma once

#include <string>
#include <vector>

#include "hfk/diagram.hpp"
#include "hfk/zmatrix.hpp"

namespace hfk {

// Cell structure on the surface refining the diagram: the points and arcs,
// plus one extra vertex per region joined to each boundary component, 2h
// loops for a region of genus h, and one 2-cell per region.
struct SurfaceComplex {
  int num_vertices = 0;  // points first, then one per region
  struct Edge {
    int tail = -1, head = -1;
  };
  std::vector<Edge> edges;  // arcs first (same indices), then the extra edges
  // spoke[r][i]: extra edge from the region vertex to the start of component i
  std::vector<std::vector<int>> spoke;
  std::vector<IntVec> face_boundary;  // per region, coefficients over edges

  int b0 = 0, b1 = 0, b2 = 0;
  // Coordinates in H1(surface) of every edge; a cycle's class is the sum.
  std::vector<IntVec> edge_class;
};

SurfaceComplex build_surface_complex(const PointedDiagram& d);

// Class in H1(surface) of a 1-cycle given by edge coefficients.
IntVec cycle_class(const SurfaceComplex& sc, const IntVec& chain);

int curve_class_rank(const PointedDiagram& d, const SurfaceComplex& sc, CurveKind kind);

// Component label of every region in the complement of the curves of `kind`.
std::vector<int> complement_components(const PointedDiagram& d, CurveKind kind);

struct SurfaceH1 {
  int rank = 0;
  std::vector<IntVec> alpha_classes;
  std::vector<IntVec> beta_classes;
};

SurfaceH1 surface_h1(const PointedDiagram& d);

// Finitely generated abelian group Z^{2g} / span(curve classes), reduced to
// Smith form. Invariant factors equal to 1 are dropped; 0 stands for Z.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  AbelianGroup(const ZMatrix& relations, std::size_t ambient_rank);

  const IntVec& factors() const { return factors_; }
  std::size_t ambient_rank() const { return ambient_; }

  // Canonical coordinates of the image of an ambient vector.
  IntVec reduce(const IntVec& ambient) const;
  IntVec add(const IntVec& a, const IntVec& b) const;
  IntVec negate(const IntVec& a) const;
  bool is_zero(const IntVec& a) const;
  bool divisible_by_two(const IntVec& a) const;
  IntVec zero() const { return IntVec(factors_.size()); }
  bool finite() const;
  Int order() const;  // 0 when infinite
  // Every element, for finite groups (in lexicographic order of coordinates).
  std::vector<IntVec> elements() const;
  // Order of an element (0 when it has infinite order).
  Int element_order(const IntVec& a) const;

  std::string describe() const;
  static std::string element_string(const IntVec& e);

 private:
  IntVec normalize(IntVec v) const;

  std::size_t ambient_ = 0;
  IntVec factors_;
  std::vector<std::size_t> rows_;  // rows of U kept
  ZMatrix U_;
};

AbelianGroup ambient_h1(const PointedDiagram& d);

// 1-chain from the vertex of region `from` to the vertex of region `to`
// crossing arc `arc` (which must separate them).
IntVec crossing_chain(const PointedDiagram& d, const SurfaceComplex& sc, int from, int to, int arc);

// Closed loop from the w basepoints to the z basepoints crossing only beta
// arcs, then back crossing only alpha arcs. `route` varies tie breaking in
// the search. Throws InputError if no such loop exists.
IntVec knot_chain(const PointedDiagram& d, const SurfaceComplex& sc, int route = 0);

// [K] in H1(Y).
IntVec recover_knot_data(const PointedDiagram& d);

}  // namespace hfk
