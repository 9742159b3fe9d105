#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfk/chain.hpp"

namespace hfk {

using ojson = nlohmann::ordered_json;

// {check, status, witnesses}. status is pass, violation, or inapplicable;
// internal inconsistencies throw InvariantError instead.
struct CheckReport {
  std::string check;
  std::string status;
  ojson witnesses = ojson::object();
  ojson to_json() const;
};

enum class TransformKind { point_swap, conjugation, knot_conjugation };
const char* transform_name(TransformKind k);

struct DiagramTransform {
  TransformKind kind = TransformKind::point_swap;
  std::vector<int> generator_map;  // generator index in d -> index in d'
  std::vector<int> class_map;      // class index in d -> class index in d'
};

// z and w exchanged; generators and classes correspond identically.
std::pair<PointedDiagram, DiagramTransform> point_swap(const Analysis& a);
// Orientation reversed, alpha and beta exchanged, z and w exchanged.
std::pair<PointedDiagram, DiagramTransform> conjugate(const Analysis& a);
// conjugate after point_swap: the basepoints end where they started.
std::pair<PointedDiagram, DiagramTransform> knot_conjugate(const Analysis& a);

// Differentials before and after the swap must agree literally; also reports
// the PD[K] shift and the class relabeling it induces.
CheckReport point_swap_check(const Analysis& a, const DifferentialOptions& opt = {});
// Relative tables of d and its conjugate, matched through the class map.
CheckReport conjugation_check(const Analysis& a, const DifferentialOptions& opt = {});
// Looks for an involution l -> c - l on class labels, c in [K] + 2 H1, that
// pairs classes of equal refined rank.
CheckReport knot_conjugation_check(const Analysis& a, const DifferentialOptions& opt = {});
CheckReport evenness_check(const Analysis& a, const DifferentialOptions& opt = {});

// (A, M) -> (aa A + am M, ma A + mm M)
struct Regrading {
  int aa = 1, am = 0, ma = 0, mm = 1;
};

// Compares class c of `t` (regraded) with class class_map[c] of `u`, both
// relative: gradings are reduced modulo the combined indeterminacy and then
// translated to a canonical origin. Returns a description of the first
// mismatch, or nothing.
std::optional<std::string> compare_relative_tables(const RankTable& t, const RankTable& u,
                                                   const std::vector<int>& class_map, Regrading r);

struct ChernValue {
  Int value = 0;
  int euler_char = 0;       // of the closure of P
  int surface_genus = 0;    // -euler_char / 2
  int interior_points = 0;  // coordinates of x with all four corners in P
  int boundary_curves = 0;
  // The construction the formula comes from wants diagram genus > 2 g(F).
  bool genus_hypothesis = true;
};

// Euler characteristic of the closure of the support of a 0/1 domain.
int closure_euler_char(const PointedDiagram& d, const DomainVector& p);

// 2 - 2g + 2 #{interior coordinates}; throws InputError when P is not a 0/1
// periodic domain, contains a z basepoint, or has odd or positive Euler
// characteristic.
ChernValue chern_eval(const PointedDiagram& d, const DomainVector& p, const Generator& x);

// All nonzero 0/1 periodic domains avoiding every z (exhaustive; at most
// `max_regions` regions).
std::vector<DomainVector> zero_one_periodic_domains(const PointedDiagram& d, std::size_t max_regions = 20);

// Same-class generators must give equal Chern values.
CheckReport chern_constancy(const Analysis& a, const DomainVector& p);

enum class AdjunctionCase { one_inside, both_outside };

struct ClassPairing {
  int class_id = 0;
  std::int64_t rank = 0;
  Int value = 0;
};

// Case one_inside: -value <= 2g - 2. Case both_outside: |value| <= 2g - 2.
// Only classes of nonzero rank are tested.
CheckReport adjunction_evaluate(const std::vector<ClassPairing>& classes, int surface_genus, AdjunctionCase c);
CheckReport adjunction_report(const Analysis& a, const DomainVector& p, const RankTable& t);

// Each total is at most the sum of the other two.
bool triangle_rank_consistency(std::int64_t a, std::int64_t b, std::int64_t c);

}  // namespace hfk
