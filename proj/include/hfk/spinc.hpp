#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hfk/domains.hpp"
#include "hfk/generators.hpp"
#include "hfk/surface.hpp"

namespace hfk {

// Shared derived data of one validated diagram, computed on first use.
class Analysis {
 public:
  explicit Analysis(PointedDiagram d, std::uint64_t budget = generator_budget_from_env());

  const PointedDiagram& diagram() const { return d_; }
  const DomainSystem& domains() const;
  const SurfaceComplex& surface() const;
  const AbelianGroup& h1() const;
  const std::vector<Generator>& generators() const;

 private:
  PointedDiagram d_;
  std::uint64_t budget_;
  mutable std::unique_ptr<DomainSystem> ds_;
  mutable std::unique_ptr<SurfaceComplex> sc_;
  mutable std::unique_ptr<AbelianGroup> grp_;
  mutable std::unique_ptr<std::vector<Generator>> gens_;
};

struct SpincPartition {
  std::vector<std::vector<int>> classes;  // generator indices, ascending
  std::vector<int> class_of;              // per generator
  // For each generator, a domain in π2(first generator of its class, x).
  std::vector<DomainVector> anchor;
  // Label of each class: epsilon(first generator of class 0, first generator of the class).
  std::vector<IntVec> labels;
};

SpincPartition partition(const Analysis& a);

// Difference class of two generators in H1(Y).
IntVec epsilon_class(const Analysis& a, const Generator& x, const Generator& y);

// PD[K] shift between the w- and z-labelings, recomputed per generator with
// different search routes; throws InvariantError if it is not constant.
IntVec label_shift_pdk(const Analysis& a);

struct GradedClass {
  int class_id = 0;
  // Offsets relative to the first generator of the class, per member (same order).
  std::vector<Int> alexander;
  std::vector<Int> maslov;
  // Offsets are only defined modulo these (0 = exact).
  Int delta_a = 0;
  Int delta_m = 0;
};

std::vector<GradedClass> relative_gradings(const Analysis& a, const SpincPartition& p);

// Domain in π2(x, y) for two generators of the same class (by index).
DomainVector domain_between(const SpincPartition& p, int x, int y);

}  // namespace hfk
