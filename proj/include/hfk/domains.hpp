#pragma once

#include <optional>
#include <vector>

#include "hfk/diagram.hpp"
#include "hfk/generators.hpp"
#include "hfk/zmatrix.hpp"

namespace hfk {

// Integer multiplicity per region.
using DomainVector = IntVec;

struct PeriodicDomainBasis {
  std::vector<DomainVector> basis;   // all periodic domains ([Σ] included)
  std::vector<DomainVector> pinned;  // the sublattice with n_z = 0 at every z
};

// Corner equations of the diagram: A n = v(y) - v(x) for n in π2(x, y).
class DomainSystem {
 public:
  explicit DomainSystem(const PointedDiagram& d);

  const PointedDiagram& diagram() const { return d_; }
  const ZMatrix& matrix() const { return A_; }

  IntVec point_vector(const Generator& x) const;
  std::optional<DomainVector> connecting_domain(const Generator& x, const Generator& y) const;
  // Domain whose boundary is the given right-hand side, if one exists.
  std::optional<DomainVector> solve(const IntVec& rhs) const;
  bool is_periodic(const DomainVector& p) const;

  const PeriodicDomainBasis& periodic() const { return periodic_; }
  // Periodic domains with multiplicity 0 at every z and every w.
  const std::vector<DomainVector>& basepoint_free() const { return free_; }

 private:
  PointedDiagram d_;
  ZMatrix A_;
  SmithForm snf_;
  PeriodicDomainBasis periodic_;
  std::vector<DomainVector> free_;
};

PeriodicDomainBasis periodic_domains(const PointedDiagram& d);
std::optional<DomainVector> connecting_domain(const PointedDiagram& d, const Generator& x, const Generator& y);

// [Σ]: multiplicity one everywhere.
DomainVector full_surface(const PointedDiagram& d);

Int multiplicity(const DomainVector& phi, int region);
Int n_z(const PointedDiagram& d, const DomainVector& phi);  // summed over all z
Int n_w(const PointedDiagram& d, const DomainVector& phi);

// Four times the Euler measure, point measure and Maslov index (exact integers).
Int euler_measure4(const PointedDiagram& d, const DomainVector& phi);
Int point_measure4(const PointedDiagram& d, const DomainVector& phi, const Generator& x);
Int maslov_index4(const PointedDiagram& d, const DomainVector& phi, const Generator& x, const Generator& y);

Rat euler_measure(const PointedDiagram& d, const DomainVector& phi);
Rat point_measure(const PointedDiagram& d, const DomainVector& phi, const Generator& x);
Rat maslov_index(const PointedDiagram& d, const DomainVector& phi, const Generator& x, const Generator& y);

// Outcome of the positivity test on a lattice of periodic domains.
struct AdmissibilityResult {
  bool admissible = true;
  // When not admissible: a nonzero domain of the lattice with all multiplicities >= 0.
  DomainVector positive_domain;
  // When admissible: strictly positive region weights pairing to zero with the lattice.
  std::vector<Rat> area_form;
};

// Decides whether some nonzero element of span(basis) is nonnegative, by exact
// Fourier-Motzkin elimination. Both certificates are re-checked before returning.
AdmissibilityResult positivity_test(const std::vector<DomainVector>& basis, std::size_t num_regions);

// No nonzero nonnegative periodic domain with n_z = 0.
AdmissibilityResult is_weakly_admissible(const PointedDiagram& d);
// No nonzero nonnegative periodic domain with n_z = n_w = 0.
AdmissibilityResult is_extremely_weakly_admissible(const PointedDiagram& d);

// Every region free of basepoints is a bigon or a square.
bool is_nice(const PointedDiagram& d);

}  // namespace hfk
