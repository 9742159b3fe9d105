#include "hfk/spinc.hpp"

#include <boost/integer/common_factor.hpp>

#include "hfk/errors.hpp"

namespace hfk {

Analysis::Analysis(PointedDiagram d, std::uint64_t budget) : d_(std::move(d)), budget_(budget) {
  require_valid(d_);
}

const DomainSystem& Analysis::domains() const {
  if (!ds_) ds_ = std::make_unique<DomainSystem>(d_);
  return *ds_;
}

const SurfaceComplex& Analysis::surface() const {
  if (!sc_) sc_ = std::make_unique<SurfaceComplex>(build_surface_complex(d_));
  return *sc_;
}

const AbelianGroup& Analysis::h1() const {
  if (!grp_) grp_ = std::make_unique<AbelianGroup>(ambient_h1(d_));
  return *grp_;
}

const std::vector<Generator>& Analysis::generators() const {
  if (!gens_) gens_ = std::make_unique<std::vector<Generator>>(enumerate_generators(d_, budget_));
  return *gens_;
}

SpincPartition partition(const Analysis& a) {
  const auto& gens = a.generators();
  const auto& ds = a.domains();
  SpincPartition p;
  p.class_of.assign(gens.size(), -1);
  p.anchor.resize(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
      int base = p.classes[c].front();
      auto phi = ds.connecting_domain(gens[base], gens[i]);
      if (phi) {
        p.class_of[i] = static_cast<int>(c);
        p.classes[c].push_back(static_cast<int>(i));
        p.anchor[i] = *phi;
        break;
      }
    }
    if (p.class_of[i] < 0) {
      p.class_of[i] = static_cast<int>(p.classes.size());
      p.classes.push_back({static_cast<int>(i)});
      p.anchor[i] = DomainVector(a.diagram().regions.size());
    }
  }
  for (const auto& cls : p.classes)
    p.labels.push_back(epsilon_class(a, gens[p.classes[0].front()], gens[cls.front()]));
  return p;
}

namespace {

// Forward walk along a curve from point p to point q.
void add_curve_path(const PointedDiagram& d, const Curve& c, int p, int q, int sign, IntVec& chain) {
  if (p == q) return;
  std::size_t start = c.arcs.size();
  for (std::size_t k = 0; k < c.arcs.size(); ++k)
    if (d.arcs[c.arcs[k]].from == p) start = k;
  if (start == c.arcs.size()) throw InvariantError("point not on curve");
  for (std::size_t t = 0; t < c.arcs.size(); ++t) {
    int arc = c.arcs[(start + t) % c.arcs.size()];
    chain[arc] += sign;
    if (d.arcs[arc].to == q) return;
  }
  throw InvariantError("curve walk did not reach its target");
}

}  // namespace

IntVec epsilon_class(const Analysis& a, const Generator& x, const Generator& y) {
  const auto& d = a.diagram();
  const auto& sc = a.surface();
  IntVec chain(sc.edges.size());
  // along alpha from x to y, back along beta from y to x
  for (int i = 0; i < d.d(); ++i) add_curve_path(d, d.alphas[i], x.points[i], y.points[i], 1, chain);
  std::vector<int> xb(d.d()), yb(d.d());
  for (int p : x.points) xb[d.points[p].beta] = p;
  for (int p : y.points) yb[d.points[p].beta] = p;
  for (int j = 0; j < d.d(); ++j) add_curve_path(d, d.betas[j], yb[j], xb[j], 1, chain);
  return a.h1().reduce(cycle_class(sc, chain));
}

IntVec label_shift_pdk(const Analysis& a) {
  const auto& gens = a.generators();
  const auto& grp = a.h1();
  std::optional<IntVec> shift;
  std::size_t n = std::max<std::size_t>(gens.size(), 1);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec k = grp.reduce(cycle_class(a.surface(), knot_chain(a.diagram(), a.surface(), static_cast<int>(i))));
    if (!shift) {
      shift = k;
    } else if (*shift != k) {
      throw InvariantError("PD[K] label shift differs between generators");
    }
  }
  return *shift;
}

DomainVector domain_between(const SpincPartition& p, int x, int y) {
  if (p.class_of[x] != p.class_of[y]) throw InvariantError("generators lie in different classes");
  DomainVector phi = p.anchor[y];
  for (std::size_t r = 0; r < phi.size(); ++r) phi[r] -= p.anchor[x][r];
  return phi;
}

namespace {

Int exact_quarter(const Int& v4) {
  if (!(v4 % 4).is_zero()) throw InvariantError("Maslov index is not an integer");
  return v4 / 4;
}

Int reduce_mod(const Int& v, const Int& m) {
  if (m.is_zero()) return v;
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::vector<GradedClass> relative_gradings(const Analysis& a, const SpincPartition& p) {
  const auto& d = a.diagram();
  const auto& gens = a.generators();
  const auto& basis = a.domains().periodic().basis;
  std::vector<GradedClass> out;
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    GradedClass gc;
    gc.class_id = static_cast<int>(c);
    const Generator& base = gens[p.classes[c].front()];
    for (const auto& P : basis) {
      Int da = n_z(d, P) - n_w(d, P);
      Int dm = exact_quarter(maslov_index4(d, P, base, base)) - 2 * n_w(d, P);
      gc.delta_a = boost::integer::gcd(gc.delta_a, abs(da));
      gc.delta_m = boost::integer::gcd(gc.delta_m, abs(dm));
    }
    for (int x : p.classes[c]) {
      const DomainVector& phi = p.anchor[x];  // from base to x
      Int da = n_z(d, phi) - n_w(d, phi);
      Int dm = exact_quarter(maslov_index4(d, phi, base, gens[x])) - 2 * n_w(d, phi);
      gc.alexander.push_back(reduce_mod(-da, gc.delta_a));
      gc.maslov.push_back(reduce_mod(-dm, gc.delta_m));
    }
    out.push_back(std::move(gc));
  }
  return out;
}

}  // namespace hfk
