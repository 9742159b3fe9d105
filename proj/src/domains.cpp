#include "hfk/domains.hpp"

#include <algorithm>
#include <set>

#include <boost/integer/common_factor.hpp>

#include "hfk/errors.hpp"

namespace hfk {

namespace {

std::vector<std::array<int, 2>> sides_of(const PointedDiagram& d) {
  std::vector<std::array<int, 2>> s(d.arcs.size(), {-1, -1});
  for (std::size_t r = 0; r < d.regions.size(); ++r)
    for (const auto& comp : d.regions[r].boundary)
      for (auto sa : comp) s[sa.arc][sa.sign > 0 ? 0 : 1] = static_cast<int>(r);
  return s;
}

}  // namespace

DomainSystem::DomainSystem(const PointedDiagram& d) : d_(d) {
  require_valid(d);
  const std::size_t P = d.points.size(), R = d.regions.size();
  A_ = ZMatrix(2 * P, R);
  auto sides = sides_of(d);
  auto pa = point_arcs(d);
  // jump across arc a: n(left) - n(right)
  auto add_jump = [&](std::size_t row, int arc, int k) {
    A_(row, sides[arc][0]) += k;
    A_(row, sides[arc][1]) -= k;
  };
  for (std::size_t p = 0; p < P; ++p) {
    add_jump(2 * p, pa[p].alpha_in, 1);
    add_jump(2 * p, pa[p].alpha_out, -1);
    add_jump(2 * p + 1, pa[p].beta_in, 1);
    add_jump(2 * p + 1, pa[p].beta_out, -1);
  }
  snf_ = smith_normal_form(A_);
  for (std::size_t j = snf_.rank; j < R; ++j) periodic_.basis.push_back(snf_.V.column(j));

  auto with_rows = [&](const std::vector<int>& regs) {
    ZMatrix extra(regs.size(), R);
    for (std::size_t i = 0; i < regs.size(); ++i) extra(i, regs[i]) += 1;
    return A_.vstack(extra);
  };
  periodic_.pinned = integer_kernel(with_rows(d.z));
  std::vector<int> both = d.z;
  both.insert(both.end(), d.w.begin(), d.w.end());
  free_ = integer_kernel(with_rows(both));
}

IntVec DomainSystem::point_vector(const Generator& x) const {
  IntVec v(A_.rows());
  for (int p : x.points) {
    v[2 * p] += 1;
    v[2 * p + 1] -= 1;
  }
  return v;
}

std::optional<DomainVector> DomainSystem::solve(const IntVec& rhs) const { return solve_integer(snf_, rhs); }

std::optional<DomainVector> DomainSystem::connecting_domain(const Generator& x, const Generator& y) const {
  IntVec b = point_vector(y);
  IntVec vx = point_vector(x);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] -= vx[i];
  return solve(b);
}

bool DomainSystem::is_periodic(const DomainVector& p) const {
  for (const auto& v : A_.mul(p))
    if (!v.is_zero()) return false;
  return true;
}

PeriodicDomainBasis periodic_domains(const PointedDiagram& d) { return DomainSystem(d).periodic(); }

std::optional<DomainVector> connecting_domain(const PointedDiagram& d, const Generator& x, const Generator& y) {
  return DomainSystem(d).connecting_domain(x, y);
}

DomainVector full_surface(const PointedDiagram& d) { return DomainVector(d.regions.size(), Int(1)); }

Int multiplicity(const DomainVector& phi, int region) { return phi.at(region); }

Int n_z(const PointedDiagram& d, const DomainVector& phi) {
  Int s = 0;
  for (int r : d.z) s += phi[r];
  return s;
}

Int n_w(const PointedDiagram& d, const DomainVector& phi) {
  Int s = 0;
  for (int r : d.w) s += phi[r];
  return s;
}

Int euler_measure4(const PointedDiagram& d, const DomainVector& phi) {
  Int s = 0;
  for (std::size_t r = 0; r < d.regions.size(); ++r)
    if (!phi[r].is_zero())
      s += phi[r] * (4 * d.regions[r].euler_char - d.corner_count(static_cast<int>(r)));
  return s;
}

Int point_measure4(const PointedDiagram& d, const DomainVector& phi, const Generator& x) {
  Int s = 0;
  for (int p : x.points)
    for (int r : d.points[p].quadrants) s += phi[r];
  return s;
}

Int maslov_index4(const PointedDiagram& d, const DomainVector& phi, const Generator& x, const Generator& y) {
  return euler_measure4(d, phi) + point_measure4(d, phi, x) + point_measure4(d, phi, y);
}

Rat euler_measure(const PointedDiagram& d, const DomainVector& phi) { return Rat(euler_measure4(d, phi), 4); }
Rat point_measure(const PointedDiagram& d, const DomainVector& phi, const Generator& x) {
  return Rat(point_measure4(d, phi, x), 4);
}
Rat maslov_index(const PointedDiagram& d, const DomainVector& phi, const Generator& x, const Generator& y) {
  return Rat(maslov_index4(d, phi, x, y), 4);
}

// ---------------------------------------------------------------- positivity

namespace {

struct Ineq {
  std::vector<Rat> coef;  // over the lattice coefficients
  Rat rhs;                // coef . c >= rhs
  std::vector<Rat> prov;  // nonnegative multipliers of the original rows
  int support() const {
    int n = 0;
    for (const auto& p : prov) n += !p.is_zero();
    return n;
  }
};

// Scale so the first nonzero coefficient (or rhs) has absolute value 1.
std::pair<std::vector<Rat>, Rat> normal_key(const Ineq& q) {
  Rat s = 0;
  for (const auto& c : q.coef)
    if (!c.is_zero()) {
      s = abs(c);
      break;
    }
  if (s.is_zero()) s = q.rhs.is_zero() ? Rat(1) : abs(q.rhs);
  std::vector<Rat> k;
  for (const auto& c : q.coef) k.push_back(c / s);
  return {k, q.rhs / s};
}

}  // namespace

AdmissibilityResult positivity_test(const std::vector<DomainVector>& basis, std::size_t R) {
  AdmissibilityResult res;
  const std::size_t k = basis.size();
  if (k == 0) {
    res.area_form.assign(R, Rat(1));
    return res;
  }
  // rows: (B c)_r >= 0 for each region, sum_r (B c)_r >= 1
  std::vector<Ineq> rows;
  for (std::size_t r = 0; r <= R; ++r) {
    Ineq q;
    q.coef.assign(k, Rat(0));
    q.prov.assign(R + 1, Rat(0));
    q.prov[r] = 1;
    for (std::size_t j = 0; j < k; ++j) {
      if (r < R) {
        q.coef[j] = Rat(basis[j][r]);
      } else {
        Int s = 0;
        for (std::size_t t = 0; t < R; ++t) s += basis[j][t];
        q.coef[j] = Rat(s);
      }
    }
    q.rhs = r < R ? Rat(0) : Rat(1);
    rows.push_back(q);
  }

  std::vector<std::vector<Ineq>> stages{rows};
  std::vector<std::size_t> order;
  std::vector<bool> done(k, false);
  for (std::size_t step = 0; step < k; ++step) {
    const auto& cur = stages.back();
    // variable with the fewest generated pairs
    std::size_t best = k, best_cost = 0;
    for (std::size_t v = 0; v < k; ++v) {
      if (done[v]) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& q : cur) {
        if (q.coef[v] > 0) ++pos;
        if (q.coef[v] < 0) ++neg;
      }
      if (best == k || pos * neg < best_cost) {
        best = v;
        best_cost = pos * neg;
      }
    }
    done[best] = true;
    order.push_back(best);
    std::vector<Ineq> next;
    std::set<std::pair<std::vector<Rat>, Rat>> seen;
    auto keep = [&](Ineq q) {
      if (q.support() > static_cast<int>(step) + 2) return;  // Chernikov redundancy
      if (seen.insert(normal_key(q)).second) next.push_back(std::move(q));
    };
    for (const auto& q : cur)
      if (q.coef[best].is_zero()) keep(q);
    for (const auto& p : cur) {
      if (p.coef[best] <= 0) continue;
      for (const auto& n : cur) {
        if (n.coef[best] >= 0) continue;
        Rat a = -n.coef[best], b = p.coef[best];
        Ineq q;
        q.coef.resize(k);
        for (std::size_t j = 0; j < k; ++j) q.coef[j] = a * p.coef[j] + b * n.coef[j];
        q.coef[best] = 0;
        q.rhs = a * p.rhs + b * n.rhs;
        q.prov.resize(R + 1);
        for (std::size_t j = 0; j <= R; ++j) q.prov[j] = a * p.prov[j] + b * n.prov[j];
        keep(std::move(q));
      }
    }
    stages.push_back(std::move(next));
  }

  for (const auto& q : stages.back()) {
    if (q.rhs > 0) {
      // 0 >= rhs > 0 is impossible: the multipliers give a positive area form
      res.admissible = true;
      res.area_form.resize(R);
      for (std::size_t r = 0; r < R; ++r) res.area_form[r] = q.prov[r] + q.prov[R];
      for (std::size_t r = 0; r < R; ++r)
        if (res.area_form[r] <= 0) throw InvariantError("area form certificate is not positive");
      for (const auto& b : basis) {
        Rat s = 0;
        for (std::size_t r = 0; r < R; ++r) s += res.area_form[r] * Rat(b[r]);
        if (!s.is_zero()) throw InvariantError("area form certificate does not annihilate the lattice");
      }
      return res;
    }
  }

  // feasible: back substitution through the stages
  std::vector<Rat> c(k, Rat(0));
  std::vector<bool> set(k, false);
  for (std::size_t t = k; t-- > 0;) {
    std::size_t v = order[t];
    std::optional<Rat> lo, hi;
    for (const auto& q : stages[t]) {
      if (q.coef[v].is_zero()) continue;
      Rat rest = q.rhs;
      for (std::size_t j = 0; j < k; ++j)
        if (j != v && set[j]) rest -= q.coef[j] * c[j];
      Rat bound = rest / q.coef[v];
      if (q.coef[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    c[v] = lo ? *lo : (hi ? *hi : Rat(0));
    set[v] = true;
  }
  Int scale = 1;
  for (const auto& x : c) scale = boost::integer::lcm(scale, denominator(x));
  DomainVector dom(R);
  for (std::size_t j = 0; j < k; ++j) {
    Int cj = numerator(c[j] * scale);
    for (std::size_t r = 0; r < R; ++r) dom[r] += cj * basis[j][r];
  }
  bool nonzero = false;
  for (const auto& x : dom) {
    if (x < 0) throw InvariantError("positivity certificate has a negative multiplicity");
    nonzero |= !x.is_zero();
  }
  if (!nonzero) throw InvariantError("positivity certificate is zero");
  Int g = gcd_of(dom);
  for (auto& x : dom) x /= g;
  res.admissible = false;
  res.positive_domain = dom;
  return res;
}

AdmissibilityResult is_weakly_admissible(const PointedDiagram& d) {
  DomainSystem ds(d);
  return positivity_test(ds.periodic().pinned, d.regions.size());
}

AdmissibilityResult is_extremely_weakly_admissible(const PointedDiagram& d) {
  DomainSystem ds(d);
  return positivity_test(ds.basepoint_free(), d.regions.size());
}

bool is_nice(const PointedDiagram& d) {
  require_valid(d);
  for (std::size_t r = 0; r < d.regions.size(); ++r) {
    int ri = static_cast<int>(r);
    bool marked = std::find(d.z.begin(), d.z.end(), ri) != d.z.end() ||
                  std::find(d.w.begin(), d.w.end(), ri) != d.w.end();
    if (marked) continue;
    int c = d.corner_count(ri);
    if (d.regions[r].euler_char != 1 || (c != 2 && c != 4)) return false;
  }
  return true;
}

}  // namespace hfk
