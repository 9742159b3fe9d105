#include "hfk/fuzz.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "hfk/builders.hpp"
#include "hfk/errors.hpp"
#include "hfk/grid.hpp"

namespace hfk {

FuzzKind parse_fuzz_kind(const std::string& name) {
  if (name == "slopes") return FuzzKind::slopes;
  if (name == "grids") return FuzzKind::grids;
  throw InputError("unknown fuzz kind '" + name + "' (slopes or grids)");
}

void self_loop_mutation(ChainComplexF2& c) {
  for (std::size_t x = 0; x < c.boundary.size(); ++x) {
    auto& b = c.boundary[x];
    if (!std::binary_search(b.begin(), b.end(), static_cast<int>(x)))
      b.insert(std::lower_bound(b.begin(), b.end(), static_cast<int>(x)), static_cast<int>(x));
  }
}

ojson FuzzSummary::to_json() const {
  ojson j;
  j["cases"] = cases;
  j["checks"] = checks;
  j["status"] = ok() ? "pass" : "fail";
  j["failures"] = ojson::array();
  for (const auto& f : failures)
    j["failures"].push_back(
        {{"case", f.case_index}, {"property", f.property}, {"detail", f.detail}, {"reproducer", f.reproducer}});
  return j;
}

namespace {

struct Finding {
  std::string property;
  std::string detail;
};

struct SlopeCase {
  int p, q, z, w;
};

bool involutions_hold(const PointedDiagram& d) {
  if (swap_basepoints(swap_basepoints(d)) != d) return false;
  if (conjugate_diagram(conjugate_diagram(d)) != d) return false;
  auto n = [](const PointedDiagram& e) { return conjugate_diagram(swap_basepoints(e)); };
  return n(n(d)) == d;
}

// Checks shared by both kinds once a complex is in hand. Returns the first
// failing property.
std::optional<Finding> complex_laws(const ChainComplexF2& c, int& checks) {
  ++checks;
  if (!verify_d_squared(c)) return Finding{"d-squared", "differential does not square to zero"};
  ++checks;
  if (auto v = grading_violation(c); !v.empty()) return Finding{"grading", v};
  return std::nullopt;
}

std::optional<Finding> check_grid(const GridDiagram& g, const FuzzOptions& opt, int& checks) {
  try {
    GridComplex gc = tilde_complex(g, opt.budget);
    if (opt.mutate) opt.mutate(gc.complex);
    if (auto f = complex_laws(gc.complex, checks)) return f;
    RankTable t = homology(gc.complex);
    ++checks;
    try {
      hat_deconvolve(poincare_polynomial(t), g.n);
    } catch (const InvariantError& e) {
      return Finding{"divisibility", e.what()};
    }
    PointedDiagram d = grid_to_pointed(g);
    ++checks;
    if (!involutions_hold(d)) return Finding{"involution", "a transform is not an involution"};
    if (g.n <= opt.cross_check_up_to) {
      ++checks;
      ChainComplexF2 c2 = differential(d);
      if (auto f = complex_laws(c2, checks)) return Finding{"multi-pointed " + f->property, f->detail};
      RankTable u = homology(c2);
      if (auto m = compare_relative_tables(t, u, {0}, Regrading{})) return Finding{"multi-pointed route", *m};
    }
  } catch (const BudgetError&) {
    throw;
  } catch (const Error& e) {
    return Finding{"exception", e.what()};
  }
  return std::nullopt;
}

std::optional<Finding> check_slope(const SlopeCase& s, const FuzzOptions& opt, int& checks) {
  try {
    PointedDiagram d = slope_diagram(s.p, s.q, s.z, s.w);
    Analysis a(d, opt.budget);
    ChainComplexF2 c = differential(a);
    if (opt.mutate) opt.mutate(c);
    if (auto f = complex_laws(c, checks)) return f;
    RankTable t = homology(c);
    ++checks;
    if (t.total() != s.q)
      return Finding{"rank", "total rank " + std::to_string(t.total()) + " differs from |H1| = " + std::to_string(s.q)};
    ++checks;
    if (!involutions_hold(d)) return Finding{"involution", "a transform is not an involution"};
    ++checks;
    point_swap_check(a);
    ++checks;
    CheckReport cj = conjugation_check(a);
    if (cj.status != "pass") return Finding{"conjugation", cj.witnesses.dump()};
  } catch (const BudgetError&) {
    throw;
  } catch (const Error& e) {
    return Finding{"exception", e.what()};
  }
  return std::nullopt;
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

GridDiagram random_knot_grid(std::mt19937_64& rng, int max_n) {
  const int n = 2 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(std::max(1, max_n - 1))));
  GridDiagram g;
  g.n = n;
  for (;;) {
    g.O.resize(n);
    g.X.resize(n);
    std::iota(g.O.begin(), g.O.end(), 0);
    std::iota(g.X.begin(), g.X.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      std::swap(g.O[i], g.O[pick(rng, i + 1)]);
      std::swap(g.X[i], g.X[pick(rng, i + 1)]);
    }
    if (validate_grid(g).empty() && grid_components(g) == 1) return g;
  }
}

SlopeCase random_slope(std::mt19937_64& rng, int max_det) {
  SlopeCase s;
  s.q = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_det)));
  do s.p = static_cast<int>(pick(rng, s.q));
  while (std::gcd(s.p, s.q) != 1);
  s.z = static_cast<int>(pick(rng, s.q));
  s.w = static_cast<int>(pick(rng, s.q));
  return s;
}

// Every knot grid of size n, in lexicographic order.
std::vector<GridDiagram> all_knot_grids(int n) {
  std::vector<GridDiagram> out;
  std::vector<int> o(n), x(n);
  std::iota(o.begin(), o.end(), 0);
  do {
    std::iota(x.begin(), x.end(), 0);
    do {
      GridDiagram g{n, o, x};
      if (validate_grid(g).empty() && grid_components(g) == 1) out.push_back(g);
    } while (std::next_permutation(x.begin(), x.end()));
  } while (std::next_permutation(o.begin(), o.end()));
  return out;
}

constexpr int kShrinkLimit = 2000;

std::string grid_reproducer(const GridDiagram& g, const std::string& property) {
  return "# fails: " + property + "\n" + grid_to_text(g);
}

std::string slope_reproducer(const SlopeCase& s) {
  PointedDiagram d = slope_diagram(s.p, s.q, s.z, s.w);
  d.description = "slope (" + std::to_string(s.p) + "," + std::to_string(s.q) + "), z in R" + std::to_string(s.z) +
                  ", w in R" + std::to_string(s.w);
  return diagram_to_json(d);
}

// Smallest input failing the same property, scanning sizes below the
// original one.
std::string shrink_grid(const GridDiagram& g, const Finding& f, const FuzzOptions& opt) {
  int tried = 0, scratch = 0;
  for (int n = 2; n < g.n; ++n)
    for (const auto& h : all_knot_grids(n)) {
      if (++tried > kShrinkLimit) return grid_reproducer(g, f.property);
      auto r = check_grid(h, opt, scratch);
      if (r && r->property == f.property) return grid_reproducer(h, f.property);
    }
  return grid_reproducer(g, f.property);
}

std::string shrink_slope(const SlopeCase& s, const Finding& f, const FuzzOptions& opt) {
  int tried = 0, scratch = 0;
  for (int q = 1; q < s.q; ++q)
    for (int p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (int z = 0; z < q; ++z)
        for (int w = 0; w < q; ++w) {
          if (++tried > kShrinkLimit) return slope_reproducer(s);
          SlopeCase c{p, q, z, w};
          auto r = check_slope(c, opt, scratch);
          if (r && r->property == f.property) return slope_reproducer(c);
        }
    }
  return slope_reproducer(s);
}

}  // namespace

FuzzSummary run_fuzz(const FuzzOptions& opt) {
  if (opt.count < 0) throw InputError("count must be nonnegative");
  if (opt.max_grid < 2 || opt.max_det < 1) throw InputError("fuzz size bounds are too small");
  FuzzSummary sum;
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < opt.count; ++i) {
    ++sum.cases;
    if (opt.kind == FuzzKind::grids) {
      GridDiagram g = random_knot_grid(rng, opt.max_grid);
      if (auto f = check_grid(g, opt, sum.checks))
        sum.failures.push_back({i, f->property, f->detail, shrink_grid(g, *f, opt)});
    } else {
      SlopeCase s = random_slope(rng, opt.max_det);
      if (auto f = check_slope(s, opt, sum.checks))
        sum.failures.push_back({i, f->property, f->detail, shrink_slope(s, *f, opt)});
    }
  }
  return sum;
}

}  // namespace hfk
