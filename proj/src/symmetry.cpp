#include "hfk/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/integer/common_factor.hpp>

#include "hfk/errors.hpp"

namespace hfk {

ojson CheckReport::to_json() const {
  ojson j;
  j["check"] = check;
  j["status"] = status;
  j["witnesses"] = witnesses;
  return j;
}

const char* transform_name(TransformKind k) {
  switch (k) {
    case TransformKind::point_swap: return "point-swap";
    case TransformKind::conjugation: return "conjugation";
    case TransformKind::knot_conjugation: return "knot-conjugation";
  }
  return "?";
}

namespace {

std::string label_string(const IntVec& v) { return AbelianGroup::element_string(v); }

std::vector<int> sorted_points(const Generator& g) {
  std::vector<int> v = g.points;
  std::sort(v.begin(), v.end());
  return v;
}

// Generator and class correspondence between two diagrams on the same points.
DiagramTransform match_generators(const Analysis& a, const Analysis& b, TransformKind kind) {
  DiagramTransform t;
  t.kind = kind;
  const auto& ga = a.generators();
  const auto& gb = b.generators();
  if (ga.size() != gb.size()) throw InvariantError("transform changed the number of generators");
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < gb.size(); ++i) index[sorted_points(gb[i])] = static_cast<int>(i);
  for (const auto& g : ga) {
    auto it = index.find(sorted_points(g));
    if (it == index.end()) throw InvariantError("transform lost a generator");
    t.generator_map.push_back(it->second);
  }
  SpincPartition pa = partition(a), pb = partition(b);
  t.class_map.assign(pa.classes.size(), -1);
  for (std::size_t c = 0; c < pa.classes.size(); ++c) {
    for (int x : pa.classes[c]) {
      int target = pb.class_of[t.generator_map[x]];
      if (t.class_map[c] < 0) t.class_map[c] = target;
      if (t.class_map[c] != target) throw InvariantError("transform splits a class");
    }
  }
  std::vector<int> seen = t.class_map;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() || seen.size() != pb.classes.size())
    throw InvariantError("class correspondence is not a bijection");
  return t;
}

RankTable table_of(const Analysis& a, const DifferentialOptions& opt) { return homology(differential(a, opt)); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row-reduced basis {(h11, h12), (0, h22)} of a lattice in Z^2.
struct Lattice2 {
  std::int64_t h11 = 0, h12 = 0, h22 = 0;

  explicit Lattice2(std::vector<std::pair<std::int64_t, std::int64_t>> v) {
    // Euclid on the first coordinate
    for (;;) {
      std::size_t piv = v.size();
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i].first != 0 && (piv == v.size() || std::abs(v[i].first) < std::abs(v[piv].first))) piv = i;
      if (piv == v.size()) break;
      bool done = true;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == piv || v[i].first == 0) continue;
        std::int64_t q = v[i].first / v[piv].first;
        v[i].first -= q * v[piv].first;
        v[i].second -= q * v[piv].second;
        if (v[i].first != 0) done = false;
      }
      if (done) {
        h11 = v[piv].first;
        h12 = v[piv].second;
        if (h11 < 0) h11 = -h11, h12 = -h12;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(piv));
        break;
      }
    }
    for (const auto& p : v) h22 = std::gcd(h22, std::abs(p.second));
    if (h22 != 0) h12 = ((h12 % h22) + h22) % h22;
  }

  std::pair<std::int64_t, std::int64_t> reduce(std::int64_t a, std::int64_t m) const {
    if (h11 != 0) {
      std::int64_t q = floor_div(a, h11);
      a -= q * h11;
      m -= q * h12;
    }
    if (h22 != 0) m = ((m % h22) + h22) % h22;
    return {a, m};
  }
};

using Entry = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

std::vector<Entry> canonical(const std::vector<Entry>& raw, const Lattice2& L) {
  if (raw.empty()) return {};
  std::vector<Entry> best;
  for (const auto& [oa, om, orank] : raw) {
    (void)orank;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> acc;
    for (const auto& [a, m, r] : raw) acc[L.reduce(a - oa, m - om)] += r;
    std::vector<Entry> cand;
    for (const auto& [k, r] : acc)
      if (r != 0) cand.emplace_back(k.first, k.second, r);
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

std::string entries_string(const std::vector<Entry>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto [a, m, r] = e[i];
    s += (i ? ", " : "") + std::string("(") + std::to_string(a) + ";" + std::to_string(m) + "):" + std::to_string(r);
  }
  return s + "}";
}

}  // namespace

std::optional<std::string> compare_relative_tables(const RankTable& t, const RankTable& u,
                                                   const std::vector<int>& class_map, Regrading g) {
  if (t.num_classes != u.num_classes || static_cast<int>(class_map.size()) != t.num_classes)
    return "class counts differ";
  std::vector<std::vector<Entry>> te(t.num_classes), ue(u.num_classes);
  for (const auto& [k, r] : t.entries) {
    auto [c, a, m] = k;
    te[c].emplace_back(g.aa * a + g.am * m, g.ma * a + g.mm * m, r);
  }
  for (const auto& [k, r] : u.entries) {
    auto [c, a, m] = k;
    ue[c].emplace_back(a, m, r);
  }
  for (int c = 0; c < t.num_classes; ++c) {
    int c2 = class_map[c];
    std::int64_t da = t.delta_a[c], dm = t.delta_m[c];
    Lattice2 L({{g.aa * da, g.ma * da}, {g.am * dm, g.mm * dm}, {u.delta_a[c2], 0}, {0, u.delta_m[c2]}});
    auto x = canonical(te[c], L);
    auto y = canonical(ue[c2], L);
    if (x != y)
      return "class " + std::to_string(c) + ": " + entries_string(x) + " vs class " + std::to_string(c2) + ": " +
             entries_string(y);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- transforms

std::pair<PointedDiagram, DiagramTransform> point_swap(const Analysis& a) {
  PointedDiagram e = swap_basepoints(a.diagram());
  Analysis b(e);
  return {e, match_generators(a, b, TransformKind::point_swap)};
}

std::pair<PointedDiagram, DiagramTransform> conjugate(const Analysis& a) {
  PointedDiagram e = conjugate_diagram(a.diagram());
  Analysis b(e);
  return {e, match_generators(a, b, TransformKind::conjugation)};
}

std::pair<PointedDiagram, DiagramTransform> knot_conjugate(const Analysis& a) {
  PointedDiagram e = conjugate_diagram(swap_basepoints(a.diagram()));
  Analysis b(e);
  return {e, match_generators(a, b, TransformKind::knot_conjugation)};
}

CheckReport point_swap_check(const Analysis& a, const DifferentialOptions& opt) {
  CheckReport rep{"point-swap", "pass"};
  PointedDiagram e = swap_basepoints(a.diagram());
  Analysis b(e);
  ChainComplexF2 c1 = differential(a, opt);
  ChainComplexF2 c2 = differential(b, opt);
  if (c1.names != c2.names || c1.boundary != c2.boundary)
    throw InvariantError("point-swap changed the differential");

  const auto& grp = a.h1();
  IntVec k = label_shift_pdk(a);
  IntVec k2 = label_shift_pdk(b);
  if (!grp.is_zero(grp.add(k, k2))) throw InvariantError("swapping z and w did not reverse [K]");

  SpincPartition p = partition(a);
  std::vector<int> relabel(p.classes.size(), -1);
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    IntVec target = grp.add(p.labels[c], k);
    for (std::size_t c2 = 0; c2 < p.classes.size(); ++c2)
      if (grp.is_zero(grp.add(p.labels[c2], grp.negate(target)))) relabel[c] = static_cast<int>(c2);
  }
  auto& w = rep.witnesses;
  w["identical_differential"] = true;
  w["generators"] = c1.names.size();
  std::size_t edges = 0;
  for (const auto& bd : c1.boundary) edges += bd.size();
  w["differential_terms"] = edges;
  w["pd_k"] = label_string(k);
  w["pd_k_after_swap"] = label_string(k2);
  w["class_labels"] = ojson::array();
  for (const auto& l : p.labels) w["class_labels"].push_back(label_string(l));
  // null: the shifted label belongs to no class that has generators
  w["relabel"] = ojson::array();
  for (int r : relabel) w["relabel"].push_back(r < 0 ? ojson(nullptr) : ojson(r));
  return rep;
}

CheckReport conjugation_check(const Analysis& a, const DifferentialOptions& opt) {
  CheckReport rep{"conjugation", "pass"};
  auto [e, tr] = conjugate(a);
  Analysis b(e);
  RankTable t = table_of(a, opt);
  RankTable u = table_of(b, opt);
  auto& w = rep.witnesses;
  w["involution"] = conjugate_diagram(e) == a.diagram();
  w["class_map"] = tr.class_map;
  w["regrading"] = "(A, M) -> (A, 2A - M)";
  auto mismatch = compare_relative_tables(t, u, tr.class_map, Regrading{1, 0, 2, -1});
  std::vector<std::int64_t> ta, tb;
  for (int c = 0; c < t.num_classes; ++c) ta.push_back(t.class_total(c));
  for (int c = 0; c < u.num_classes; ++c) tb.push_back(u.class_total(c));
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  w["class_totals"] = ta;
  w["class_totals_conjugate"] = tb;
  if (mismatch) {
    rep.status = "violation";
    w["mismatch"] = *mismatch;
  }
  if (!w["involution"].get<bool>() || ta != tb) rep.status = "violation";
  return rep;
}

CheckReport knot_conjugation_check(const Analysis& a, const DifferentialOptions& opt) {
  CheckReport rep{"knot-conjugation", "pass"};
  auto& w = rep.witnesses;
  const auto& grp = a.h1();
  SpincPartition p = partition(a);
  RankTable t = table_of(a, opt);

  // diagram level: the composite is an involution and keeps the tables
  auto [e, tr] = knot_conjugate(a);
  Analysis b(e);
  PointedDiagram back = conjugate_diagram(swap_basepoints(e));
  w["involution"] = back == a.diagram();
  RankTable u = table_of(b, opt);
  auto mismatch = compare_relative_tables(t, u, tr.class_map, Regrading{-1, 0, 0, -1});
  if (mismatch) w["table_mismatch"] = *mismatch;

  IntVec k = label_shift_pdk(a);
  w["pd_k"] = label_string(k);
  std::vector<int> live;
  for (int c = 0; c < t.num_classes; ++c)
    if (t.class_total(c) != 0) live.push_back(c);

  auto class_with_label = [&](const IntVec& l) {
    for (std::size_t c = 0; c < p.labels.size(); ++c)
      if (grp.is_zero(grp.add(p.labels[c], grp.negate(l)))) return static_cast<int>(c);
    return -1;
  };

  std::vector<IntVec> candidates;
  for (std::size_t i = 0; i < live.size(); ++i)
    for (std::size_t j = i; j < live.size(); ++j) {
      IntVec c = grp.add(p.labels[live[i]], p.labels[live[j]]);
      if (!grp.divisible_by_two(grp.add(c, grp.negate(k)))) continue;
      if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
    }
  std::sort(candidates.begin(), candidates.end());
  w["candidates"] = ojson::array();
  for (const auto& c : candidates) w["candidates"].push_back(label_string(c));

  bool found = live.empty();
  if (live.empty()) w["note"] = "all ranks vanish";
  for (const auto& c : candidates) {
    std::vector<int> image(p.classes.size(), -1);
    bool ok = true;
    for (int x : live) {
      int y = class_with_label(grp.add(c, grp.negate(p.labels[x])));
      if (y < 0 || t.class_total(y) != t.class_total(x)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    found = true;
    for (std::size_t x = 0; x < p.classes.size(); ++x)
      image[x] = class_with_label(grp.add(c, grp.negate(p.labels[x])));
    std::vector<int> fixed;
    for (std::size_t x = 0; x < image.size(); ++x)
      if (image[x] == static_cast<int>(x)) fixed.push_back(static_cast<int>(x));
    w["center"] = label_string(c);
    w["pairing"] = image;
    w["fixed_classes"] = fixed;
    break;
  }
  if (!found || !w["involution"].get<bool>() || mismatch) rep.status = "violation";
  return rep;
}

CheckReport evenness_check(const Analysis& a, const DifferentialOptions& opt) {
  CheckReport rep{"evenness", "pass"};
  const auto& grp = a.h1();
  IntVec k = label_shift_pdk(a);
  bool applicable = !grp.divisible_by_two(k);
  auto& w = rep.witnesses;
  w["h1"] = grp.describe();
  w["pd_k"] = label_string(k);
  w["applicable"] = applicable;
  if (!applicable) {
    rep.status = "inapplicable";
    return rep;
  }
  std::int64_t total = table_of(a, opt).total();
  w["total_rank"] = total;
  w["even"] = total % 2 == 0;
  if (total % 2 != 0) rep.status = "violation";
  return rep;
}

// ---------------------------------------------------------------- chern

namespace {

// Regions on the left (+) and right (-) of every arc.
std::vector<std::array<int, 2>> sides_of(const PointedDiagram& d) {
  std::vector<std::array<int, 2>> s(d.arcs.size(), {-1, -1});
  for (std::size_t r = 0; r < d.regions.size(); ++r)
    for (const auto& comp : d.regions[r].boundary)
      for (auto sa : comp) s[sa.arc][sa.sign > 0 ? 0 : 1] = static_cast<int>(r);
  return s;
}

bool in_p(const DomainVector& p, int r) { return p[r] == 1; }

}  // namespace

int closure_euler_char(const PointedDiagram& d, const DomainVector& p) {
  int chi = 0;
  for (std::size_t r = 0; r < d.regions.size(); ++r)
    if (in_p(p, static_cast<int>(r))) chi += d.regions[r].euler_char;
  auto sides = sides_of(d);
  for (const auto& s : sides)
    if (in_p(p, s[0]) || in_p(p, s[1])) --chi;
  for (const auto& pt : d.points)
    if (std::any_of(pt.quadrants.begin(), pt.quadrants.end(), [&](int r) { return in_p(p, r); })) ++chi;
  return chi;
}

ChernValue chern_eval(const PointedDiagram& d, const DomainVector& p, const Generator& x) {
  if (p.size() != d.regions.size()) throw InputError("domain has the wrong number of regions");
  for (const auto& m : p)
    if (m != 0 && m != 1) throw InputError("domain multiplicities must be 0 or 1");
  if (std::all_of(p.begin(), p.end(), [](const Int& m) { return m.is_zero(); }))
    throw InputError("domain is empty");
  DomainSystem ds(d);
  if (!ds.is_periodic(p)) throw InputError("domain is not periodic");
  for (int z : d.z)
    if (in_p(p, z)) throw InputError("basepoint z lies inside the domain");

  ChernValue v;
  v.euler_char = closure_euler_char(d, p);
  if (v.euler_char % 2 != 0) throw InputError("domain has odd Euler characteristic");
  if (v.euler_char > 0) throw InputError("domain has positive Euler characteristic");
  v.surface_genus = -v.euler_char / 2;
  for (int pt : x.points) {
    const auto& q = d.points[pt].quadrants;
    if (std::all_of(q.begin(), q.end(), [&](int r) { return in_p(p, r); })) ++v.interior_points;
  }
  auto sides = sides_of(d);
  std::vector<bool> on_boundary(d.alphas.size() + d.betas.size(), false);
  for (std::size_t a = 0; a < d.arcs.size(); ++a)
    if (in_p(p, sides[a][0]) != in_p(p, sides[a][1])) {
      const Arc& arc = d.arcs[a];
      on_boundary[(arc.kind == CurveKind::alpha ? 0 : d.alphas.size()) + arc.curve] = true;
    }
  v.boundary_curves = static_cast<int>(std::count(on_boundary.begin(), on_boundary.end(), true));
  v.value = 2 - 2 * v.surface_genus + 2 * v.interior_points;
  v.genus_hypothesis = d.genus > 2 * v.surface_genus;
  return v;
}

std::vector<DomainVector> zero_one_periodic_domains(const PointedDiagram& d, std::size_t max_regions) {
  std::vector<int> free;
  for (std::size_t r = 0; r < d.regions.size(); ++r)
    if (std::find(d.z.begin(), d.z.end(), static_cast<int>(r)) == d.z.end()) free.push_back(static_cast<int>(r));
  if (free.size() > max_regions)
    throw BudgetError("too many regions for an exhaustive 0/1 domain search");
  DomainSystem ds(d);
  std::vector<DomainVector> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free.size()); ++mask) {
    DomainVector p(d.regions.size());
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) p[free[i]] = 1;
    if (ds.is_periodic(p)) out.push_back(p);
  }
  return out;
}

CheckReport chern_constancy(const Analysis& a, const DomainVector& p) {
  CheckReport rep{"chern-constancy", "pass"};
  const auto& gens = a.generators();
  SpincPartition part = partition(a);
  auto& w = rep.witnesses;
  w["classes"] = ojson::array();
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    std::vector<std::string> values;
    Int first = 0;
    bool constant = true;
    for (std::size_t i = 0; i < part.classes[c].size(); ++i) {
      ChernValue v = chern_eval(a.diagram(), p, gens[part.classes[c][i]]);
      if (i == 0) first = v.value;
      constant = constant && v.value == first;
      values.push_back(v.value.str());
    }
    ojson jc;
    jc["class"] = c;
    jc["values"] = values;
    jc["constant"] = constant;
    w["classes"].push_back(jc);
    if (!constant) rep.status = "violation";
  }
  return rep;
}

CheckReport adjunction_evaluate(const std::vector<ClassPairing>& classes, int surface_genus, AdjunctionCase c) {
  CheckReport rep{"adjunction", "pass"};
  const Int bound = 2 * surface_genus - 2;
  auto& w = rep.witnesses;
  w["case"] = c == AdjunctionCase::one_inside ? "one basepoint inside" : "both basepoints outside";
  w["surface_genus"] = surface_genus;
  w["bound"] = bound.str();
  w["classes"] = ojson::array();
  for (const auto& cp : classes) {
    if (cp.rank == 0) continue;
    Int lhs = c == AdjunctionCase::one_inside ? Int(-cp.value) : Int(abs(cp.value));
    bool ok = lhs <= bound;
    ojson jc;
    jc["class"] = cp.class_id;
    jc["rank"] = cp.rank;
    jc["pairing"] = cp.value.str();
    jc["ok"] = ok;
    w["classes"].push_back(jc);
    if (!ok) rep.status = "violation";
  }
  return rep;
}

CheckReport adjunction_report(const Analysis& a, const DomainVector& p, const RankTable& t) {
  const auto& d = a.diagram();
  const auto& gens = a.generators();
  SpincPartition part = partition(a);
  bool w_inside = std::any_of(d.w.begin(), d.w.end(), [&](int r) { return p[r] == 1; });
  std::vector<ClassPairing> pairs;
  ChernValue probe{};
  bool have_probe = false;
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    ClassPairing cp;
    cp.class_id = static_cast<int>(c);
    cp.rank = t.class_total(static_cast<int>(c));
    ChernValue v = chern_eval(d, p, gens[part.classes[c].front()]);
    cp.value = v.value;
    if (!have_probe) probe = v, have_probe = true;
    pairs.push_back(cp);
  }
  if (!have_probe) {
    // no generators: the surface data still comes from P
    probe.euler_char = closure_euler_char(d, p);
    probe.surface_genus = -probe.euler_char / 2;
    probe.genus_hypothesis = d.genus > 2 * probe.surface_genus;
  }
  CheckReport rep = adjunction_evaluate(pairs, probe.surface_genus,
                                        w_inside ? AdjunctionCase::one_inside : AdjunctionCase::both_outside);
  rep.witnesses["genus_hypothesis"] = probe.genus_hypothesis;
  return rep;
}

bool triangle_rank_consistency(std::int64_t a, std::int64_t b, std::int64_t c) {
  return a <= b + c && b <= a + c && c <= a + b;
}

}  // namespace hfk
