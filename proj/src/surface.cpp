#include "hfk/surface.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <boost/integer/common_factor.hpp>

#include "hfk/errors.hpp"

namespace hfk {

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

// Region on the left (+arc) and on the right (-arc) of every arc.
std::vector<std::array<int, 2>> arc_sides(const PointedDiagram& d) {
  std::vector<std::array<int, 2>> s(d.arcs.size(), {-1, -1});
  for (std::size_t r = 0; r < d.regions.size(); ++r)
    for (const auto& comp : d.regions[r].boundary)
      for (auto sa : comp) s[sa.arc][sa.sign > 0 ? 0 : 1] = static_cast<int>(r);
  return s;
}

}  // namespace

SurfaceComplex build_surface_complex(const PointedDiagram& d) {
  SurfaceComplex sc;
  const int P = static_cast<int>(d.points.size());
  const int R = static_cast<int>(d.regions.size());
  sc.num_vertices = P + R;
  for (const auto& a : d.arcs) sc.edges.push_back({a.from, a.to});
  sc.spoke.resize(R);
  for (int r = 0; r < R; ++r) {
    const Region& reg = d.regions[r];
    for (const auto& comp : reg.boundary) {
      sc.spoke[r].push_back(static_cast<int>(sc.edges.size()));
      sc.edges.push_back({P + r, start_point(d, comp.front())});
    }
    int handles = (2 - static_cast<int>(reg.boundary.size()) - reg.euler_char) / 2;
    for (int h = 0; h < 2 * handles; ++h) sc.edges.push_back({P + r, P + r});
  }
  const int E = static_cast<int>(sc.edges.size());
  sc.face_boundary.assign(R, IntVec(E));
  for (int r = 0; r < R; ++r)
    for (const auto& comp : d.regions[r].boundary)
      for (auto s : comp) sc.face_boundary[r][s.arc] += s.sign;

  // spanning forest of the 1-skeleton
  UnionFind uf(sc.num_vertices);
  std::vector<bool> tree(E, false);
  for (int e = 0; e < E; ++e) {
    int a = uf.find(sc.edges[e].tail), b = uf.find(sc.edges[e].head);
    if (a != b) {
      uf.unite(a, b);
      tree[e] = true;
    }
  }
  sc.b0 = 0;
  for (int v = 0; v < sc.num_vertices; ++v) sc.b0 += (uf.find(v) == v);
  std::vector<int> cotree;
  for (int e = 0; e < E; ++e)
    if (!tree[e]) cotree.push_back(e);
  const int Z = static_cast<int>(cotree.size());  // rank of the cycle group

  // boundary map of the 2-cells expressed in cotree coordinates
  ZMatrix M(Z, R);
  for (int i = 0; i < Z; ++i)
    for (int r = 0; r < R; ++r) M(i, r) = sc.face_boundary[r][cotree[i]];
  SmithForm s = smith_normal_form(M);
  const int rk = static_cast<int>(s.rank);
  sc.b2 = R - rk;
  sc.b1 = Z - rk;
  for (int i = 0; i < rk; ++i)
    if (s.diag[i] != 1) sc.b1 = -1;  // torsion: not an orientable closed surface

  sc.edge_class.assign(E, IntVec(std::max(sc.b1, 0)));
  if (sc.b1 > 0)
    for (int i = 0; i < Z; ++i)
      for (int k = 0; k < sc.b1; ++k) sc.edge_class[cotree[i]][k] = s.U(rk + k, i);
  return sc;
}

IntVec cycle_class(const SurfaceComplex& sc, const IntVec& chain) {
  IntVec out(sc.b1 > 0 ? sc.b1 : 0);
  for (std::size_t e = 0; e < chain.size(); ++e) {
    if (chain[e].is_zero()) continue;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += chain[e] * sc.edge_class[e][k];
  }
  return out;
}

namespace {

IntVec curve_chain(const PointedDiagram&, const SurfaceComplex& sc, const Curve& c) {
  IntVec ch(sc.edges.size());
  for (int a : c.arcs) ch[a] += 1;
  return ch;
}

}  // namespace

int curve_class_rank(const PointedDiagram& d, const SurfaceComplex& sc, CurveKind kind) {
  const auto& set = kind == CurveKind::alpha ? d.alphas : d.betas;
  std::vector<IntVec> cols;
  for (const auto& c : set) cols.push_back(cycle_class(sc, curve_chain(d, sc, c)));
  if (cols.empty()) return 0;
  return static_cast<int>(smith_normal_form(ZMatrix::from_columns(cols, sc.b1)).rank);
}

std::vector<int> complement_components(const PointedDiagram& d, CurveKind kind) {
  const int R = static_cast<int>(d.regions.size());
  UnionFind uf(R);
  auto sides = arc_sides(d);
  for (std::size_t a = 0; a < d.arcs.size(); ++a)
    if (d.arcs[a].kind != kind && sides[a][0] >= 0 && sides[a][1] >= 0) uf.unite(sides[a][0], sides[a][1]);
  std::vector<int> label(R, -1), root_label(R, -1);
  int next = 0;
  for (int r = 0; r < R; ++r) {
    int root = uf.find(r);
    if (root_label[root] < 0) root_label[root] = next++;
    label[r] = root_label[root];
  }
  return label;
}

SurfaceH1 surface_h1(const PointedDiagram& d) {
  require_valid(d);
  SurfaceComplex sc = build_surface_complex(d);
  SurfaceH1 h;
  h.rank = sc.b1;
  for (const auto& c : d.alphas) h.alpha_classes.push_back(cycle_class(sc, curve_chain(d, sc, c)));
  for (const auto& c : d.betas) h.beta_classes.push_back(cycle_class(sc, curve_chain(d, sc, c)));
  return h;
}

// ---------------------------------------------------------------- H1(Y)

AbelianGroup::AbelianGroup(const ZMatrix& relations, std::size_t ambient_rank) : ambient_(ambient_rank) {
  SmithForm s = smith_normal_form(relations);
  U_ = s.U;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    Int f = i < s.rank ? s.diag[i] : Int(0);
    if (f == 1) continue;
    factors_.push_back(f);
    rows_.push_back(i);
  }
}

IntVec AbelianGroup::normalize(IntVec v) const {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (factors_[i] > 0) {
      v[i] %= factors_[i];
      if (v[i] < 0) v[i] += factors_[i];
    }
  return v;
}

IntVec AbelianGroup::reduce(const IntVec& ambient) const {
  IntVec y = U_.mul(ambient);
  IntVec v(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) v[k] = y[rows_[k]];
  return normalize(v);
}

IntVec AbelianGroup::add(const IntVec& a, const IntVec& b) const {
  IntVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i] + b[i];
  return normalize(v);
}

IntVec AbelianGroup::negate(const IntVec& a) const {
  IntVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = -a[i];
  return normalize(v);
}

bool AbelianGroup::is_zero(const IntVec& a) const {
  for (const auto& x : normalize(a))
    if (!x.is_zero()) return false;
  return true;
}

bool AbelianGroup::divisible_by_two(const IntVec& a) const {
  IntVec v = normalize(a);
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool odd_factor = factors_[i] > 0 && (factors_[i] % 2) == 1;
    if (!odd_factor && (v[i] % 2) != 0) return false;
  }
  return true;
}

bool AbelianGroup::finite() const {
  for (const auto& f : factors_)
    if (f.is_zero()) return false;
  return true;
}

Int AbelianGroup::order() const {
  if (!finite()) return 0;
  Int n = 1;
  for (const auto& f : factors_) n *= f;
  return n;
}

std::vector<IntVec> AbelianGroup::elements() const {
  if (!finite()) throw InvariantError("cannot list the elements of an infinite group");
  std::vector<IntVec> out{IntVec(factors_.size())};
  for (std::size_t i = factors_.size(); i-- > 0;) {
    std::vector<IntVec> next;
    for (const auto& e : out)
      for (Int k = 0; k < factors_[i]; ++k) {
        IntVec v = e;
        v[i] = k;
        next.push_back(v);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int AbelianGroup::element_order(const IntVec& a) const {
  IntVec v = normalize(a);
  Int ord = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (factors_[i].is_zero()) return 0;
    Int o = factors_[i] / boost::integer::gcd(factors_[i], v[i]);
    ord = boost::integer::lcm(ord, o);
  }
  return ord;
}

std::string AbelianGroup::describe() const {
  if (factors_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " + ";
    s += factors_[i].is_zero() ? "Z" : "Z/" + factors_[i].str();
  }
  return s;
}

std::string AbelianGroup::element_string(const IntVec& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += e[i].str();
  }
  return s + ")";
}

AbelianGroup ambient_h1(const PointedDiagram& d) {
  SurfaceH1 h = surface_h1(d);
  std::vector<IntVec> cols = h.alpha_classes;
  cols.insert(cols.end(), h.beta_classes.begin(), h.beta_classes.end());
  return AbelianGroup(ZMatrix::from_columns(cols, h.rank), h.rank);
}

// ---------------------------------------------------------------- knot data

namespace {

// Walk a boundary component from its first vertex through its first `count` arcs.
IntVec walk_prefix(std::size_t nedges, const std::vector<SignedArc>& comp, std::size_t count) {
  IntVec ch(nedges);
  for (std::size_t t = 0; t < count; ++t) ch[comp[t].arc] += comp[t].sign;
  return ch;
}

// (component, position) of the signed arc in region r, or (-1, -1).
std::pair<int, int> locate(const Region& reg, int arc, int sign) {
  for (std::size_t i = 0; i < reg.boundary.size(); ++i)
    for (std::size_t t = 0; t < reg.boundary[i].size(); ++t)
      if (reg.boundary[i][t].arc == arc && reg.boundary[i][t].sign == sign)
        return {static_cast<int>(i), static_cast<int>(t)};
  return {-1, -1};
}

}  // namespace

IntVec crossing_chain(const PointedDiagram& d, const SurfaceComplex& sc, int from, int to, int arc) {
  const Region& a = d.regions[from];
  const Region& b = d.regions[to];
  int sign = locate(a, arc, +1).first >= 0 && locate(b, arc, -1).first >= 0 ? +1 : -1;
  auto [ca, ta] = locate(a, arc, sign);
  auto [cb, tb] = locate(b, arc, -sign);
  if (ca < 0 || cb < 0) throw InvariantError("arc does not separate the given regions");
  // Both walks stop at from(arc), at the two corners flanking the arc, so the
  // chain is homologous to a path crossing the arc once.
  const std::size_t E = sc.edges.size();
  std::size_t na = sign > 0 ? ta : ta + 1;
  std::size_t nb = sign > 0 ? tb + 1 : tb;
  IntVec ch(E);
  ch[sc.spoke[from][ca]] += 1;
  IntVec wa = walk_prefix(E, a.boundary[ca], na);
  IntVec wb = walk_prefix(E, b.boundary[cb], nb);
  for (std::size_t e = 0; e < E; ++e) ch[e] += wa[e] - wb[e];
  ch[sc.spoke[to][cb]] -= 1;
  return ch;
}

namespace {

// Shortest path from `src` to any region in `targets`, crossing arcs of `kind` only.
std::vector<std::pair<int, int>> region_path(const PointedDiagram& d, int src, const std::vector<int>& targets,
                                             CurveKind kind, int route) {
  const int R = static_cast<int>(d.regions.size());
  auto sides = arc_sides(d);
  std::vector<std::vector<std::pair<int, int>>> adj(R);  // (arc, neighbour)
  for (std::size_t a = 0; a < d.arcs.size(); ++a) {
    if (d.arcs[a].kind != kind) continue;
    int l = sides[a][0], r = sides[a][1];
    adj[l].emplace_back(static_cast<int>(a), r);
    adj[r].emplace_back(static_cast<int>(a), l);
  }
  std::vector<std::pair<int, int>> prev(R, {-1, -1});
  std::vector<bool> seen(R, false);
  std::deque<int> q{src};
  seen[src] = true;
  int hit = -1;
  while (!q.empty()) {
    int r = q.front();
    q.pop_front();
    if (std::find(targets.begin(), targets.end(), r) != targets.end()) {
      hit = r;
      break;
    }
    const auto& nb = adj[r];
    for (std::size_t k = 0; k < nb.size(); ++k) {
      auto [arc, s] = nb[(k + route) % nb.size()];
      if (seen[s]) continue;
      seen[s] = true;
      prev[s] = {r, arc};
      q.push_back(s);
    }
  }
  if (hit < 0) throw InputError("diagram is not knot-adapted: no path between basepoints");
  std::vector<std::pair<int, int>> steps;  // (region entered from, arc)
  for (int r = hit; r != src; r = prev[r].first) steps.emplace_back(prev[r].first, prev[r].second);
  std::reverse(steps.begin(), steps.end());
  return steps;
}

}  // namespace

IntVec knot_chain(const PointedDiagram& d, const SurfaceComplex& sc, int route) {
  const std::size_t E = sc.edges.size();
  IntVec total(E);
  auto add_path = [&](int src, const std::vector<int>& targets, CurveKind kind) {
    auto steps = region_path(d, src, targets, kind, route);
    auto sides = arc_sides(d);
    for (auto [r, arc] : steps) {
      int next = sides[arc][0] == r ? sides[arc][1] : sides[arc][0];
      IntVec ch = crossing_chain(d, sc, r, next, arc);
      for (std::size_t e = 0; e < E; ++e) total[e] += ch[e];
    }
  };
  // w to z in the complement of alpha (crossing beta), then z to w crossing alpha
  auto alpha_comp = complement_components(d, CurveKind::alpha);
  auto beta_comp = complement_components(d, CurveKind::beta);
  for (int w : d.w) {
    std::vector<int> t;
    for (int z : d.z)
      if (alpha_comp[z] == alpha_comp[w]) t.push_back(z);
    add_path(w, t, CurveKind::beta);
  }
  for (int z : d.z) {
    std::vector<int> t;
    for (int w : d.w)
      if (beta_comp[z] == beta_comp[w]) t.push_back(w);
    add_path(z, t, CurveKind::alpha);
  }
  return total;
}

IntVec recover_knot_data(const PointedDiagram& d) {
  AbelianGroup grp = ambient_h1(d);
  SurfaceComplex sc = build_surface_complex(d);
  return grp.reduce(cycle_class(sc, knot_chain(d, sc)));
}

}  // namespace hfk
