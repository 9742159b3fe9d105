#include "hfk/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hfk/errors.hpp"
#include "hfk/surface.hpp"

namespace hfk {

using nlohmann::json;

const char* quadrant_name(int q) {
  static const char* names[] = {"NE", "NW", "SW", "SE"};
  return (q >= 0 && q < 4) ? names[q] : "?";
}

namespace {

int find_id(const auto& items, const std::string& id) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].id == id) return static_cast<int>(i);
  return -1;
}

int quadrant_from_name(const std::string& s) {
  for (int q = 0; q < 4; ++q)
    if (s == quadrant_name(q)) return q;
  return -1;
}

}  // namespace

int PointedDiagram::point_index(const std::string& id) const { return find_id(points, id); }
int PointedDiagram::region_index(const std::string& id) const { return find_id(regions, id); }
int PointedDiagram::arc_index(const std::string& id) const { return find_id(arcs, id); }
int PointedDiagram::domain_index(const std::string& id) const { return find_id(domains, id); }

int PointedDiagram::corner_count(int r) const {
  int n = 0;
  for (const auto& p : points)
    for (int q : p.quadrants) n += (q == r);
  return n;
}

bool PointedDiagram::operator==(const PointedDiagram& o) const {
  auto same_points = [](const IntersectionPoint& a, const IntersectionPoint& b) {
    return a.id == b.id && a.alpha == b.alpha && a.beta == b.beta && a.sign == b.sign &&
           a.quadrants == b.quadrants;
  };
  auto same_arcs = [](const Arc& a, const Arc& b) {
    return a.id == b.id && a.from == b.from && a.to == b.to && a.kind == b.kind &&
           a.curve == b.curve;
  };
  auto same_curves = [](const Curve& a, const Curve& b) {
    return a.kind == b.kind && a.index == b.index && a.arcs == b.arcs;
  };
  auto same_regions = [](const Region& a, const Region& b) {
    return a.id == b.id && a.euler_char == b.euler_char && a.boundary == b.boundary;
  };
  return genus == o.genus && z == o.z && w == o.w && allow_coincident == o.allow_coincident &&
         domains == o.domains &&
         std::equal(points.begin(), points.end(), o.points.begin(), o.points.end(), same_points) &&
         std::equal(arcs.begin(), arcs.end(), o.arcs.begin(), o.arcs.end(), same_arcs) &&
         std::equal(alphas.begin(), alphas.end(), o.alphas.begin(), o.alphas.end(), same_curves) &&
         std::equal(betas.begin(), betas.end(), o.betas.begin(), o.betas.end(), same_curves) &&
         std::equal(regions.begin(), regions.end(), o.regions.begin(), o.regions.end(),
                    same_regions);
}

int start_point(const PointedDiagram& d, SignedArc s) {
  const Arc& a = d.arcs[s.arc];
  return s.sign > 0 ? a.from : a.to;
}

int end_point(const PointedDiagram& d, SignedArc s) {
  const Arc& a = d.arcs[s.arc];
  return s.sign > 0 ? a.to : a.from;
}

std::vector<PointArcs> point_arcs(const PointedDiagram& d) {
  std::vector<PointArcs> out(d.points.size());
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const Arc& a = d.arcs[i];
    if (a.curve < 0 || a.from < 0 || a.to < 0) continue;
    int ai = static_cast<int>(i);
    if (a.kind == CurveKind::alpha) {
      out[a.from].alpha_out = ai;
      out[a.to].alpha_in = ai;
    } else {
      out[a.from].beta_out = ai;
      out[a.to].beta_in = ai;
    }
  }
  return out;
}

int junction_quadrant(const PointedDiagram& d, const PointArcs& pa, int point, SignedArc in,
                      SignedArc out) {
  // ray directions: 0 east, 1 north, 2 west, 3 south
  const int sign = d.points[point].sign;
  const int north_arc = sign > 0 ? pa.beta_out : pa.beta_in;
  const int south_arc = sign > 0 ? pa.beta_in : pa.beta_out;
  auto incoming = [&](SignedArc s) {
    if (s.arc == pa.alpha_in && s.sign > 0) return 2;
    if (s.arc == pa.alpha_out && s.sign < 0) return 0;
    if (sign > 0) {
      if (s.arc == north_arc && s.sign < 0) return 1;
      if (s.arc == south_arc && s.sign > 0) return 3;
    } else {
      if (s.arc == north_arc && s.sign > 0) return 1;
      if (s.arc == south_arc && s.sign < 0) return 3;
    }
    return -1;
  };
  auto outgoing = [&](SignedArc s) {
    if (s.arc == pa.alpha_out && s.sign > 0) return 0;
    if (s.arc == pa.alpha_in && s.sign < 0) return 2;
    if (sign > 0) {
      if (s.arc == north_arc && s.sign > 0) return 1;
      if (s.arc == south_arc && s.sign < 0) return 3;
    } else {
      if (s.arc == north_arc && s.sign < 0) return 1;
      if (s.arc == south_arc && s.sign > 0) return 3;
    }
    return -1;
  };
  int from = incoming(in), to = outgoing(out);
  if (from < 0 || to < 0) return -1;
  // arriving along ray `from`, leaving along the next ray clockwise keeps the
  // region on the left: N->E is NE, W->N is NW, S->W is SW, E->S is SE.
  if (from == 1 && to == 0) return NE;
  if (from == 2 && to == 1) return NW;
  if (from == 3 && to == 2) return SW;
  if (from == 0 && to == 3) return SE;
  return -1;
}

// ---------------------------------------------------------------- parsing

namespace {

std::vector<std::string> as_id_list(const json& j) {
  std::vector<std::string> out;
  if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else if (j.is_array()) {
    for (const auto& e : j) out.push_back(e.get<std::string>());
  } else {
    throw InputError("basepoint entry must be a region id or a list of ids");
  }
  return out;
}

}  // namespace

PointedDiagram parse_diagram_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  PointedDiagram d;
  auto& issues = d.load_issues;
  try {
    for (const char* key : {"genus", "points", "arcs", "curves", "regions", "basepoints"})
      if (!j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
    d.genus = j.at("genus").get<int>();
    if (j.contains("description")) d.description = j.at("description").get<std::string>();

    std::set<std::string> seen;
    auto note_dup = [&](const std::string& kind, const std::string& id) {
      if (!seen.insert(kind + ":" + id).second) issues.push_back("duplicate " + kind + " id '" + id + "'");
    };

    for (const auto& jr : j.at("regions")) {
      Region r;
      r.id = jr.at("id").get<std::string>();
      note_dup("region", r.id);
      r.euler_char = jr.value("euler_char", 1);
      d.regions.push_back(r);
    }
    for (const auto& jp : j.at("points")) {
      IntersectionPoint p;
      p.id = jp.at("id").get<std::string>();
      note_dup("point", p.id);
      p.alpha = jp.at("alpha").get<int>();
      p.beta = jp.at("beta").get<int>();
      p.sign = jp.value("sign", 1);
      if (p.sign != 1 && p.sign != -1) issues.push_back("point '" + p.id + "': sign must be +1 or -1");
      const auto& q = jp.at("quadrants");
      if (!q.is_array() || q.size() != 4) {
        issues.push_back("point '" + p.id + "': quadrants must list exactly 4 regions");
      } else {
        for (int k = 0; k < 4; ++k) {
          auto rid = q[k].get<std::string>();
          p.quadrants[k] = d.region_index(rid);
          if (p.quadrants[k] < 0)
            issues.push_back("point '" + p.id + "': unknown region '" + rid + "'");
        }
      }
      d.points.push_back(p);
    }
    for (const auto& ja : j.at("arcs")) {
      Arc a;
      a.id = ja.at("id").get<std::string>();
      note_dup("arc", a.id);
      auto f = ja.at("from").get<std::string>(), t = ja.at("to").get<std::string>();
      a.from = d.point_index(f);
      a.to = d.point_index(t);
      if (a.from < 0) issues.push_back("arc '" + a.id + "': unknown point '" + f + "'");
      if (a.to < 0) issues.push_back("arc '" + a.id + "': unknown point '" + t + "'");
      d.arcs.push_back(a);
    }
    for (const auto& jc : j.at("curves")) {
      Curve c;
      auto kind = jc.at("kind").get<std::string>();
      if (kind == "alpha") {
        c.kind = CurveKind::alpha;
      } else if (kind == "beta") {
        c.kind = CurveKind::beta;
      } else {
        throw InputError("curve kind must be 'alpha' or 'beta', got '" + kind + "'");
      }
      c.index = jc.at("index").get<int>();
      for (const auto& e : jc.at("arcs")) {
        auto aid = e.get<std::string>();
        int ai = d.arc_index(aid);
        if (ai < 0) {
          issues.push_back("curve " + kind + std::to_string(c.index) + ": unknown arc '" + aid + "'");
          continue;
        }
        c.arcs.push_back(ai);
      }
      (c.kind == CurveKind::alpha ? d.alphas : d.betas).push_back(c);
    }
    auto by_index = [](const Curve& a, const Curve& b) { return a.index < b.index; };
    std::stable_sort(d.alphas.begin(), d.alphas.end(), by_index);
    std::stable_sort(d.betas.begin(), d.betas.end(), by_index);
    for (auto* set : {&d.alphas, &d.betas})
      for (const auto& c : *set)
        for (int ai : c.arcs) {
          Arc& a = d.arcs[ai];
          if (a.curve >= 0) {
            issues.push_back("arc '" + a.id + "' belongs to more than one curve");
            continue;
          }
          a.kind = c.kind;
          a.curve = c.index;
        }

    std::size_t ri = 0;
    for (const auto& jr : j.at("regions")) {
      Region& r = d.regions[ri++];
      for (const auto& comp : jr.at("boundary")) {
        std::vector<SignedArc> cyc;
        for (const auto& e : comp) {
          auto s = e.get<std::string>();
          SignedArc sa;
          std::string name = s;
          if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            sa.sign = s[0] == '-' ? -1 : 1;
            name = s.substr(1);
          }
          sa.arc = d.arc_index(name);
          if (sa.arc < 0) {
            issues.push_back("region '" + r.id + "': unknown arc '" + name + "'");
            continue;
          }
          cyc.push_back(sa);
        }
        r.boundary.push_back(cyc);
      }
      if (jr.contains("corners")) {
        r.has_declared_corners = true;
        for (const auto& c : jr.at("corners")) {
          auto pid = c.at(0).get<std::string>();
          auto qn = c.at(1).get<std::string>();
          int pi = d.point_index(pid), q = quadrant_from_name(qn);
          if (pi < 0 || q < 0) {
            issues.push_back("region '" + r.id + "': bad corner (" + pid + ", " + qn + ")");
            continue;
          }
          r.declared_corners.emplace_back(pi, q);
        }
      }
    }

    const auto& jb = j.at("basepoints");
    for (const auto& id : as_id_list(jb.at("z"))) {
      int r = d.region_index(id);
      if (r < 0) issues.push_back("basepoint z: unknown region '" + id + "'");
      d.z.push_back(r);
    }
    for (const auto& id : as_id_list(jb.at("w"))) {
      int r = d.region_index(id);
      if (r < 0) issues.push_back("basepoint w: unknown region '" + id + "'");
      d.w.push_back(r);
    }
    d.allow_coincident = jb.value("allow_coincident", false);

    if (j.contains("domains"))
      for (const auto& jd : j.at("domains")) {
        NamedDomain nd;
        nd.id = jd.at("id").get<std::string>();
        note_dup("domain", nd.id);
        nd.multiplicity.assign(d.regions.size(), 0);
        for (const auto& [rid, m] : jd.at("multiplicities").items()) {
          int r = d.region_index(rid);
          if (r < 0) {
            issues.push_back("domain '" + nd.id + "': unknown region '" + rid + "'");
            continue;
          }
          nd.multiplicity[r] = m.get<int>();
        }
        d.domains.push_back(std::move(nd));
      }
  } catch (const json::exception& e) {
    throw InputError(std::string("bad diagram structure: ") + e.what());
  }
  return d;
}

std::string diagram_to_json(const PointedDiagram& d) {
  // ordered_json keeps the documented key order in emitted files
  nlohmann::ordered_json j;
  if (!d.description.empty()) j["description"] = d.description;
  j["genus"] = d.genus;
  auto& pts = j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : d.points) {
    nlohmann::ordered_json jp;
    jp["id"] = p.id;
    jp["alpha"] = p.alpha;
    jp["beta"] = p.beta;
    jp["sign"] = p.sign;
    auto q = nlohmann::ordered_json::array();
    for (int r : p.quadrants) q.push_back(d.regions[r].id);
    jp["quadrants"] = q;
    pts.push_back(jp);
  }
  auto& arcs = j["arcs"] = nlohmann::ordered_json::array();
  for (const auto& a : d.arcs)
    arcs.push_back({{"id", a.id}, {"from", d.points[a.from].id}, {"to", d.points[a.to].id}});
  auto& curves = j["curves"] = nlohmann::ordered_json::array();
  for (const auto* set : {&d.alphas, &d.betas})
    for (const auto& c : *set) {
      nlohmann::ordered_json jc;
      jc["kind"] = c.kind == CurveKind::alpha ? "alpha" : "beta";
      jc["index"] = c.index;
      auto l = nlohmann::ordered_json::array();
      for (int a : c.arcs) l.push_back(d.arcs[a].id);
      jc["arcs"] = l;
      curves.push_back(jc);
    }
  auto& regs = j["regions"] = nlohmann::ordered_json::array();
  for (const auto& r : d.regions) {
    nlohmann::ordered_json jr;
    jr["id"] = r.id;
    jr["euler_char"] = r.euler_char;
    auto b = nlohmann::ordered_json::array();
    for (const auto& comp : r.boundary) {
      auto c = nlohmann::ordered_json::array();
      for (auto s : comp) c.push_back((s.sign > 0 ? "+" : "-") + d.arcs[s.arc].id);
      b.push_back(c);
    }
    jr["boundary"] = b;
    regs.push_back(jr);
  }
  auto ids = [&](const std::vector<int>& v) -> nlohmann::ordered_json {
    if (v.size() == 1) return d.regions[v[0]].id;
    auto l = nlohmann::ordered_json::array();
    for (int r : v) l.push_back(d.regions[r].id);
    return l;
  };
  j["basepoints"]["z"] = ids(d.z);
  j["basepoints"]["w"] = ids(d.w);
  if (d.allow_coincident) j["basepoints"]["allow_coincident"] = true;
  if (!d.domains.empty()) {
    auto& doms = j["domains"] = nlohmann::ordered_json::array();
    for (const auto& nd : d.domains) {
      nlohmann::ordered_json jd;
      jd["id"] = nd.id;
      jd["multiplicities"] = nlohmann::ordered_json::object();
      for (std::size_t r = 0; r < nd.multiplicity.size(); ++r)
        if (nd.multiplicity[r] != 0) jd["multiplicities"][d.regions[r].id] = nd.multiplicity[r];
      doms.push_back(jd);
    }
  }
  return j.dump(2) + "\n";
}

PointedDiagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_diagram_json(ss.str());
}

// ---------------------------------------------------------------- validation

ValidationReport validate(const PointedDiagram& d) {
  ValidationReport rep;
  auto& P = rep.problems;
  P = d.load_issues;
  if (!P.empty()) return rep;  // later checks assume resolved references

  const int g = d.genus, n = d.d();
  if (g < 1) P.push_back("genus must be at least 1");
  if (static_cast<int>(d.betas.size()) != n)
    P.push_back("alpha and beta sets have different sizes");
  if (n < g) P.push_back("fewer curves than the genus");
  for (const auto* set : {&d.alphas, &d.betas})
    for (int i = 0; i < static_cast<int>(set->size()); ++i)
      if ((*set)[i].index != i) P.push_back("curve indices of each kind must be 0..d-1 without gaps");
  for (const auto& a : d.arcs)
    if (a.curve < 0) P.push_back("arc '" + a.id + "' is on no curve");
  for (const auto& p : d.points)
    if (p.alpha < 0 || p.alpha >= n || p.beta < 0 || p.beta >= static_cast<int>(d.betas.size()))
      P.push_back("point '" + p.id + "' references a missing curve");
  if (!P.empty()) return rep;

  // curves are single cycles through points lying on them
  std::vector<std::array<int, 4>> incid(d.points.size(), {0, 0, 0, 0});
  for (const auto* set : {&d.alphas, &d.betas})
    for (const auto& c : *set) {
      std::string name = (c.kind == CurveKind::alpha ? "alpha " : "beta ") + std::to_string(c.index);
      if (c.arcs.empty()) {
        P.push_back(name + " has no arcs (every curve needs an intersection point)");
        continue;
      }
      for (std::size_t k = 0; k < c.arcs.size(); ++k) {
        const Arc& a = d.arcs[c.arcs[k]];
        const Arc& b = d.arcs[c.arcs[(k + 1) % c.arcs.size()]];
        if (a.to != b.from) P.push_back(name + " is not a closed cycle at arc '" + a.id + "'");
        int on = c.kind == CurveKind::alpha ? d.points[a.from].alpha : d.points[a.from].beta;
        if (on != c.index) P.push_back("arc '" + a.id + "' starts at a point not on " + name);
        int slot = c.kind == CurveKind::alpha ? 0 : 2;
        incid[a.from][slot]++;
        incid[a.to][slot + 1]++;
      }
    }
  for (std::size_t i = 0; i < d.points.size(); ++i)
    if (incid[i] != std::array<int, 4>{1, 1, 1, 1})
      P.push_back("point '" + d.points[i].id + "' is not visited exactly once by its alpha and beta curve");
  if (!P.empty()) return rep;

  // region boundaries
  const auto pa = point_arcs(d);
  std::vector<std::array<int, 2>> side(d.arcs.size(), {0, 0});
  std::vector<std::array<int, 4>> hit(d.points.size(), {0, 0, 0, 0});
  for (std::size_t ri = 0; ri < d.regions.size(); ++ri) {
    const Region& r = d.regions[ri];
    if (r.euler_char > 1) P.push_back("region '" + r.id + "' has euler_char > 1");
    int k = static_cast<int>(r.boundary.size());
    int twice_h = 2 - k - r.euler_char;
    if (twice_h < 0 || twice_h % 2 != 0)
      P.push_back("region '" + r.id + "': euler_char inconsistent with " + std::to_string(k) +
                  " boundary components");
    for (const auto& comp : r.boundary) {
      if (comp.size() < 2) {
        P.push_back("region '" + r.id + "' has a boundary component with fewer than 2 arcs");
        continue;
      }
      for (std::size_t t = 0; t < comp.size(); ++t) {
        SignedArc s = comp[t], u = comp[(t + 1) % comp.size()];
        side[s.arc][s.sign > 0 ? 0 : 1]++;
        if (d.arcs[s.arc].kind == d.arcs[u.arc].kind)
          P.push_back("region '" + r.id + "': boundary does not alternate alpha/beta at arc '" +
                      d.arcs[s.arc].id + "'");
        int p = end_point(d, s);
        if (p != start_point(d, u)) {
          P.push_back("region '" + r.id + "': boundary breaks after arc '" + d.arcs[s.arc].id + "'");
          continue;
        }
        int q = junction_quadrant(d, pa[p], p, s, u);
        if (q < 0) {
          P.push_back("region '" + r.id + "': boundary turns the wrong way at point '" +
                      d.points[p].id + "'");
          continue;
        }
        hit[p][q]++;
        if (d.points[p].quadrants[q] != static_cast<int>(ri))
          P.push_back("point '" + d.points[p].id + "' quadrant " + quadrant_name(q) + " names '" +
                      d.regions[d.points[p].quadrants[q]].id + "' but boundary of '" + r.id +
                      "' has that corner");
      }
    }
    if (r.has_declared_corners) {
      std::multiset<std::pair<int, int>> want(r.declared_corners.begin(), r.declared_corners.end());
      std::multiset<std::pair<int, int>> have;
      for (std::size_t p = 0; p < d.points.size(); ++p)
        for (int q = 0; q < 4; ++q)
          if (d.points[p].quadrants[q] == static_cast<int>(ri)) have.emplace(static_cast<int>(p), q);
      if (want != have) P.push_back("region '" + r.id + "': declared corners disagree with quadrants");
    }
  }
  for (std::size_t a = 0; a < d.arcs.size(); ++a)
    if (side[a] != std::array<int, 2>{1, 1})
      P.push_back("arc '" + d.arcs[a].id + "' must bound regions once on each side");
  for (std::size_t p = 0; p < d.points.size(); ++p)
    for (int q = 0; q < 4; ++q)
      if (hit[p][q] != 1)
        P.push_back("point '" + d.points[p].id + "' quadrant " + quadrant_name(q) +
                    " is not a corner of exactly one boundary");

  // basepoints
  const int m = n - g + 1;
  if (static_cast<int>(d.z.size()) != m || static_cast<int>(d.w.size()) != m)
    P.push_back("expected " + std::to_string(m) + " z and " + std::to_string(m) + " w basepoints");
  if (!d.allow_coincident)
    for (int a : d.z)
      for (int b : d.w)
        if (a == b) P.push_back("z and w share region '" + d.regions[a].id + "'");
  if (!P.empty()) return rep;

  // Euler characteristic, first count
  long chi = static_cast<long>(d.points.size()) - static_cast<long>(d.arcs.size());
  for (const auto& r : d.regions) chi += r.euler_char;
  if (chi != 2 - 2 * g)
    P.push_back("Euler characteristic mismatch: V - E + sum chi = " + std::to_string(chi) +
                ", expected " + std::to_string(2 - 2 * g));
  if (!P.empty()) return rep;

  // second count through the homology of the refined cell complex
  SurfaceComplex sc = build_surface_complex(d);
  if (sc.b0 != 1) P.push_back("surface is not connected");
  if (sc.b2 != 1) P.push_back("regions do not glue to a closed oriented surface");
  if (sc.b0 - sc.b1 + sc.b2 != chi || sc.b1 != 2 * g)
    P.push_back("Euler characteristic mismatch: Betti numbers give " +
                std::to_string(sc.b0 - sc.b1 + sc.b2));
  if (!P.empty()) return rep;

  for (CurveKind kind : {CurveKind::alpha, CurveKind::beta}) {
    const char* nm = kind == CurveKind::alpha ? "alpha" : "beta";
    if (curve_class_rank(d, sc, kind) != g) P.push_back(std::string(nm) + " curves are linearly dependent in H1");
    auto comps = complement_components(d, kind);
    int ncomp = 0;
    for (int c : comps) ncomp = std::max(ncomp, c + 1);
    if (ncomp != m) {
      P.push_back(std::string("complement of the ") + nm + " curves has " + std::to_string(ncomp) +
                  " components, expected " + std::to_string(m));
      continue;
    }
    std::vector<int> zc(m, 0), wc(m, 0);
    for (int r : d.z) zc[comps[r]]++;
    for (int r : d.w) wc[comps[r]]++;
    for (int c = 0; c < m; ++c)
      if (zc[c] != 1 || wc[c] != 1)
        P.push_back(std::string("each component of the ") + nm +
                    " complement must hold one z and one w");
  }
  return rep;
}

void require_valid(const PointedDiagram& d) {
  auto rep = validate(d);
  if (rep.ok()) return;
  std::string msg = "invalid diagram:";
  for (const auto& p : rep.problems) msg += "\n  " + p;
  throw InputError(msg);
}

// ---------------------------------------------------------------- transforms

PointedDiagram swap_basepoints(const PointedDiagram& d) {
  PointedDiagram e = d;
  std::swap(e.z, e.w);
  return e;
}

PointedDiagram conjugate_diagram(const PointedDiagram& d) {
  PointedDiagram e = d;
  std::swap(e.alphas, e.betas);
  for (auto& c : e.alphas) c.kind = CurveKind::alpha;
  for (auto& c : e.betas) c.kind = CurveKind::beta;
  for (auto& a : e.arcs) a.kind = a.kind == CurveKind::alpha ? CurveKind::beta : CurveKind::alpha;
  for (auto& p : e.points) {
    std::swap(p.alpha, p.beta);
    auto q = p.quadrants;
    if (p.sign > 0) {
      p.quadrants = {q[NE], q[SE], q[SW], q[NW]};
    } else {
      p.quadrants = {q[SW], q[NW], q[NE], q[SE]};
    }
  }
  for (auto& r : e.regions) {
    for (auto& comp : r.boundary) {
      std::reverse(comp.begin(), comp.end());
      for (auto& s : comp) s.sign = -s.sign;
    }
    for (auto& c : r.declared_corners) {
      int s = d.points[c.first].sign;
      static const int pos[4] = {NE, SE, SW, NW};
      static const int neg[4] = {SW, NW, NE, SE};
      c.second = s > 0 ? pos[c.second] : neg[c.second];
    }
  }
  std::swap(e.z, e.w);
  return e;
}

}  // namespace hfk
