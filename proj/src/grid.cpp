#include "hfk/grid.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "hfk/errors.hpp"

namespace hfk {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

std::vector<int> parse_perm_line(const std::string& line) {
  std::istringstream ss(line);
  std::vector<int> v;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      int x = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      v.push_back(x);
    } catch (const std::exception&) {
      throw InputError("grid: '" + tok + "' is not an integer");
    }
  }
  return v;
}

}  // namespace

GridDiagram parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(parse_perm_line(line));
  }
  if (rows.size() != 2) throw InputError("grid: expected two permutation lines (O then X)");
  // lines list rows from the top down; rows are stored bottom up
  GridDiagram g;
  g.O.assign(rows[0].rbegin(), rows[0].rend());
  g.X.assign(rows[1].rbegin(), rows[1].rend());
  g.n = static_cast<int>(g.O.size());
  auto problems = validate_grid(g);
  if (!problems.empty()) throw InputError("grid: " + problems.front());
  return g;
}

GridDiagram load_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grid(ss.str());
}

std::string grid_to_text(const GridDiagram& g) {
  std::string s;
  for (const auto* v : {&g.O, &g.X}) {
    for (int i = 0; i < g.n; ++i) s += (i ? " " : "") + std::to_string((*v)[g.n - 1 - i]);
    s += "\n";
  }
  return s;
}

std::vector<std::string> validate_grid(const GridDiagram& g) {
  std::vector<std::string> p;
  if (g.n < 2) p.push_back("grid size must be at least 2");
  if (static_cast<int>(g.X.size()) != g.n || static_cast<int>(g.O.size()) != g.n)
    p.push_back("O and X lines have different lengths");
  if (!p.empty()) return p;
  for (const auto* v : {&g.O, &g.X}) {
    std::vector<int> s = *v;
    std::sort(s.begin(), s.end());
    for (int i = 0; i < g.n; ++i)
      if (s[i] != i) {
        p.push_back(std::string(v == &g.O ? "O" : "X") + " line is not a permutation of 0.." +
                    std::to_string(g.n - 1));
        break;
      }
  }
  if (!p.empty()) return p;
  for (int r = 0; r < g.n; ++r)
    if (g.O[r] == g.X[r]) p.push_back("row " + std::to_string(r) + " has O and X in the same cell");
  return p;
}

int grid_components(const GridDiagram& g) {
  // follow O -> X within a row, X -> O within a column
  std::vector<int> row_of_o(g.n);
  for (int r = 0; r < g.n; ++r) row_of_o[g.O[r]] = r;
  std::vector<bool> seen(g.n, false);
  int comps = 0;
  for (int r = 0; r < g.n; ++r) {
    if (seen[r]) continue;
    ++comps;
    for (int cur = r; !seen[cur]; cur = row_of_o[g.X[cur]]) seen[cur] = true;
  }
  return comps;
}

// ---------------------------------------------------------------- gradings

namespace {

// I(P, Q) = #{(p, q) : p.x < q.x and p.y < q.y}, coordinates doubled.
using Pt = std::pair<int, int>;

std::int64_t count_i(const std::vector<Pt>& P, const std::vector<Pt>& Q) {
  std::int64_t s = 0;
  for (const auto& p : P)
    for (const auto& q : Q) s += (p.first < q.first && p.second < q.second);
  return s;
}

std::vector<Pt> gen_points(const std::vector<int>& x) {
  std::vector<Pt> v;
  for (int c = 0; c < static_cast<int>(x.size()); ++c) v.emplace_back(2 * c, 2 * x[c]);
  return v;
}

std::vector<Pt> mark_points(const std::vector<int>& marks) {
  std::vector<Pt> v;
  for (int r = 0; r < static_cast<int>(marks.size()); ++r) v.emplace_back(2 * marks[r] + 1, 2 * r + 1);
  return v;
}

}  // namespace

std::int64_t grid_maslov(const std::vector<int>& x, const std::vector<int>& marks) {
  auto X = gen_points(x), M = mark_points(marks);
  // J(x,x) - 2 J(x,M) + J(M,M) + 1 with J symmetric in its arguments
  return count_i(X, X) - count_i(X, M) - count_i(M, X) + count_i(M, M) + 1;
}

std::int64_t grid_alexander(const GridDiagram& g, const std::vector<int>& x) {
  std::int64_t twice = grid_maslov(x, g.O) - grid_maslov(x, g.X) - (g.n - 1);
  if (twice % 2 != 0) throw InvariantError("Alexander grading is not an integer");
  return twice / 2;
}

// ---------------------------------------------------------------- tilde complex

GridComplex tilde_complex(const GridDiagram& g, std::uint64_t budget) {
  auto problems = validate_grid(g);
  if (!problems.empty()) throw InputError("grid: " + problems.front());
  const int n = g.n;
  std::uint64_t count = 1;
  for (int k = 2; k <= n; ++k) {
    count *= static_cast<std::uint64_t>(k);
    if (count > budget) throw BudgetError("grid generator count exceeds budget " + std::to_string(budget));
  }
  GridComplex gc;
  gc.n = n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do gc.gens.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < gc.gens.size(); ++i) index[gc.gens[i]] = static_cast<int>(i);

  ChainComplexF2& c = gc.complex;
  const std::size_t N = gc.gens.size();
  c.delta_a = {0};
  c.delta_m = {0};
  c.cls.assign(N, 0);
  c.boundary.assign(N, {});
  for (const auto& x : gc.gens) {
    std::string s;
    for (int k = 0; k < n; ++k) s += (k ? "," : "") + std::to_string(x[k]);
    c.names.push_back(s);
    c.maslov.push_back(grid_maslov(x, g.O));
    c.alexander.push_back(grid_alexander(g, x));
  }

  // empty rectangle with lower-left corner (left, bottom) of the given size
  auto empty = [&](const std::vector<int>& x, int left, int width, int bottom, int height) {
    for (int j = 0; j < height; ++j) {
      int row = mod(bottom + j, n);
      if (mod(g.O[row] - left, n) < width || mod(g.X[row] - left, n) < width) return false;
    }
    for (int i = 1; i < width; ++i) {
      int col = mod(left + i, n);
      int off = mod(x[col] - bottom, n);
      if (off > 0 && off < height) return false;
    }
    return true;
  };
  for (std::size_t xi = 0; xi < N; ++xi) {
    const auto& x = gc.gens[xi];
    std::vector<int> out;
    for (int c1 = 0; c1 < n; ++c1)
      for (int c2 = c1 + 1; c2 < n; ++c2) {
        int rects = 0;
        // corners of x at lower left and upper right
        if (empty(x, c1, c2 - c1, x[c1], mod(x[c2] - x[c1], n))) ++rects;
        if (empty(x, c2, n - (c2 - c1), x[c2], mod(x[c1] - x[c2], n))) ++rects;
        if (rects % 2 == 0) continue;
        std::vector<int> y = x;
        std::swap(y[c1], y[c2]);
        out.push_back(index.at(y));
      }
    std::sort(out.begin(), out.end());
    c.boundary[xi] = out;
  }
  return gc;
}

BigradedPoly poincare_polynomial(const RankTable& t) {
  BigradedPoly p;
  for (const auto& [k, v] : t.entries) p[{std::get<2>(k), std::get<1>(k)}] += v;
  return p;
}

BigradedPoly hat_deconvolve(const BigradedPoly& p, int n) {
  BigradedPoly cur = p;
  for (int step = 0; step < n - 1; ++step) {
    // divide by (1 + u), u = q^-1 t^-1, separately on each line M - A = const
    std::map<std::int64_t, std::map<std::int64_t, std::int64_t>> lines;  // diag -> M -> coef
    for (const auto& [k, v] : cur)
      if (v != 0) lines[k.first - k.second][k.first] = v;
    BigradedPoly next;
    for (const auto& [diag, terms] : lines) {
      std::int64_t top = terms.rbegin()->first, bottom = terms.begin()->first;
      std::int64_t prev = 0;
      for (std::int64_t m = top; m >= bottom; --m) {
        auto it = terms.find(m);
        std::int64_t pm = it == terms.end() ? 0 : it->second;
        std::int64_t qm = pm - prev;
        if (m == bottom) {
          if (qm != 0) throw InvariantError("tilde polynomial is not divisible by (1 + q^-1 t^-1)");
          break;
        }
        if (qm != 0) next[{m, m - diag}] = qm;
        prev = qm;
      }
    }
    cur = std::move(next);
  }
  for (const auto& [k, v] : cur)
    if (v < 0) throw InvariantError("hat polynomial has a negative coefficient");
  return cur;
}

RankTable poly_to_table(const BigradedPoly& p) {
  RankTable t;
  t.num_classes = 1;
  t.delta_a = {0};
  t.delta_m = {0};
  for (const auto& [k, v] : p)
    if (v != 0) t.entries[{0, k.second, k.first}] = v;
  return t;
}

std::map<std::int64_t, std::int64_t> alexander_polynomial(const BigradedPoly& hat) {
  std::map<std::int64_t, std::int64_t> raw;
  for (const auto& [k, v] : hat) raw[k.second] += (k.first % 2 == 0 ? v : -v);
  std::erase_if(raw, [](const auto& kv) { return kv.second == 0; });
  if (raw.empty()) throw InvariantError("graded Euler characteristic vanishes");
  std::int64_t lo = raw.begin()->first, hi = raw.rbegin()->first;
  if ((lo + hi) % 2 != 0) throw InvariantError("Euler characteristic cannot be symmetrized");
  std::int64_t shift = (lo + hi) / 2;
  std::int64_t at_one = 0;
  for (const auto& [e, c] : raw) at_one += c;
  if (at_one != 1 && at_one != -1) throw InvariantError("Euler characteristic does not evaluate to +-1 at t = 1");
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [e, c] : raw) out[e - shift] = at_one * c;
  for (const auto& [e, c] : out) {
    auto it = out.find(-e);
    if (it == out.end() || it->second != c) throw InvariantError("Euler characteristic is not symmetric");
  }
  return out;
}

std::string laurent_to_string(const std::map<std::int64_t, std::int64_t>& p) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    auto [e, c] = *it;
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && e != 0;
    if (!unit) s += std::to_string(mag);
    if (e != 0) s += "t";
    if (e != 0 && e != 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- as a Heegaard diagram

PointedDiagram grid_to_pointed(const GridDiagram& g) {
  auto problems = validate_grid(g);
  if (!problems.empty()) throw InputError("grid: " + problems.front());
  const int n = g.n;
  PointedDiagram d;
  d.genus = 1;
  d.description = "multi-pointed torus diagram of a grid";
  auto cell = [&](int r, int c) { return mod(r, n) * n + mod(c, n); };
  auto tag = [](int r, int c) { return std::to_string(r) + "_" + std::to_string(c); };
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      IntersectionPoint p;
      p.id = "p" + tag(r, c);
      p.alpha = r;
      p.beta = c;
      p.sign = 1;
      p.quadrants = {cell(r, c), cell(r, c - 1), cell(r - 1, c - 1), cell(r - 1, c)};
      d.points.push_back(p);
    }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) d.arcs.push_back({"a" + tag(r, c), cell(r, c), cell(r, c + 1), CurveKind::alpha, r});
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) d.arcs.push_back({"b" + tag(r, c), cell(r, c), cell(r + 1, c), CurveKind::beta, c});
  const int nn = n * n;
  for (int r = 0; r < n; ++r) {
    Curve a{CurveKind::alpha, r, {}};
    for (int c = 0; c < n; ++c) a.arcs.push_back(cell(r, c));
    d.alphas.push_back(a);
  }
  for (int c = 0; c < n; ++c) {
    Curve b{CurveKind::beta, c, {}};
    for (int r = 0; r < n; ++r) b.arcs.push_back(nn + cell(r, c));
    d.betas.push_back(b);
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Region reg;
      reg.id = "C" + tag(r, c);
      reg.euler_char = 1;
      reg.boundary = {{{cell(r, c), 1}, {nn + cell(r, c + 1), 1}, {cell(r + 1, c), -1}, {nn + cell(r, c), -1}}};
      d.regions.push_back(reg);
    }
  for (int r = 0; r < n; ++r) {
    d.w.push_back(cell(r, g.O[r]));
    d.z.push_back(cell(r, g.X[r]));
  }
  return d;
}

}  // namespace hfk
