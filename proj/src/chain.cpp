#include "hfk/chain.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <thread>

#include "hfk/errors.hpp"

namespace hfk {

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

bool F2Matrix::get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }
void F2Matrix::flip(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] ^= std::uint64_t{1} << (j % 64); }
void F2Matrix::set(std::size_t i, std::size_t j, bool v) {
  if (get(i, j) != v) flip(i, j);
}

std::size_t F2Matrix::rank() const {
  std::vector<std::uint64_t> m = bits_;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t w = col / 64;
    std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t piv = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (m[i * words_ + w] & bit) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t k = 0; k < words_; ++k) std::swap(m[piv * words_ + k], m[r * words_ + k]);
    for (std::size_t i = r + 1; i < rows_; ++i)
      if (m[i * words_ + w] & bit)
        for (std::size_t k = w; k < words_; ++k) m[i * words_ + k] ^= m[r * words_ + k];
    ++r;
  }
  return r;
}

F2Matrix F2Matrix::mul(const F2Matrix& b) const {
  F2Matrix out(rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k))
        for (std::size_t t = 0; t < b.words_; ++t) out.bits_[i * out.words_ + t] ^= b.bits_[k * b.words_ + t];
  return out;
}

bool F2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t v) { return v == 0; });
}

F2Matrix ChainComplexF2::matrix() const {
  F2Matrix m(names.size(), names.size());
  for (std::size_t x = 0; x < boundary.size(); ++x)
    for (int y : boundary[x]) m.flip(y, x);
  return m;
}

std::int64_t RankTable::class_total(int c) const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries)
    if (std::get<0>(k) == c) s += v;
  return s;
}

std::int64_t RankTable::total() const {
  std::int64_t s = 0;
  for (const auto& [k, v] : entries) s += v;
  return s;
}

std::int64_t to_i64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw InvariantError("grading offset does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// ---------------------------------------------------------------- differential

namespace {

// Enumerates the 0/1 vectors of phi + span(L) for a saturated lattice basis L.
class ZeroOneCoset {
 public:
  ZeroOneCoset(const std::vector<DomainVector>& basis, std::size_t R) : L_(basis), R_(R) {
    const std::size_t k = L_.size();
    if (k > 20) throw BudgetError("too many basepoint-free periodic domains to enumerate");
    // pick k rows (regions) where L is invertible, by rational elimination
    std::vector<std::vector<Rat>> m(R, std::vector<Rat>(k));
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t j = 0; j < k; ++j) m[r][j] = Rat(L_[j][r]);
    std::vector<bool> used(R, false);
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t piv = R;
      for (std::size_t r = 0; r < R; ++r)
        if (!used[r] && !m[r][j].is_zero()) {
          piv = r;
          break;
        }
      if (piv == R) throw InvariantError("periodic lattice basis is not independent");
      used[piv] = true;
      rows_.push_back(piv);
      for (std::size_t r = 0; r < R; ++r) {
        if (r == piv || m[r][j].is_zero()) continue;
        Rat f = m[r][j] / m[piv][j];
        for (std::size_t t = 0; t < k; ++t) m[r][t] -= f * m[piv][t];
      }
    }
    // inverse of the k x k submatrix on the pivot rows
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(2 * k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = Rat(L_[j][rows_[i]]);
      a[i][k + i] = 1;
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (a[p][c].is_zero()) ++p;
      std::swap(a[p], a[c]);
      Rat inv = 1 / a[c][c];
      for (auto& v : a[c]) v *= inv;
      for (std::size_t i = 0; i < k; ++i) {
        if (i == c || a[i][c].is_zero()) continue;
        Rat f = a[i][c];
        for (std::size_t t = 0; t < 2 * k; ++t) a[i][t] -= f * a[c][t];
      }
    }
    inv_.assign(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) inv_[i][j] = a[i][k + j];
  }

  template <class F>
  void for_each(const DomainVector& phi, F&& f) const {
    const std::size_t k = L_.size();
    auto is01 = [](const DomainVector& v) {
      return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0 || x == 1; });
    };
    if (k == 0) {
      if (is01(phi)) f(phi);
      return;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      std::vector<Int> c(k);
      bool integral = true;
      for (std::size_t i = 0; i < k && integral; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < k; ++j) {
          Int target = ((mask >> j) & 1U) ? 1 : 0;
          s += inv_[i][j] * Rat(target - phi[rows_[j]]);
        }
        if (denominator(s) != 1) integral = false;
        c[i] = numerator(s);
      }
      if (!integral) continue;
      DomainVector v = phi;
      for (std::size_t j = 0; j < k; ++j)
        if (!c[j].is_zero())
          for (std::size_t r = 0; r < R_; ++r) v[r] += c[j] * L_[j][r];
      if (is01(v)) f(v);
    }
  }

 private:
  std::vector<DomainVector> L_;
  std::size_t R_;
  std::vector<std::size_t> rows_;
  std::vector<std::vector<Rat>> inv_;
};

// Moves a domain by a periodic domain so that every basepoint region has
// multiplicity zero. With one z and one w the totals already decide this;
// with several, a domain can have zero totals and still cover basepoints.
class BasepointClearing {
 public:
  explicit BasepointClearing(const Analysis& a) : basis_(a.domains().periodic().basis) {
    const auto& d = a.diagram();
    regions_ = d.z;
    regions_.insert(regions_.end(), d.w.begin(), d.w.end());
    std::sort(regions_.begin(), regions_.end());
    regions_.erase(std::unique(regions_.begin(), regions_.end()), regions_.end());
    ZMatrix m(regions_.size(), basis_.size());
    for (std::size_t i = 0; i < regions_.size(); ++i)
      for (std::size_t j = 0; j < basis_.size(); ++j) m(i, j) = basis_[j][regions_[i]];
    snf_ = smith_normal_form(m);
  }

  std::optional<DomainVector> operator()(DomainVector phi) const {
    IntVec rhs(regions_.size());
    bool clear = true;
    for (std::size_t i = 0; i < regions_.size(); ++i) {
      rhs[i] = -phi[regions_[i]];
      clear = clear && rhs[i].is_zero();
    }
    if (clear) return phi;
    auto c = solve_integer(snf_, rhs);
    if (!c) return std::nullopt;
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (!(*c)[j].is_zero())
        for (std::size_t r = 0; r < phi.size(); ++r) phi[r] += (*c)[j] * basis_[j][r];
    return phi;
  }

 private:
  std::vector<DomainVector> basis_;
  std::vector<int> regions_;
  SmithForm snf_;
};

}  // namespace

ChainComplexF2 differential(const Analysis& a, const DifferentialOptions& opt) {
  const auto& d = a.diagram();
  if (!opt.unchecked) {
    if (!is_nice(d)) throw InputError("diagram is not nice: some unmarked region is neither a bigon nor a square");
    if (!is_extremely_weakly_admissible(d).admissible)
      throw InputError("diagram is not admissible: a nonnegative periodic domain avoids the basepoints");
  }
  const auto& gens = a.generators();
  SpincPartition part = partition(a);
  auto grades = relative_gradings(a, part);

  ChainComplexF2 c;
  const std::size_t N = gens.size();
  c.names.reserve(N);
  for (const auto& g : gens) c.names.push_back(generator_name(d, g));
  c.cls = part.class_of;
  c.alexander.resize(N);
  c.maslov.resize(N);
  for (const auto& gc : grades) {
    c.delta_a.push_back(to_i64(gc.delta_a));
    c.delta_m.push_back(to_i64(gc.delta_m));
    const auto& members = part.classes[gc.class_id];
    for (std::size_t k = 0; k < members.size(); ++k) {
      c.alexander[members[k]] = to_i64(gc.alexander[k]);
      c.maslov[members[k]] = to_i64(gc.maslov[k]);
    }
  }
  c.boundary.assign(N, {});

  ZeroOneCoset coset(a.domains().basepoint_free(), d.regions.size());
  BasepointClearing clearing(a);
  auto row = [&](std::size_t x) {
    std::vector<int> out;
    for (int y : part.classes[part.class_of[x]]) {
      if (static_cast<std::size_t>(y) == x) continue;
      auto phi = clearing(domain_between(part, static_cast<int>(x), y));
      if (!phi) continue;
      int count = 0;
      coset.for_each(*phi, [&](const DomainVector& v) {
        if (maslov_index4(d, v, gens[x], gens[y]) != 4) return;
        int moved = 0;
        for (int i = 0; i < d.d(); ++i) moved += gens[x].points[i] != gens[y].points[i];
        if (moved != 1 && moved != 2)
          throw InvariantError("index one domain from " + c.names[x] + " to " + c.names[y] +
                               " is neither a bigon nor a rectangle");
        ++count;
      });
      if (count % 2) out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || N < 2) {
    for (std::size_t x = 0; x < N; ++x) c.boundary[x] = row(x);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(jobs);
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t x = t; x < N; x += jobs) c.boundary[x] = row(x);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  return c;
}

ChainComplexF2 differential(const PointedDiagram& d, const DifferentialOptions& opt) {
  Analysis a(d);
  return differential(a, opt);
}

bool verify_d_squared(const ChainComplexF2& c) {
  std::vector<int> parity(c.names.size());
  for (std::size_t x = 0; x < c.boundary.size(); ++x) {
    std::fill(parity.begin(), parity.end(), 0);
    for (int y : c.boundary[x])
      for (int z : c.boundary[y]) parity[z] ^= 1;
    if (std::any_of(parity.begin(), parity.end(), [](int v) { return v != 0; })) return false;
  }
  return true;
}

namespace {

std::int64_t mod_or_same(std::int64_t v, std::int64_t m) {
  if (m == 0) return v;
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string grading_violation(const ChainComplexF2& c) {
  for (std::size_t x = 0; x < c.boundary.size(); ++x)
    for (int y : c.boundary[x]) {
      const int k = c.cls[x];
      if (c.cls[y] != k) return "differential changes class: " + c.names[x] + " -> " + c.names[y];
      if (mod_or_same(c.alexander[x] - c.alexander[y], c.delta_a[k]) != 0)
        return "differential changes Alexander grading: " + c.names[x] + " -> " + c.names[y];
      if (mod_or_same(c.maslov[x] - c.maslov[y] - 1, c.delta_m[k]) != 0)
        return "differential does not lower Maslov grading by one: " + c.names[x] + " -> " + c.names[y];
    }
  return {};
}

RankTable homology(const ChainComplexF2& c) {
  if (!verify_d_squared(c)) throw InvariantError("differential does not square to zero");
  if (auto v = grading_violation(c); !v.empty()) throw InvariantError(v);
  RankTable t;
  t.num_classes = c.num_classes();
  t.delta_a = c.delta_a;
  t.delta_m = c.delta_m;
  std::map<RankTable::Key, std::vector<int>> blocks;
  for (std::size_t x = 0; x < c.names.size(); ++x)
    blocks[{c.cls[x], c.alexander[x], c.maslov[x]}].push_back(static_cast<int>(x));
  // rank of ∂ out of each block
  std::map<RankTable::Key, std::int64_t> out_rank;
  for (const auto& [key, src] : blocks) {
    auto [k, A, M] = key;
    RankTable::Key tk{k, A, mod_or_same(M - 1, c.delta_m[k])};
    auto it = blocks.find(tk);
    if (it == blocks.end()) {
      out_rank[key] = 0;
      continue;
    }
    const auto& dst = it->second;
    std::map<int, std::size_t> pos;
    for (std::size_t j = 0; j < dst.size(); ++j) pos[dst[j]] = j;
    F2Matrix m(src.size(), dst.size());
    for (std::size_t i = 0; i < src.size(); ++i)
      for (int y : c.boundary[src[i]]) m.flip(i, pos.at(y));
    out_rank[key] = static_cast<std::int64_t>(m.rank());
  }
  for (const auto& [key, src] : blocks) {
    auto [k, A, M] = key;
    RankTable::Key from{k, A, mod_or_same(M + 1, c.delta_m[k])};
    std::int64_t in = blocks.count(from) ? out_rank[from] : 0;
    std::int64_t h = static_cast<std::int64_t>(src.size()) - out_rank[key] - in;
    if (h < 0) throw InvariantError("negative homology rank");
    if (h > 0) t.entries[key] = h;
  }
  return t;
}

}  // namespace hfk
