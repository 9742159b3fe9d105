#include "hfk/generators.hpp"

#include <cstdlib>

#include "hfk/errors.hpp"

namespace hfk {

std::uint64_t generator_budget_from_env() {
  const char* s = std::getenv("HFK_BUDGET");
  if (!s || !*s) return kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("HFK_BUDGET must be a positive integer");
  return v;
}

std::string generator_name(const PointedDiagram& d, const Generator& x) {
  std::string s;
  for (std::size_t i = 0; i < x.points.size(); ++i) {
    if (i) s += ",";
    s += d.points[x.points[i]].id;
  }
  return s;
}

int find_generator(const PointedDiagram& d, const std::vector<Generator>& gens, const std::string& name) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (generator_name(d, gens[i]) == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> intersection_matrix(const PointedDiagram& d) {
  std::vector<std::vector<int>> m(d.d(), std::vector<int>(d.betas.size(), 0));
  for (const auto& p : d.points) m[p.alpha][p.beta]++;
  return m;
}

std::vector<Generator> enumerate_generators(const PointedDiagram& d, std::uint64_t budget) {
  const int n = d.d();
  std::vector<std::vector<int>> on_alpha(n);
  for (std::size_t p = 0; p < d.points.size(); ++p) on_alpha[d.points[p].alpha].push_back(static_cast<int>(p));
  std::vector<Generator> out;
  std::vector<int> cur(n, -1);
  std::vector<bool> used(d.betas.size(), false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (out.size() >= budget)
        throw BudgetError("generator count exceeds budget " + std::to_string(budget));
      out.push_back({cur});
      return;
    }
    for (int p : on_alpha[i]) {
      int b = d.points[p].beta;
      if (used[b]) continue;
      used[b] = true;
      cur[i] = p;
      self(self, i + 1);
      used[b] = false;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace hfk
