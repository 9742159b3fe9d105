#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfk/diagram.hpp"

namespace hfk {

inline constexpr std::uint64_t kDefaultBudget = 1000000;

// Budget from HFK_BUDGET when set, else the default cap.
std::uint64_t generator_budget_from_env();

// points[i] is the chosen intersection point on alpha_i.
struct Generator {
  std::vector<int> points;
  auto operator<=>(const Generator&) const = default;
};

std::string generator_name(const PointedDiagram& d, const Generator& x);
// Accepts the comma separated point ids in alpha order.
int find_generator(const PointedDiagram& d, const std::vector<Generator>& gens, const std::string& name);

// All generators, ordered lexicographically by point index per alpha curve.
// Throws BudgetError when more than `budget` exist.
std::vector<Generator> enumerate_generators(const PointedDiagram& d,
                                            std::uint64_t budget = kDefaultBudget);

// M[i][j] = #(alpha_i ∩ beta_j)
std::vector<std::vector<int>> intersection_matrix(const PointedDiagram& d);

}  // namespace hfk
