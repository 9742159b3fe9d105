#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hfk/spinc.hpp"

namespace hfk {

// Dense F2 matrix with packed rows.
class F2Matrix {
 public:
  F2Matrix(std::size_t rows, std::size_t cols);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const;
  void flip(std::size_t i, std::size_t j);
  void set(std::size_t i, std::size_t j, bool v);
  std::size_t rank() const;
  F2Matrix mul(const F2Matrix& b) const;
  bool is_zero() const;
  bool operator==(const F2Matrix&) const = default;

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;
};

struct ChainComplexF2 {
  std::vector<std::string> names;
  std::vector<int> cls;
  std::vector<std::int64_t> alexander;
  std::vector<std::int64_t> maslov;
  // Per class grading indeterminacy (0 = exact).
  std::vector<std::int64_t> delta_a;
  std::vector<std::int64_t> delta_m;
  // boundary[x] = sorted targets y with coefficient 1.
  std::vector<std::vector<int>> boundary;
  int num_classes() const { return static_cast<int>(delta_a.size()); }
  F2Matrix matrix() const;  // entry (y, x) = <∂x, y>
};

struct RankTable {
  using Key = std::tuple<int, std::int64_t, std::int64_t>;  // class, A, M
  std::map<Key, std::int64_t> entries;                     // nonzero ranks only
  int num_classes = 0;
  std::vector<std::int64_t> delta_a, delta_m;
  std::int64_t class_total(int c) const;
  std::int64_t total() const;
};

struct DifferentialOptions {
  int jobs = 1;
  // Skip the niceness / admissibility preconditions (tests of failure modes only).
  bool unchecked = false;
};

// Hat differential counting index one 0/1 domains avoiding every basepoint.
ChainComplexF2 differential(const Analysis& a, const DifferentialOptions& opt = {});
ChainComplexF2 differential(const PointedDiagram& d, const DifferentialOptions& opt = {});

bool verify_d_squared(const ChainComplexF2& c);

// Checks that ∂ keeps class and Alexander offset and lowers Maslov by one.
// Returns a description of the first violation, or an empty string.
std::string grading_violation(const ChainComplexF2& c);

RankTable homology(const ChainComplexF2& c);

std::int64_t to_i64(const Int& v);

}  // namespace hfk
