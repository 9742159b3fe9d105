#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hfk/chain.hpp"
#include "hfk/symmetry.hpp"

namespace hfk {

enum class FuzzKind { slopes, grids };
FuzzKind parse_fuzz_kind(const std::string& name);

struct FuzzOptions {
  FuzzKind kind = FuzzKind::grids;
  std::uint64_t seed = 0;
  int count = 0;
  int max_grid = 5;        // grids: 2 <= n <= max_grid
  int max_det = 8;         // slopes: 1 <= q <= max_det
  int cross_check_up_to = 5;  // grids: compare with the multi-pointed route up to this size
  std::uint64_t budget = 1000000;
  // Applied to every computed complex before the checks; test hook.
  std::function<void(ChainComplexF2&)> mutate;
};

struct FuzzFailure {
  int case_index = -1;
  std::string property;
  std::string detail;
  std::string reproducer;  // smallest failing input found, in its file format
};

struct FuzzSummary {
  int cases = 0;
  int checks = 0;
  std::vector<FuzzFailure> failures;
  bool ok() const { return failures.empty(); }
  ojson to_json() const;
};

FuzzSummary run_fuzz(const FuzzOptions& opt);

// Adds every generator to its own boundary, which breaks the grading law.
void self_loop_mutation(ChainComplexF2& c);

}  // namespace hfk
