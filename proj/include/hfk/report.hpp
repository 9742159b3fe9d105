#pragma once

#include <string>
#include <vector>

#include "hfk/symmetry.hpp"

namespace hfk {

enum class Format { json, table, csv };

// Throws InputError on an unknown name.
Format parse_format(const std::string& name);

// Context printed alongside a rank table.
struct TableInfo {
  std::string source;
  std::string h1;                   // empty when not known (grid input)
  std::vector<std::string> labels;  // per class, may be empty
  std::string grading;              // "relative" or "absolute"
};

std::string render_table(const RankTable& t, const TableInfo& info, Format f);
std::string render_total(const RankTable& t, Format f);
std::string render_check(const CheckReport& r, Format f);

// Grand total of a rank table file: the JSON emitted by render_table, a JSON
// object with a "total" field, or a bare integer.
std::int64_t read_table_total(const std::string& path);

}  // namespace hfk
