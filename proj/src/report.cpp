#include "hfk/report.hpp"

#include <fstream>
#include <sstream>

#include "hfk/errors.hpp"

namespace hfk {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  throw InputError("unknown format '" + name + "' (json, table or csv)");
}

namespace {

std::string label_of(const TableInfo& info, int c) {
  return c < static_cast<int>(info.labels.size()) ? info.labels[c] : std::to_string(c);
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

}  // namespace

std::string render_table(const RankTable& t, const TableInfo& info, Format f) {
  std::ostringstream out;
  switch (f) {
    case Format::json: {
      ojson j;
      j["source"] = info.source;
      if (!info.h1.empty()) j["h1"] = info.h1;
      j["grading"] = info.grading;
      j["classes"] = ojson::array();
      for (int c = 0; c < t.num_classes; ++c) {
        ojson jc;
        jc["class"] = c;
        jc["label"] = label_of(info, c);
        jc["delta_a"] = t.delta_a[c];
        jc["delta_m"] = t.delta_m[c];
        jc["total"] = t.class_total(c);
        jc["entries"] = ojson::array();
        for (const auto& [k, r] : t.entries) {
          auto [cls, a, m] = k;
          if (cls != c) continue;
          jc["entries"].push_back({{"A", a}, {"M", m}, {"rank", r}});
        }
        j["classes"].push_back(jc);
      }
      j["total"] = t.total();
      out << j.dump(2) << "\n";
      break;
    }
    case Format::table: {
      out << "# " << info.source;
      if (!info.h1.empty()) out << "  H1 = " << info.h1;
      out << "  gradings " << info.grading << "\n";
      out << pad("class", 8) << pad("label", 12) << pad("A", 6) << pad("M", 6) << "rank\n";
      for (const auto& [k, r] : t.entries) {
        auto [c, a, m] = k;
        out << pad(std::to_string(c), 8) << pad(label_of(info, c), 12) << pad(std::to_string(a), 6)
            << pad(std::to_string(m), 6) << r << "\n";
      }
      out << "total " << t.total() << "\n";
      break;
    }
    case Format::csv: {
      out << "class,label,A,M,rank\n";
      for (const auto& [k, r] : t.entries) {
        auto [c, a, m] = k;
        out << c << ",\"" << label_of(info, c) << "\"," << a << "," << m << "," << r << "\n";
      }
      break;
    }
  }
  return out.str();
}

std::string render_total(const RankTable& t, Format f) {
  switch (f) {
    case Format::json: return ojson{{"total", t.total()}}.dump() + "\n";
    case Format::csv: return "total\n" + std::to_string(t.total()) + "\n";
    case Format::table: break;
  }
  return std::to_string(t.total()) + "\n";
}

std::string render_check(const CheckReport& r, Format f) {
  switch (f) {
    case Format::json: return r.to_json().dump(2) + "\n";
    case Format::csv: return "check,status\n" + r.check + "," + r.status + "\n";
    case Format::table: break;
  }
  std::string s = r.check + ": " + r.status + "\n";
  for (const auto& [k, v] : r.witnesses.items()) s += "  " + k + " = " + v.dump() + "\n";
  return s;
}

std::int64_t read_table_total(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "' is not a rank table: " + e.what());
  }
  try {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_object() && j.contains("total")) return j.at("total").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "': bad total: " + e.what());
  }
  throw InputError("'" + path + "' has no total");
}

}  // namespace hfk
