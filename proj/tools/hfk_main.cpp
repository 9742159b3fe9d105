#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hfk/builders.hpp"
#include "hfk/errors.hpp"
#include "hfk/fuzz.hpp"
#include "hfk/grid.hpp"
#include "hfk/report.hpp"
#include "hfk/symmetry.hpp"

using namespace hfk;

namespace {

enum class InputKind { diagram, grid };

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

InputKind detect(const std::string& path) {
  if (ends_with(path, ".hd.json")) return InputKind::diagram;
  if (ends_with(path, ".grid")) return InputKind::grid;
  throw InputError("cannot tell the input kind of '" + path + "' (expected .hd.json or .grid)");
}

struct Config {
  std::string format = "table";
  std::uint64_t budget = 0;  // 0: default or HFK_BUDGET
  int jobs = 1;

  std::uint64_t effective_budget() const { return budget ? budget : generator_budget_from_env(); }
  DifferentialOptions diff() const { return {jobs, false}; }
};

std::vector<std::string> class_labels(const Analysis& a) {
  std::vector<std::string> out;
  for (const auto& l : partition(a).labels) out.push_back(AbelianGroup::element_string(l));
  return out;
}

// ---------------------------------------------------------------- commands

int cmd_validate(const std::string& path, const Config& cfg) {
  Format f = parse_format(cfg.format);
  ojson j;
  j["source"] = path;
  std::vector<std::string> problems;
  if (detect(path) == InputKind::grid) {
    GridDiagram g = load_grid_file(path);  // throws on structural errors
    j["kind"] = "grid";
    j["size"] = g.n;
    j["components"] = grid_components(g);
  } else {
    PointedDiagram d = load_diagram_file(path);
    problems = validate(d).problems;
    j["kind"] = "diagram";
    if (problems.empty()) {
      Analysis a(d, cfg.effective_budget());
      j["genus"] = d.genus;
      j["curves"] = d.d();
      j["points"] = d.points.size();
      j["regions"] = d.regions.size();
      j["h1"] = a.h1().describe();
      j["pd_k"] = AbelianGroup::element_string(recover_knot_data(d));
      j["nice"] = is_nice(d);
      j["weakly_admissible"] = is_weakly_admissible(d).admissible;
      j["extremely_weakly_admissible"] = is_extremely_weakly_admissible(d).admissible;
    }
  }
  j["valid"] = problems.empty();
  j["problems"] = problems;
  if (f == Format::json) {
    std::cout << j.dump(2) << "\n";
  } else if (f == Format::csv) {
    std::cout << "source,valid\n" << path << "," << (problems.empty() ? "true" : "false") << "\n";
  } else {
    std::cout << path << ": " << (problems.empty() ? "valid" : "invalid") << "\n";
    for (const auto& [k, v] : j.items())
      if (k != "source" && k != "valid" && k != "problems") std::cout << "  " << k << " = " << v.dump() << "\n";
    for (const auto& p : problems) std::cout << "  problem: " << p << "\n";
  }
  return problems.empty() ? 0 : static_cast<int>(ExitCode::input);
}

int cmd_homology(const std::string& path, bool total_only, bool tilde, const Config& cfg) {
  Format f = parse_format(cfg.format);
  RankTable t;
  TableInfo info;
  info.source = path;
  if (detect(path) == InputKind::grid) {
    GridDiagram g = load_grid_file(path);
    GridComplex gc = tilde_complex(g, cfg.effective_budget());
    RankTable tt = homology(gc.complex);
    t = tilde ? tt : poly_to_table(hat_deconvolve(poincare_polynomial(tt), g.n));
    info.grading = "absolute";
  } else {
    Analysis a(load_diagram_file(path), cfg.effective_budget());
    t = homology(differential(a, cfg.diff()));
    info.h1 = a.h1().describe();
    info.labels = class_labels(a);
    info.grading = "relative";
  }
  std::cout << (total_only ? render_total(t, f) : render_table(t, info, f));
  return 0;
}

int cmd_symmetry(const std::string& path, const std::string& check, const Config& cfg) {
  Format f = parse_format(cfg.format);
  PointedDiagram d = detect(path) == InputKind::grid ? grid_to_pointed(load_grid_file(path)) : load_diagram_file(path);
  Analysis a(d, cfg.effective_budget());
  CheckReport r;
  if (check == "point-swap") {
    r = point_swap_check(a, cfg.diff());
  } else if (check == "conjugation") {
    r = conjugation_check(a, cfg.diff());
  } else if (check == "knot-conjugation") {
    r = knot_conjugation_check(a, cfg.diff());
  } else if (check == "evenness") {
    r = evenness_check(a, cfg.diff());
  } else {
    throw InputError("unknown check '" + check + "'");
  }
  std::cout << render_check(r, f);
  return 0;
}

int cmd_chern(const std::string& path, const std::string& domain, const std::string& generator, const Config& cfg) {
  Format f = parse_format(cfg.format);
  if (detect(path) != InputKind::diagram) throw InputError("chern needs a diagram file");
  Analysis a(load_diagram_file(path), cfg.effective_budget());
  const auto& d = a.diagram();
  int di = d.domain_index(domain);
  if (di < 0) throw InputError("no domain '" + domain + "' in " + path);
  DomainVector p(d.regions.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[r] = d.domains[di].multiplicity[r];

  if (!generator.empty()) {
    int gi = find_generator(d, a.generators(), generator);
    if (gi < 0) throw InputError("no generator '" + generator + "'");
    ChernValue v = chern_eval(d, p, a.generators()[gi]);
    ojson j;
    j["domain"] = domain;
    j["generator"] = generator;
    j["value"] = v.value.str();
    j["euler_char"] = v.euler_char;
    j["surface_genus"] = v.surface_genus;
    j["interior_points"] = v.interior_points;
    j["boundary_curves"] = v.boundary_curves;
    j["genus_hypothesis"] = v.genus_hypothesis;
    if (f == Format::json) {
      std::cout << j.dump(2) << "\n";
    } else if (f == Format::csv) {
      std::cout << "domain,generator,value\n" << domain << "," << generator << "," << v.value.str() << "\n";
    } else {
      std::cout << v.value.str() << "\n";
      for (const auto& [k, val] : j.items())
        if (k != "value") std::cout << "  " << k << " = " << val.dump() << "\n";
    }
    return 0;
  }
  CheckReport c = chern_constancy(a, p);
  CheckReport adj = adjunction_report(a, p, homology(differential(a, cfg.diff())));
  std::cout << render_check(c, f) << render_check(adj, f);
  return 0;
}

int cmd_triangle(const std::vector<std::string>& paths, const Config& cfg) {
  Format f = parse_format(cfg.format);
  std::vector<std::int64_t> totals;
  for (const auto& p : paths) {
    std::int64_t t = read_table_total(p);
    if (t < 0) throw InputError("'" + p + "' has a negative total");
    totals.push_back(t);
  }
  CheckReport r{"triangle", triangle_rank_consistency(totals[0], totals[1], totals[2]) ? "pass" : "violation"};
  r.witnesses["totals"] = totals;
  std::cout << render_check(r, f);
  return 0;
}

int cmd_fuzz(const std::string& kind, std::uint64_t seed, int count, int max_grid, int max_det, bool mutate,
             const Config& cfg) {
  Format f = parse_format(cfg.format);
  FuzzOptions opt;
  opt.kind = parse_fuzz_kind(kind);
  opt.seed = seed;
  opt.count = count;
  opt.max_grid = max_grid;
  opt.max_det = max_det;
  opt.budget = cfg.effective_budget();
  if (mutate) opt.mutate = self_loop_mutation;
  FuzzSummary s = run_fuzz(opt);
  ojson j = s.to_json();
  if (f == Format::json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fuzz " << kind << " seed " << seed << ": " << s.cases << " cases, " << s.checks << " checks, "
              << (s.ok() ? "all pass" : std::to_string(s.failures.size()) + " failing") << "\n";
    for (const auto& fl : s.failures) {
      std::cout << "case " << fl.case_index << " fails " << fl.property << ": " << fl.detail << "\n";
      std::cout << "reproducer:\n" << fl.reproducer;
    }
  }
  return s.ok() ? 0 : static_cast<int>(ExitCode::invariant);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot Floer homology of doubly pointed Heegaard diagrams and grid diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format: json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--budget", cfg.budget, "Generator budget (overrides HFK_BUDGET)")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads for the differential")->check(CLI::PositiveNumber);

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram or grid file");
  validate_cmd->add_option("path", path)->required();

  bool total_only = false, tilde = false;
  auto* homology_cmd = app.add_subcommand("homology", "Refined homology table");
  homology_cmd->add_option("path", path)->required();
  homology_cmd->add_flag("--total", total_only, "Print the grand total only");
  homology_cmd->add_flag("--tilde", tilde, "Grids: the tilde table instead of the hat table");

  std::string check;
  auto* symmetry_cmd = app.add_subcommand("symmetry", "Symmetry checks");
  symmetry_cmd->add_option("path", path)->required();
  symmetry_cmd->add_option("--check", check)
      ->required()
      ->check(CLI::IsMember({"point-swap", "conjugation", "knot-conjugation", "evenness"}));

  std::string domain, generator;
  auto* chern_cmd = app.add_subcommand("chern", "Chern class pairing with a stored 0/1 periodic domain");
  chern_cmd->add_option("path", path)->required();
  chern_cmd->add_option("--domain", domain)->required();
  chern_cmd->add_option("--generator", generator, "Comma separated point ids; omit for the class and adjunction checks");

  std::vector<std::string> tables;
  auto* triangle_cmd = app.add_subcommand("triangle", "Exact-triangle consistency of three rank totals");
  triangle_cmd->add_option("tables", tables)->required()->expected(3);

  std::string kind = "grids";
  std::uint64_t seed = 0;
  int count = 0, max_grid = 5, max_det = 8;
  bool mutate = false;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random property suite");
  fuzz_cmd->add_option("--kind", kind)->check(CLI::IsMember({"slopes", "grids"}));
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_option("--count", count)->check(CLI::NonNegativeNumber);
  fuzz_cmd->add_option("--max-grid", max_grid)->check(CLI::Range(2, 6));
  fuzz_cmd->add_option("--max-det", max_det)->check(CLI::Range(1, 64));
  fuzz_cmd->add_flag("--mutate", mutate, "Corrupt every differential (checks the failure path)");

  int lens_e = 1;
  auto* lens_cmd = app.add_subcommand("lens", "Print the genus one lens space diagram with H1 = Z/e");
  lens_cmd->add_option("e", lens_e)->required()->check(CLI::Range(1, 1000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::input);
  }

  try {
    if (*validate_cmd) return cmd_validate(path, cfg);
    if (*homology_cmd) return cmd_homology(path, total_only, tilde, cfg);
    if (*symmetry_cmd) return cmd_symmetry(path, check, cfg);
    if (*chern_cmd) return cmd_chern(path, domain, generator, cfg);
    if (*triangle_cmd) return cmd_triangle(tables, cfg);
    if (*fuzz_cmd) return cmd_fuzz(kind, seed, count, max_grid, max_det, mutate, cfg);
    if (*lens_cmd) {
      std::cout << diagram_to_json(lens_diagram(lens_e));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::invariant);
  }
  return 0;
}
