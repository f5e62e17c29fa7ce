#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include <staircase/cli.hpp>

namespace sc = staircase;

int main(int argc, char** argv) {
  CLI::App app{
      "exact enumeration, closed forms, and asymptotics for surface-adsorbed "
      "staircase polygons under a pulling force"};
  app.require_subcommand(1);

  int n_enum = 2, n_part = 40, n_grid = 40, grid = 0, parity = 0;
  std::string cls = "S", family = "G", kind = "grafted";
  double a = 1.0, y = 1.0;
  std::string a_range = "0.5:8:9:log", y_range = "0.5:8:9:log";
  std::string format_part = "json", format_grid = "csv", format_rep = "csv";
  std::string out, config, suite = "all";

  auto* c_enum = app.add_subcommand(
      "enumerate", "exact partition polynomial of one class, JSON");
  c_enum->add_option("--n", n_enum, "half-length (steps per path)");
  c_enum->add_option("--class", cls, "polygon class: S, G, C, GC");
  c_enum->add_option("--out", out, "output file (default stdout)");
  c_enum->add_option("--config", config, "key=value config file");

  auto* c_part = app.add_subcommand(
      "partition", "numeric partition value of one family at (a, y, n)");
  c_part->add_option("--class", family, "family: S, G, C, GC, SG");
  c_part->add_option("--n", n_part, "half-length");
  c_part->add_option("--a", a, "surface-visit fugacity");
  c_part->add_option("--y", y, "mid-height fugacity");
  c_part->add_option("--format", format_part, "csv or json");
  c_part->add_option("--out", out, "output file (default stdout)");
  c_part->add_option("--config", config, "key=value config file");

  auto* c_grid = app.add_subcommand(
      "phase-grid", "sweep closed-form and finite-n thermodynamics");
  c_grid->add_option("--kind", kind,
                     "path, grafted, centred, staircase, semigrafted");
  c_grid->add_option("--n", n_grid, "half-length for finite-n estimates");
  c_grid->add_option("--a-range", a_range, "lo:hi:count[:log|:linear]");
  c_grid->add_option("--y-range", y_range, "lo:hi:count[:log|:linear]");
  c_grid->add_option("--grid", grid, "override both range counts");
  c_grid->add_option("--format", format_grid, "csv or json");
  c_grid->add_option("--out", out, "output file (default stdout)");
  c_grid->add_option("--config", config, "key=value config file");

  auto* c_verify = app.add_subcommand(
      "verify", "run an acceptance suite and report pass/fail");
  c_verify->add_option("suite", suite,
                       "oracle, bounds, asymptotics, appendix, or all");
  c_verify->add_option("--out", out, "JSON report file");
  c_verify->add_option("--config", config, "key=value config file");

  auto* c_rep = app.add_subcommand(
      "asymptotics-report", "growth, exponent, amplitude, and scan report");
  c_rep->add_option("--parity", parity, "ladder residue mod 4: 0..3");
  c_rep->add_option("--format", format_rep, "csv or json");
  c_rep->add_option("--out", out, "output file (default stdout)");
  c_rep->add_option("--config", config, "key=value config file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // config file fills in flags not given on the command line
  auto apply_config = [&](CLI::App* sub) {
    if (config.empty()) return;
    auto cfg = sc::cli::parse_config(config);
    auto fill = [&](const char* flag, const char* key, auto&& setter) {
      auto* opt = sub->get_option_no_throw(flag);
      if (opt == nullptr || opt->count() > 0) return;
      if (auto it = cfg.find(key); it != cfg.end()) setter(it->second);
    };
    fill("--n", "n", [&](const std::string& v) {
      n_enum = n_part = n_grid = std::stoi(v);
    });
    fill("--class", "class", [&](const std::string& v) { cls = family = v; });
    fill("--kind", "kind", [&](const std::string& v) { kind = v; });
    fill("--a", "a", [&](const std::string& v) { a = std::stod(v); });
    fill("--y", "y", [&](const std::string& v) { y = std::stod(v); });
    fill("--a-range", "a-range",
         [&](const std::string& v) { a_range = v; });
    fill("--y-range", "y-range",
         [&](const std::string& v) { y_range = v; });
    fill("--grid", "grid", [&](const std::string& v) { grid = std::stoi(v); });
    fill("--format", "format", [&](const std::string& v) {
      format_part = format_grid = format_rep = v;
    });
    fill("--out", "out", [&](const std::string& v) { out = v; });
    fill("--parity", "parity",
         [&](const std::string& v) { parity = std::stoi(v); });
  };

  try {
    if (c_enum->parsed()) {
      apply_config(c_enum);
      sc::cli::write_output(sc::cli::cmd_enumerate(n_enum, cls), out);
      return 0;
    }
    if (c_part->parsed()) {
      apply_config(c_part);
      if (format_part != "csv" && format_part != "json")
        throw std::invalid_argument("format must be csv or json");
      sc::cli::write_output(
          sc::cli::cmd_partition(family, n_part, a, y, format_part), out);
      return 0;
    }
    if (c_grid->parsed()) {
      apply_config(c_grid);
      if (format_grid != "csv" && format_grid != "json")
        throw std::invalid_argument("format must be csv or json");
      sc::cli::Range ar = sc::cli::parse_range(a_range);
      sc::cli::Range yr = sc::cli::parse_range(y_range);
      if (grid > 0) ar.count = yr.count = grid;
      sc::cli::write_output(
          sc::cli::cmd_phase_grid(sc::model_kind_from_string(kind), n_grid,
                                  ar, yr, format_grid),
          out);
      return 0;
    }
    if (c_verify->parsed()) {
      apply_config(c_verify);
      auto v = sc::cli::cmd_verify(suite);
      std::fputs(v.table.c_str(), stdout);
      if (!out.empty()) sc::cli::write_output(v.json_report, out);
      return v.all_passed ? 0 : 1;
    }
    if (c_rep->parsed()) {
      apply_config(c_rep);
      if (format_rep != "csv" && format_rep != "json")
        throw std::invalid_argument("format must be csv or json");
      sc::cli::write_output(sc::cli::cmd_asymptotics_report(parity, format_rep),
                            out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
