#include <CLI11.hpp>

#include <iostream>

#include "cohom/geom/geom.hpp"
#include "commands.hpp"

using cohom::cli::Command;
using cohom::cli::Format;

int main(int argc, char** argv) {
  CLI::App app{"Cohomogeneity-one classification and verification driver"};
  app.footer(
      "Exit status: 0 when every requested check passes (inconclusive verdicts count as results), 1 on a failed "
      "check or runtime error, 2 on a schema error in the catalog or an input file.\n"
      "Environment: COHOM_CATALOG sets the default catalog path.\n"
      "Tolerance names: sff, identity, geodesic, flat, step_halving; values in [1e-12, 1e-2].");
  app.require_subcommand(1);

  cohom::cli::RunConfig cfg;
  std::string format = "markdown";
  std::vector<std::string> tolerances;

  app.add_option("--catalog", cfg.catalog_path, "Catalog JSON file (default: $COHOM_CATALOG or the installed one)")
      ->check(CLI::ExistingFile);
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write the report here instead of stdout");
  app.add_option("--tolerance", tolerances, "Override a geometry tolerance, name=value (repeatable)");
  app.add_option("--models", cfg.models, "Geometry check ids to run (comma separated)")->delimiter(',');

  auto* cat = app.add_subcommand("catalog", "Dump groups, sphere-transitive representations, embeddings and the G1/H1 list");
  auto* check = app.add_subcommand("check-triple", "Admissibility checks and totally-geodesic criteria for a triple");
  check->add_option("file", cfg.argument, "Triple JSON file")->required()->check(CLI::ExistingFile);
  auto* cross = app.add_subcommand("classify-cross", "Singular orbits of cohomogeneity-one actions on rank-one symmetric spaces");
  cross->add_option("family", cfg.argument, "sphere, real_proj, complex_proj, quat_proj or cayley_plane");
  auto* wal = app.add_subcommand("wallach", "Row filter and candidate tables, or the decision trace for one triple");
  wal->add_option("--input", cfg.input_path, "Triple JSON file; optional key positive_curvature (default true)")
      ->check(CLI::ExistingFile);
  wal->add_option("--n-max", cfg.wallach_n_max, "Largest row parameter")->capture_default_str()->check(CLI::Range(2, 16));
  auto* geo = app.add_subcommand("verify-geometry", "Numerical second fundamental form and Killing-field checks");
  geo->add_option("model", cfg.argument, "Single check id");
  geo->add_option("--suite", cfg.models_path, "Model suite JSON (default: shipped models.json)")->check(CLI::ExistingFile);
  geo->add_option("--csv-dir", cfg.csv_dir, "Write Killing-field profiles as CSV files into this directory");

  CLI11_PARSE(app, argc, argv);

  cfg.format = format == "json" ? Format::Json : Format::Markdown;
  if (*cat) cfg.command = Command::Catalog;
  else if (*check) cfg.command = Command::CheckTriple;
  else if (*cross) cfg.command = Command::ClassifyCross;
  else if (*wal) cfg.command = Command::Wallach;
  else cfg.command = Command::VerifyGeometry;

  cohom::geom::Tolerances probe;
  for (const auto& t : tolerances) {
    const auto eq = t.find('=');
    try {
      if (eq == std::string::npos) throw std::invalid_argument("expected name=value");
      const auto name = t.substr(0, eq);
      const double value = std::stod(t.substr(eq + 1));
      probe.set(name, value);
      cfg.tolerances[name] = value;
    } catch (const std::exception& e) {
      std::cerr << "--tolerance " << t << ": " << e.what() << "\n";
      return 1;
    }
  }
  return cohom::cli::run(cfg);
}
