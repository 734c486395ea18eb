#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cohom/catalog/catalog.hpp"

namespace cohom::cli {

enum class Command { Catalog, CheckTriple, ClassifyCross, Wallach, VerifyGeometry };
enum class Format { Json, Markdown };

struct RunConfig {
  Command command = Command::Catalog;
  std::string catalog_path;
  Format format = Format::Markdown;
  std::string out_path;
  std::map<std::string, double> tolerances;
  std::vector<std::string> models;
  /// Positional argument: triple file, family or model id.
  std::string argument;
  std::string input_path;
  std::string models_path;
  /// Directory for Killing-profile CSV files; empty means none.
  std::string csv_dir;
  int wallach_n_max = 6;
};

struct Report {
  nlohmann::json json;
  std::string markdown;
  bool pass = true;
};

Report run_catalog(const catalog::Catalog& cat);
Report run_check_triple(const RunConfig& cfg, const catalog::Catalog& cat);
Report run_classify_cross(const RunConfig& cfg, const catalog::Catalog& cat);
Report run_wallach(const RunConfig& cfg, const catalog::Catalog& cat);
Report run_verify_geometry(const RunConfig& cfg);

/// Exit status: 0 when every requested check passes, 1 when one fails,
/// 2 for schema errors in the catalog or an input file.
int run(const RunConfig& cfg);

}  // namespace cohom::cli
