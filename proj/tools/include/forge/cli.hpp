#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cheeger/arcgeom.hpp"
#include "cheeger/json_io.hpp"

namespace forge {

inline constexpr const char* kToolName = "cheeger-forge";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 2,
  kExitNoSolution = 3,
  kExitNumeric = 4,
  kExitUsage = 64,
};

// args exclude the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int exit_code(cheeger::ErrorKind k);

// Domain documents produced by `construct` for a spec object.
cheeger::Json construct_document(const cheeger::Json& spec);

struct Layer {
  std::string name;  // omega, cheeger_set, inner, contact
  std::vector<cheeger::ArcGon> loops;
  std::vector<cheeger::ArcEdge> strokes;  // open pieces, contact highlights
  std::vector<cheeger::Point> dots;
};

std::string render_svg(const std::vector<Layer>& layers, int width_px = 800);

}  // namespace forge
