#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "brauer/catalog.hpp"
#include "brauer/primitivity.hpp"

namespace brauer {

inline constexpr int kReportSchemaVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,      // parse or validation failure
  kExitResource = 2,   // order bound or work limit exceeded
  kExitMismatch = 3,   // classification or axiom mismatch
};

struct ReportOptions {
  bool emit_relations = false;
  bool timing = false;
  double seconds = 0;
};

/// Resolves a --group argument: inline JSON, "catalog:<name>", a family
/// shorthand such as cyclic(6) or elementary_abelian(2,2), or a file path.
/// Throws ParseError, ValidationError.
GroupSpec resolve_group_argument(std::string_view arg);

/// Canonical report: sorted keys, vectors in subgroup class order.
nlohmann::json report_json(const PrimReport& report, const GroupSpec& spec,
                           const BuiltGroup& built, const ReportOptions& options);

/// Entry point of the command-line tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauer
