#pragma once

#include "bredon/io.hpp"

namespace bredon::engine {

struct Flags {
  int k = 0;
  int n = 0;
  bool reduced = false;
  bool json = false;
  std::size_t subgroup = 0;   // family index, for indres
  std::string module;         // coefficient module name, overrides manifest
};

struct CommandResult {
  int code = 0;  // 0 ok / consistent, 2 validation error, 3 theorem violation
  std::string report;
};

/// Dispatch one command against a loaded workspace.  Unknown commands and
/// precondition failures surface as code 2 with the error in the report.
CommandResult run(const io::Workspace& ws, const std::string& command,
                  const Flags& flags);

/// Convenience wrapper: load the manifest, then run.
CommandResult run_file(const std::string& command,
                       const std::string& manifest_path, const Flags& flags);

}  // namespace bredon::engine
