#pragma once

#include <ostream>
#include <string>

#include "flagtri/search.hpp"

namespace flagtri {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitParse = 2, kExitDomain = 3 };

/// Runs `flagtri` with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Writes <short_id>.txt and <short_id>.json into `dir` (created if
/// missing). Returns the base path without extension.
std::string write_archive_entry(const std::string& dir, const ArchiveEntry& entry,
                                const std::string& label, const std::string& objective);

}  // namespace flagtri
