#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>

namespace diffalg::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsageError = 2 };

// Runs one invocation. `args` excludes the program name. The record goes to
// `out`; diagnostics for non-zero exits go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Parses text-mode output back into its flattened key/value form, the same
// shape `flatten_record` produces from a machine-mode line.
std::map<std::string, std::string> parse_text_record(const std::string& text);
std::map<std::string, std::string> flatten_record(const std::string& machine_line);

}  // namespace diffalg::cli
