#ifndef GAUSSVD_TOOLS_COMMANDS_HPP
#define GAUSSVD_TOOLS_COMMANDS_HPP

#include <optional>
#include <string>

namespace gaussvd::cli {

enum ExitCode : int { kOk = 0, kError = 1, kViolated = 2, kTheoremSatisfied = 3 };

struct Options {
  std::string config;
  std::string out = ".";
  std::optional<std::string> mode;
  bool strict = false;
  std::optional<unsigned> precision;
};

int cmd_analyze(const Options& opts);
int cmd_nochka(const Options& opts);
int cmd_position(const Options& opts);
int cmd_metric(const Options& opts);

}  // namespace gaussvd::cli

#endif  // GAUSSVD_TOOLS_COMMANDS_HPP
