#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace gaussvd::cli;
  CLI::App app{"gaussvd: value distribution of generalized Gauss maps on annular ends"};
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("--config", opts.config, "JSON configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--mode", opts.mode, "ramification mode")->check(CLI::IsMember({"min-order", "liminf"}));
    sub->add_flag("--strict", opts.strict, "fail on boundary-ambiguous zeros");
    sub->add_option("--precision", opts.precision, "evaluation precision in bits")->check(CLI::Range(16u, 4096u));
    sub->add_option("--out", opts.out, "output directory");
  };

  auto* analyze = app.add_subcommand("analyze", "run the full theorem check on a surface or curve");
  auto* nochka = app.add_subcommand("nochka", "compute Nochka weights for a hyperplane set");
  auto* position = app.add_subcommand("position", "report subgeneral position of a hyperplane set");
  auto* metric = app.add_subcommand("metric", "build the singular flat metric and run its diagnostics");
  for (auto* sub : {analyze, nochka, position, metric}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  if (analyze->parsed()) return cmd_analyze(opts);
  if (nochka->parsed()) return cmd_nochka(opts);
  if (position->parsed()) return cmd_position(opts);
  return cmd_metric(opts);
}
