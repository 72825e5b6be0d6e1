/**
 * Copyright quasishift contributors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "quasishift/quasishift.h"

namespace {

int run_command(const std::string &config, const std::string &out_dir,
                const std::optional<std::uint64_t> &seed, bool quiet) {
  qs_report *report = nullptr;
  const qs_status status = qs_run_config(config.c_str(), out_dir.empty() ? nullptr : out_dir.c_str(),
                                         seed ? &*seed : nullptr, &report);
  if (report) {
    if (!quiet) std::cout << qs_report_summary(report);
    std::cout << "csv: " << qs_report_csv_path(report) << "\njson: " << qs_report_json_path(report)
              << '\n';
    qs_report_destroy(report);
  }
  switch (status) {
    case QS_OK:
      return 0;
    case QS_CONFIG_ERROR:
      std::cerr << "config error: " << qs_last_error() << '\n';
      return 2;
    default:
      std::cerr << "error: " << qs_last_error() << '\n';
      return 1;
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quasifree shift experiments"};
  app.set_version_flag("--version", std::string(qs_version()));
  app.require_subcommand(1);

  auto *run = app.add_subcommand("run", "run one experiment config");
  std::string config, out_dir;
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  run->add_option("--config", config, "experiment config file")->required();
  run->add_option("--out", out_dir, "output directory for the CSV and JSON reports");
  run->add_option("--seed", seed, "random seed, overrides the config");
  run->add_flag("-q,--quiet", quiet, "print only the output paths");

  app.add_subcommand("list", "print experiment kinds and their parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    // Usage errors share the config-error status.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (app.got_subcommand("list")) {
    std::cout << qs_describe_kinds();
    return 0;
  }
  return run_command(config, out_dir, seed, quiet);
}
