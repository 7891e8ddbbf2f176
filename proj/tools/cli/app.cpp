#include "app.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "config.hpp"
#include "inflanow/errors.hpp"
#include "inflanow/version.hpp"

namespace inflanow::cli {
namespace {

constexpr const char* kExitHelp =
    "Exit codes:\n"
    "  0  success\n"
    "  1  internal error\n"
    "  2  configuration or usage error\n"
    "  3  data error (missing, malformed or insufficient input)\n"
    "  4  numerical error (singular design, invalid ratio base, degenerate test)\n";

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::config:
      return kExitConfig;
    case ErrorKind::data:
      return kExitData;
    case ErrorKind::numerical:
      return kExitNumerical;
  }
  return kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{fmt::format("inflanow {}: news-sentiment inflation nowcasting", kVersion),
               "inflanow"};
  app.footer(kExitHelp);
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path, out_dir;
  std::vector<std::string> overrides;
  app.add_option("-c,--config", config_path, "key = value configuration file");
  app.add_option("-o,--out", out_dir, "output directory (overrides the config)");
  app.add_option("-s,--set", overrides, "override a config entry, key=value (repeatable)");

  std::string spec_text;
  std::string month_text;
  auto* score = app.add_subcommand("score", "filter and score news articles");
  auto* build = app.add_subcommand("build-index", "aggregate scored articles into the NEWS index");
  auto* fit = app.add_subcommand("fit", "fit regression models on the training window");
  auto* now = app.add_subcommand("nowcast", "nowcast CPI inflation for one month");
  auto* back = app.add_subcommand("backtest", "nowcast the evaluation window and score it");
  auto* eval = app.add_subcommand("evaluate", "RMSE and Giacomini-White tests from forecasts.csv");
  for (auto* sub : {fit, now, back, eval}) {
    sub->add_option("--spec", spec_text,
                    "comma-separated specs (fed, news, fed+news, fed-gas+news, ccpi+news) or all");
  }
  now->add_option("--month", month_text, "target month YYYY-MM");

  std::vector<const char*> argv{"inflanow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    std::optional<std::filesystem::path> cfg_file, out_override;
    if (!config_path.empty()) cfg_file = config_path;
    if (!out_dir.empty()) out_override = out_dir;
    RunConfig cfg = load_config(cfg_file, overrides, out_override);

    std::vector<ModelSpec> specs = spec_text.empty() ? cfg.models : parse_model_list(spec_text);

    if (*score) {
      cmd_score(cfg, out, err);
    } else if (*build) {
      cmd_build_index(cfg, out, err);
    } else if (*fit) {
      cmd_fit(cfg, specs, out);
    } else if (*now) {
      std::optional<MonthKey> month;
      if (!month_text.empty()) {
        try {
          month = MonthKey::parse(month_text);
        } catch (const Error& e) {
          throw ConfigError(fmt::format("--month: {}", e.what()));
        }
      }
      cmd_nowcast(cfg, specs, month, out);
    } else if (*back) {
      cmd_backtest(cfg, specs, out);
    } else if (*eval) {
      std::vector<std::string> names;
      if (!spec_text.empty()) {
        for (const auto& s : specs) names.push_back(s.label());
      }
      cmd_evaluate(cfg, names, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace inflanow::cli
