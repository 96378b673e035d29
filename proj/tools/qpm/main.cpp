// qpm: run one scenario sweep and write (omega, Re, Im) tables.
//
//   qpm metamolecule --config configs/fig2.cfg --out out/fig2.csv
//   qpm qd-ring --grid "-1.5e13:1.5e13:3001" --format json
//
// Log level comes from QPM_LOG_LEVEL (trace, debug, info, warn, error, off).

#include <spdlog/cfg/helpers.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "qpm/config.hpp"
#include "qpm/errors.hpp"
#include "qpm/output.hpp"
#include "qpm/scenario.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kConfigError = 2,
  kSolverError = 3,
  kIoError = 4,
};

struct Options {
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string grid;
  std::string variant;
  int threads = -1;
  bool print_config = false;
};

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("qpm");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("QPM_LOG_LEVEL")) spdlog::cfg::helpers::load_levels(level);
}

std::vector<qpm::ScenarioConfig> resolve(qpm::ScenarioKind kind, const Options& opt) {
  std::vector<qpm::ScenarioConfig> configs =
      opt.config_path.empty() ? std::vector{qpm::default_config(kind)}
                              : qpm::load_config_file(opt.config_path, kind);

  if (!opt.variant.empty()) {
    std::erase_if(configs, [&](const auto& c) { return c.variant != opt.variant; });
    if (configs.empty()) throw qpm::ConfigError("--variant: no variant named '" + opt.variant + "'");
  }

  std::optional<qpm::GridSpec> grid;
  if (!opt.grid.empty()) grid = qpm::parse_grid_arg(opt.grid);

  for (auto& cfg : configs) {
    if (grid) cfg.grid = *grid;
    if (!opt.format.empty()) {
      cfg.output_format = opt.format == "json" ? qpm::OutputFormat::kJson : qpm::OutputFormat::kCsv;
    }
    if (!opt.out_path.empty()) cfg.output_path = opt.out_path;
    if (opt.threads >= 0) cfg.threads = static_cast<unsigned>(opt.threads);
  }
  if (configs.size() > 1 && configs.front().output_path.empty()) {
    throw qpm::ConfigError("config defines " + std::to_string(configs.size()) +
                           " variants; give --out (or output.path) so each gets its own file");
  }
  return configs;
}

int run(qpm::ScenarioKind kind, const Options& opt) {
  const std::vector<qpm::ScenarioConfig> configs = resolve(kind, opt);
  if (opt.print_config) {
    for (const auto& cfg : configs) std::cout << "---\n" << qpm::serialize_config(cfg);
    return kOk;
  }
  for (const auto& cfg : configs) {
    const qpm::ResultTable table = qpm::run_scenario(cfg);
    if (cfg.output_path.empty()) {
      std::cout << (cfg.output_format == qpm::OutputFormat::kCsv ? qpm::to_csv(table)
                                                                   : qpm::to_json(table));
      continue;
    }
    const auto path = qpm::output_path_for(cfg.output_path, cfg.variant, cfg.output_format);
    qpm::write_output(table, path, cfg.output_format);
    spdlog::info("wrote {} rows to {}", table.rows.size(), path.string());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"Quantum plasmonic metamaterial sweeps"};
  app.set_version_flag("--version", qpm::code_version());
  app.require_subcommand(1);

  Options opt;
  std::optional<qpm::ScenarioKind> chosen;

  const std::vector<std::pair<qpm::ScenarioKind, std::string>> commands = {
      {qpm::ScenarioKind::kMetamolecule, "Polarizability of one MNP-QD pair (weak drive)"},
      {qpm::ScenarioKind::kBareRing, "Effective permeability of a medium of bare MNP rings"},
      {qpm::ScenarioKind::kQdRing, "Effective permeability with a QD ring inside each MNP ring"},
      {qpm::ScenarioKind::kNonlinear, "MNP-QD polarizability from the Lindblad steady state"},
  };
  for (const auto& [kind, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(qpm::to_string(kind)), help);
    sub->add_option("--config", opt.config_path, "Scenario config (YAML)")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_path,
                    "Output file; variants write <stem>.<variant>.<ext>. Default: stdout");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--grid", opt.grid,
                    "Absolute sweep start:stop:points in rad/s (or with a THz suffix)");
    sub->add_option("--variant", opt.variant, "Run only the named variant");
    sub->add_option("--threads", opt.threads, "Worker threads for nonlinear sweeps (0 = all)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--print-config", opt.print_config,
                  "Print the resolved config(s) instead of running");
    sub->callback([&chosen, kind = kind] { chosen = kind; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    return run(*chosen, opt);
  } catch (const qpm::ConfigError& e) {
    spdlog::error("config error: {}", e.what());
    return kConfigError;
  } catch (const qpm::DomainError& e) {
    spdlog::error("invalid input: {}", e.what());
    return kConfigError;
  } catch (const qpm::NumericalError& e) {
    spdlog::error("solver error: {}", e.what());
    return kSolverError;
  } catch (const qpm::IoError& e) {
    spdlog::error("i/o error: {}", e.what());
    return kIoError;
  } catch (const std::exception& e) {
    spdlog::error("unexpected error: {}", e.what());
    return kUnexpected;
  }
}
