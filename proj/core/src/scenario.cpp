#include "qpm/scenario.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <cmath>

#include "qpm/errors.hpp"
#include "qpm/liouville.hpp"
#include "qpm/metamolecule.hpp"
#include "qpm/nanoring.hpp"
#include "qpm/output.hpp"

#ifndef QPM_VERSION
#define QPM_VERSION "unknown"
#endif

namespace qpm {

namespace {

void push_complex(ResultTable& table, double omega, cplx v) {
  table.rows.push_back({omega, v.real(), v.imag()});
}

ResultTable run_metamolecule(const ScenarioConfig& cfg, std::span<const double> grid) {
  const MetamoleculeParams p = cfg.metamolecule();
  const ComplexSpectrum s = polarizability_spectrum(p, grid);
  ResultTable t;
  for (std::size_t n = 0; n < s.omega.size(); ++n) push_complex(t, s.omega[n], s.values[n]);
  t.meta.emplace_back("quantity", "alpha");
  t.meta.emplace_back("units", "C m^2 / V");
  t.meta.emplace_back("g_rad_s", format_double(p.g));
  return t;
}

ResultTable run_ring(const ScenarioConfig& cfg, std::span<const double> grid) {
  const RingScenario r = cfg.ring();
  const std::vector<PermeabilityPoint> pts = permeability_spectrum(r, grid);
  ResultTable t;
  for (const PermeabilityPoint& pt : pts) push_complex(t, pt.omega, pt.mu_eff);
  t.meta.emplace_back("quantity", "mu_eff");
  t.meta.emplace_back("units", "dimensionless");
  t.meta.emplace_back("n_sites", std::to_string(cfg.geometry.n_sites));
  t.meta.emplace_back("qd_loaded", r.variant == RingVariant::kQdLoaded ? "true" : "false");
  return t;
}

ResultTable run_nonlinear(const ScenarioConfig& cfg, std::span<const double> grid) {
  const MetamoleculeParams p = cfg.metamolecule();
  SteadyStateOptions opts;
  opts.strategy = cfg.solver;
  const ComplexSpectrum s = nonlinear_spectrum(p, grid, cfg.hilbert, opts, cfg.threads);
  ResultTable t;
  for (std::size_t n = 0; n < s.omega.size(); ++n) push_complex(t, s.omega[n], s.values[n]);
  t.meta.emplace_back("quantity", "alpha");
  t.meta.emplace_back("units", "C m^2 / V");
  t.meta.emplace_back("fock_dim", std::to_string(cfg.hilbert.fock_dim));
  t.meta.emplace_back("e0_v_per_m", format_double(p.field));
  return t;
}

}  // namespace

std::string ResultTable::meta_value(const std::string& key) const {
  for (const auto& [k, v] : meta) {
    if (k == key) return v;
  }
  return {};
}

std::string code_version() { return QPM_VERSION; }

ResultTable run_scenario(const ScenarioConfig& cfg) {
  const std::vector<double> grid = cfg.frequencies();
  const std::string label =
      std::string(to_string(cfg.scenario)) + (cfg.variant.empty() ? "" : "/" + cfg.variant);
  if (!grid.empty() && !(grid.front() > 0.0)) {
    throw DomainError(label + ": sweep frequencies must be positive (grid starts at " +
                      format_double(grid.front()) + " rad/s)");
  }
  spdlog::info("running {} over {} points", label, grid.size());
  const auto t0 = std::chrono::steady_clock::now();

  ResultTable body;
  try {
    switch (cfg.scenario) {
      case ScenarioKind::kMetamolecule: body = run_metamolecule(cfg, grid); break;
      case ScenarioKind::kBareRing:
      case ScenarioKind::kQdRing: body = run_ring(cfg, grid); break;
      case ScenarioKind::kNonlinear: body = run_nonlinear(cfg, grid); break;
    }
  } catch (const NumericalError& err) {
    throw NumericalError(label + ": " + err.what(), err.diagnostics());
  } catch (const DomainError& err) {
    throw DomainError(label + ": " + err.what());
  }

  ResultTable t;
  t.meta = {
      {"scenario", std::string(to_string(cfg.scenario))},
      {"variant", cfg.variant},
      {"parameter_hash", parameter_hash(cfg)},
      {"code_version", code_version()},
      {"omega_0_rad_s", format_double(cfg.omega_0())},
      {"omega_x_rad_s", format_double(cfg.omega_x())},
      {"detuning_rad_s", format_double(cfg.detuning)},
      {"points", std::to_string(grid.size())},
  };
  t.meta.insert(t.meta.end(), body.meta.begin(), body.meta.end());
  t.rows = std::move(body.rows);
  for (const auto& row : t.rows) {
    if (!std::isfinite(row[1]) || !std::isfinite(row[2])) {
      throw NumericalError(label + ": non-finite value at omega = " + format_double(row[0]));
    }
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  spdlog::info("{} finished in {:.3f} s", label, secs);
  return t;
}

}  // namespace qpm
