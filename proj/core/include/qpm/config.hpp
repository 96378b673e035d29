#pragma once

// Scenario configuration: a YAML document with one section per physical
// subsystem plus grid/output settings and optional named variants.
//
//   scenario: qd-ring
//   qd: {detuning: 0.195e15}
//   grid: {start: -1.5e13, stop: 1.5e13, points: 30001, relative_to: omega_x}
//   variants:
//     - {name: with_qds}
//     - {name: without_qds, ring: {include_qds: false}}
//
// Frequencies are rad/s; string values may carry an explicit unit
// ("0.7 THz" is ordinary frequency, converted with 2 pi).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpm/liouville.hpp"
#include "qpm/materials.hpp"
#include "qpm/nanoring.hpp"

namespace qpm {

enum class ScenarioKind { kMetamolecule, kBareRing, kQdRing, kNonlinear };

std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> scenario_from_string(std::string_view name);

/// Default MNP-QD detuning omega_0 - omega_x: resonant for the single
/// metamolecule, red-shifted onto the ring resonance otherwise.
double default_detuning(ScenarioKind kind);

enum class OutputFormat { kCsv, kJson };

struct GridSpec {
  enum class Reference { kAbsolute, kOmega0, kOmegaX };

  double start = 0.0;  // rad/s, offset from the reference unless absolute
  double stop = 0.0;
  std::size_t points = 0;
  Reference reference = Reference::kAbsolute;

  bool operator==(const GridSpec&) const = default;
};

/// Parses "start:stop:points" (start/stop may carry units). Absolute grid.
GridSpec parse_grid_arg(std::string_view text);

GridSpec default_grid(ScenarioKind kind);

struct DriveSpec {
  enum class Kind { kEnergyMev, kFieldVPerM };
  Kind kind = Kind::kEnergyMev;
  double value = 1e-4;  // E0 mu in meV, or E0 in V/m

  bool operator==(const DriveSpec&) const = default;
};

struct ScenarioConfig {
  ScenarioKind scenario = ScenarioKind::kMetamolecule;
  std::string variant;  // empty unless produced from a `variants` entry

  MaterialParams material;
  double mnp_radius = 16e-9;
  double qd_dipole_radius = 0.9e-9;
  double gamma_x = 80e9;
  double detuning = 0.0;
  double separation = 32e-9;
  Orientation orientation = Orientation::kPerpendicular;
  double coupling_scale = 1.0;
  QdCouplingSign qd_sign = QdCouplingSign::kDerived;
  DriveSpec drive;

  RingGeometry geometry;
  double number_density = 1.0 / (96e-9 * 96e-9 * 96e-9);
  double h0 = 1.0;
  LatticeCorrection lattice = LatticeCorrection::kOff;
  bool include_qds = true;

  HilbertConfig hilbert;
  SolverStrategy solver = SolverStrategy::kAuto;
  unsigned threads = 1;

  GridSpec grid;
  std::string output_path;
  OutputFormat output_format = OutputFormat::kCsv;

  bool operator==(const ScenarioConfig&) const = default;

  /// Resolved sweep frequencies in rad/s.
  std::vector<double> frequencies() const;
  double omega_0() const;
  double omega_x() const { return omega_0() - detuning; }

  MetamoleculeParams metamolecule() const;
  RingScenario ring() const;
};

/// Defaults for a scenario (the published parameter set).
ScenarioConfig default_config(ScenarioKind kind);

/// Parses one document. `scenario` overrides/validates the document's
/// scenario key. Throws ConfigError naming the offending key. A document
/// with variants yields one config per variant, in order.
std::vector<ScenarioConfig> parse_config_set(std::string_view text,
                                             std::optional<ScenarioKind> scenario = {});

/// Single-config convenience; throws ConfigError if the document has variants.
ScenarioConfig parse_config(std::string_view text, std::optional<ScenarioKind> scenario = {});

std::vector<ScenarioConfig> load_config_file(const std::string& path,
                                             std::optional<ScenarioKind> scenario = {});

/// Canonical YAML rendering of every field at 17 significant digits.
std::string serialize_config(const ScenarioConfig& cfg);

/// FNV-1a 64 of the canonical rendering, as 16 hex digits.
std::string parameter_hash(const ScenarioConfig& cfg);

}  // namespace qpm
