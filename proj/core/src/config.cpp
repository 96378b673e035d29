#include "qpm/config.hpp"

#include <yaml-cpp/yaml.h>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qpm/errors.hpp"
#include "qpm/metamolecule.hpp"

namespace qpm {

namespace {

constexpr std::array<std::pair<ScenarioKind, std::string_view>, 4> kScenarioNames{{
    {ScenarioKind::kMetamolecule, "metamolecule"},
    {ScenarioKind::kBareRing, "bare-ring"},
    {ScenarioKind::kQdRing, "qd-ring"},
    {ScenarioKind::kNonlinear, "nonlinear"},
}};

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

/// Checked access to one YAML mapping; every key read is recorded so
/// leftovers can be reported as unknown.
class Section {
 public:
  Section(const YAML::Node& node, std::string path) : node_(node), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      throw ConfigError(label() + ": expected a mapping");
    }
  }

  bool has(const std::string& key) {
    known_.insert(key);
    return node_ && node_.IsMap() && node_[key];
  }

  YAML::Node child(const std::string& key) {
    known_.insert(key);
    return node_ && node_.IsMap() ? node_[key] : YAML::Node();
  }

  std::string key_path(const std::string& key) const { return join(path_, key); }

  void number(const std::string& key, double& out) {
    if (!has(key)) return;
    out = as_number(node_[key], key_path(key));
  }

  void frequency(const std::string& key, double& out) {
    if (!has(key)) return;
    const YAML::Node v = node_[key];
    if (!v.IsScalar()) throw ConfigError(key_path(key) + ": expected a frequency");
    double parsed = 0.0;
    if (try_number(v.Scalar(), parsed)) {
      out = parsed;
      return;
    }
    try {
      out = parse_frequency(v.Scalar());
    } catch (const DomainError& err) {
      throw ConfigError(key_path(key) + ": expected a frequency (number in rad/s or '<x> THz'): " +
                        err.what());
    }
  }

  void integer(const std::string& key, int& out) {
    if (!has(key)) return;
    const double v = as_number(node_[key], key_path(key));
    if (v != std::floor(v) || std::abs(v) > 1e9) {
      throw ConfigError(key_path(key) + ": expected an integer");
    }
    out = static_cast<int>(v);
  }

  void boolean(const std::string& key, bool& out) {
    if (!has(key)) return;
    const YAML::Node v = node_[key];
    const std::string s = v.IsScalar() ? v.Scalar() : "";
    if (s == "true") {
      out = true;
    } else if (s == "false") {
      out = false;
    } else {
      throw ConfigError(key_path(key) + ": expected a boolean (true/false)");
    }
  }

  void string(const std::string& key, std::string& out) {
    if (!has(key)) return;
    const YAML::Node v = node_[key];
    if (!v.IsScalar()) throw ConfigError(key_path(key) + ": expected a string");
    out = v.Scalar();
  }

  template <typename Enum, std::size_t N>
  void choice(const std::string& key, Enum& out,
              const std::array<std::pair<Enum, std::string_view>, N>& options) {
    if (!has(key)) return;
    std::string s;
    string(key, s);
    for (const auto& [value, name] : options) {
      if (name == s) {
        out = value;
        return;
      }
    }
    std::string expected;
    for (const auto& [value, name] : options) {
      expected += (expected.empty() ? "" : "|") + std::string(name);
    }
    throw ConfigError(key_path(key) + ": expected one of " + expected + ", got '" + s + "'");
  }

  /// Throws on any key that was never queried.
  void finish() const {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& kv : node_) {
      const std::string key = kv.first.as<std::string>();
      if (!known_.contains(key)) throw ConfigError(key_path(key) + ": unknown key");
    }
  }

 private:
  std::string label() const { return path_.empty() ? "document" : path_; }

  static bool try_number(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (begin != end && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
  }

  static double as_number(const YAML::Node& v, const std::string& path) {
    double out = 0.0;
    if (!v.IsScalar() || !try_number(v.Scalar(), out)) {
      throw ConfigError(path + ": expected a number");
    }
    return out;
  }

  YAML::Node node_;
  std::string path_;
  std::set<std::string> known_;
};

constexpr std::array<std::pair<OhmicCorrection, std::string_view>, 2> kOhmicNames{{
    {OhmicCorrection::kDimensional, "dimensional"},
    {OhmicCorrection::kAsPrinted, "printed"},
}};
constexpr std::array<std::pair<Orientation, std::string_view>, 2> kOrientationNames{{
    {Orientation::kParallel, "parallel"},
    {Orientation::kPerpendicular, "perpendicular"},
}};
constexpr std::array<std::pair<QdCouplingSign, std::string_view>, 2> kQdSignNames{{
    {QdCouplingSign::kDerived, "derived"},
    {QdCouplingSign::kAsPrinted, "printed"},
}};
constexpr std::array<std::pair<SolverStrategy, std::string_view>, 3> kSolverNames{{
    {SolverStrategy::kAuto, "auto"},
    {SolverStrategy::kSparse, "sparse"},
    {SolverStrategy::kDense, "dense"},
}};
constexpr std::array<std::pair<GridSpec::Reference, std::string_view>, 3> kReferenceNames{{
    {GridSpec::Reference::kAbsolute, "absolute"},
    {GridSpec::Reference::kOmega0, "omega_0"},
    {GridSpec::Reference::kOmegaX, "omega_x"},
}};
constexpr std::array<std::pair<OutputFormat, std::string_view>, 2> kFormatNames{{
    {OutputFormat::kCsv, "csv"},
    {OutputFormat::kJson, "json"},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(Enum value, const std::array<std::pair<Enum, std::string_view>, N>& t) {
  for (const auto& [v, name] : t) {
    if (v == value) return name;
  }
  return "?";
}

void physical_check(const ScenarioConfig& cfg) {
  try {
    cfg.material.validate();
    if (!(cfg.mnp_radius > 0.0)) throw DomainError("mnp.radius_m must be positive");
    if (!(cfg.qd_dipole_radius > 0.0)) throw DomainError("qd.dipole_radius_m must be positive");
    if (!(cfg.gamma_x > 0.0)) throw DomainError("qd.gamma_x must be positive");
    if (!(cfg.drive.value >= 0.0)) throw DomainError("drive amplitude must be non-negative");
    if (cfg.grid.points > 1 && !(cfg.grid.stop > cfg.grid.start)) {
      throw DomainError("grid.stop must exceed grid.start");
    }
    switch (cfg.scenario) {
      case ScenarioKind::kMetamolecule:
        cfg.metamolecule();
        break;
      case ScenarioKind::kNonlinear:
        cfg.metamolecule();
        cfg.hilbert.validate();
        if (!(cfg.drive.value > 0.0)) throw DomainError("nonlinear scenario needs a drive > 0");
        break;
      case ScenarioKind::kBareRing:
      case ScenarioKind::kQdRing: {
        cfg.geometry.validate();
        if (cfg.scenario == ScenarioKind::kQdRing && cfg.include_qds && cfg.geometry.n_sites != 4) {
          throw DomainError("ring.n_sites must be 4 for a QD-loaded ring");
        }
        if (cfg.scenario == ScenarioKind::kQdRing &&
            !(cfg.geometry.same_site_separation() >= 2.0 * cfg.mnp_radius)) {
          throw DomainError("ring radii give an MNP-QD separation below 2r (dipole validity)");
        }
        if (!(cfg.number_density > 0.0)) throw DomainError("ring number density must be > 0");
        if (!(cfg.h0 > 0.0)) throw DomainError("ring.h0_a_per_m must be positive");
        break;
      }
    }
  } catch (const DomainError& err) {
    throw ConfigError(std::string("physical constraint violated: ") + err.what());
  }
}

void apply_document(const YAML::Node& root, ScenarioConfig& cfg, bool allow_variants) {
  Section top(root, "");
  top.has("scenario");  // resolved by the caller
  top.string("variant", cfg.variant);
  if (allow_variants) top.has("variants");

  {
    Section s(top.child("material"), "material");
    s.frequency("omega_p", cfg.material.omega_p);
    s.frequency("gamma", cfg.material.gamma);
    s.number("eps_inf", cfg.material.eps_inf);
    s.number("eps_b", cfg.material.eps_b);
    s.number("mu_b", cfg.material.mu_b);
    s.choice("ohmic_correction", cfg.material.ohmic, kOhmicNames);
    s.finish();
  }
  {
    Section s(top.child("mnp"), "mnp");
    s.number("radius_m", cfg.mnp_radius);
    s.finish();
  }
  {
    Section s(top.child("qd"), "qd");
    s.number("dipole_radius_m", cfg.qd_dipole_radius);
    s.frequency("gamma_x", cfg.gamma_x);
    s.frequency("detuning", cfg.detuning);
    s.finish();
  }
  {
    Section s(top.child("metamolecule"), "metamolecule");
    s.number("separation_m", cfg.separation);
    s.choice("orientation", cfg.orientation, kOrientationNames);
    s.finish();
  }
  {
    Section s(top.child("couplings"), "couplings");
    s.number("mnp_qd_scale", cfg.coupling_scale);
    s.choice("qd_sign", cfg.qd_sign, kQdSignNames);
    s.finish();
  }
  {
    Section s(top.child("drive"), "drive");
    const bool energy = s.has("e0mu_mev");
    const bool field = s.has("e0_v_per_m");
    if (energy && field) {
      throw ConfigError("drive: give either e0mu_mev or e0_v_per_m, not both");
    }
    if (energy) {
      cfg.drive.kind = DriveSpec::Kind::kEnergyMev;
      s.number("e0mu_mev", cfg.drive.value);
    }
    if (field) {
      cfg.drive.kind = DriveSpec::Kind::kFieldVPerM;
      s.number("e0_v_per_m", cfg.drive.value);
    }
    s.finish();
  }
  {
    Section s(top.child("ring"), "ring");
    s.integer("n_sites", cfg.geometry.n_sites);
    s.number("r_mnp_m", cfg.geometry.r_mnp);
    s.number("r_qd_m", cfg.geometry.r_qd);
    const bool density = s.has("number_density_m3");
    const bool period = s.has("lattice_period_m");
    if (density && period) {
      throw ConfigError("ring: give either number_density_m3 or lattice_period_m, not both");
    }
    s.number("number_density_m3", cfg.number_density);
    if (period) {
      double a = 0.0;
      s.number("lattice_period_m", a);
      if (!(a > 0.0)) throw ConfigError("ring.lattice_period_m: must be positive");
      cfg.number_density = 1.0 / (a * a * a);
    }
    s.number("h0_a_per_m", cfg.h0);
    bool lattice = cfg.lattice == LatticeCorrection::kOn;
    s.boolean("lattice_correction", lattice);
    cfg.lattice = lattice ? LatticeCorrection::kOn : LatticeCorrection::kOff;
    s.boolean("include_qds", cfg.include_qds);
    s.finish();
  }
  {
    Section s(top.child("liouville"), "liouville");
    s.integer("fock_dim", cfg.hilbert.fock_dim);
    s.choice("solver", cfg.solver, kSolverNames);
    int threads = static_cast<int>(cfg.threads);
    s.integer("threads", threads);
    if (threads < 0) throw ConfigError("liouville.threads: must be >= 0");
    cfg.threads = static_cast<unsigned>(threads);
    s.finish();
  }
  {
    Section s(top.child("grid"), "grid");
    s.frequency("start", cfg.grid.start);
    s.frequency("stop", cfg.grid.stop);
    int points = static_cast<int>(cfg.grid.points);
    s.integer("points", points);
    if (points < 0) throw ConfigError("grid.points: must be >= 0");
    cfg.grid.points = static_cast<std::size_t>(points);
    s.choice("relative_to", cfg.grid.reference, kReferenceNames);
    s.finish();
  }
  {
    Section s(top.child("output"), "output");
    s.string("path", cfg.output_path);
    s.choice("format", cfg.output_format, kFormatNames);
    s.finish();
  }
  top.finish();
}

YAML::Node merge(const YAML::Node& base, const YAML::Node& overlay) {
  if (!overlay.IsMap() || !base.IsMap()) return YAML::Clone(overlay);
  YAML::Node out = YAML::Clone(base);
  for (const auto& kv : overlay) {
    const std::string key = kv.first.as<std::string>();
    out[key] = out[key] ? merge(out[key], kv.second) : YAML::Clone(kv.second);
  }
  return out;
}

ScenarioKind resolve_scenario(const YAML::Node& root, std::optional<ScenarioKind> requested) {
  std::optional<ScenarioKind> in_doc;
  if (root.IsMap() && root["scenario"]) {
    const YAML::Node v = root["scenario"];
    if (!v.IsScalar()) throw ConfigError("scenario: expected a string");
    in_doc = scenario_from_string(v.Scalar());
    if (!in_doc) {
      throw ConfigError("scenario: expected one of metamolecule|bare-ring|qd-ring|nonlinear, got '" +
                        v.Scalar() + "'");
    }
  }
  if (requested && in_doc && *requested != *in_doc) {
    throw ConfigError("scenario: document is for '" + std::string(to_string(*in_doc)) +
                      "' but '" + std::string(to_string(*requested)) + "' was requested");
  }
  if (requested) return *requested;
  return in_doc.value_or(ScenarioKind::kMetamolecule);
}

ScenarioConfig build(const YAML::Node& doc, ScenarioKind kind, bool allow_variants) {
  ScenarioConfig cfg = default_config(kind);
  apply_document(doc, cfg, allow_variants);
  physical_check(cfg);
  return cfg;
}

void emit_double(YAML::Emitter& out, const char* key, double value) {
  out << YAML::Key << key << YAML::Value << value;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
  for (const auto& [k, name] : kScenarioNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<ScenarioKind> scenario_from_string(std::string_view name) {
  for (const auto& [k, n] : kScenarioNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

double default_detuning(ScenarioKind kind) {
  return kind == ScenarioKind::kMetamolecule ? 0.0 : 0.195e15;
}

GridSpec default_grid(ScenarioKind kind) {
  using R = GridSpec::Reference;
  switch (kind) {
    case ScenarioKind::kMetamolecule:
      return {-3e14, 3e14, 4001, R::kOmega0};
    case ScenarioKind::kBareRing:
      return {-6e14, 2e14, 4001, R::kOmega0};
    case ScenarioKind::kQdRing:
      return {-1.5e13, 1.5e13, 30001, R::kOmegaX};
    case ScenarioKind::kNonlinear:
      return {-1.5e12, 1.5e12, 241, R::kOmegaX};
  }
  return {};
}

GridSpec parse_grid_arg(std::string_view text) {
  const std::size_t first = text.find(':');
  const std::size_t second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) {
    throw ConfigError("--grid: expected start:stop:points, got '" + std::string(text) + "'");
  }
  GridSpec grid;
  try {
    grid.start = parse_frequency(text.substr(0, first));
    grid.stop = parse_frequency(text.substr(first + 1, second - first - 1));
  } catch (const DomainError& err) {
    throw ConfigError(std::string("--grid: ") + err.what());
  }
  const std::string_view pts = text.substr(second + 1);
  long long n = -1;
  const auto [ptr, ec] = std::from_chars(pts.data(), pts.data() + pts.size(), n);
  if (ec != std::errc{} || ptr != pts.data() + pts.size() || n < 0) {
    throw ConfigError("--grid: points must be a non-negative integer");
  }
  grid.points = static_cast<std::size_t>(n);
  grid.reference = GridSpec::Reference::kAbsolute;
  if (grid.points > 1 && !(grid.stop > grid.start)) {
    throw ConfigError("--grid: stop must exceed start");
  }
  return grid;
}

ScenarioConfig default_config(ScenarioKind kind) {
  ScenarioConfig cfg;
  cfg.scenario = kind;
  cfg.detuning = default_detuning(kind);
  cfg.grid = default_grid(kind);
  return cfg;
}

double ScenarioConfig::omega_0() const {
  return material.omega_p / std::sqrt(material.frohlich_sum());
}

std::vector<double> ScenarioConfig::frequencies() const {
  double offset = 0.0;
  switch (grid.reference) {
    case GridSpec::Reference::kAbsolute: break;
    case GridSpec::Reference::kOmega0: offset = omega_0(); break;
    case GridSpec::Reference::kOmegaX: offset = omega_x(); break;
  }
  return linear_grid(offset + grid.start, offset + grid.stop, grid.points);
}

MetamoleculeParams ScenarioConfig::metamolecule() const {
  const double e0mu_mev = drive.kind == DriveSpec::Kind::kEnergyMev ? drive.value : 0.0;
  MetamoleculeParams p =
      MetamoleculeParams::assemble(material, mnp_radius, qd_dipole_radius, gamma_x, detuning,
                                   separation, orientation, e0mu_mev, coupling_scale);
  if (drive.kind == DriveSpec::Kind::kFieldVPerM) p.field = drive.value;
  return p;
}

RingScenario ScenarioConfig::ring() const {
  RingScenario r;
  r.material = material;
  r.mnp_radius = mnp_radius;
  r.qd_dipole_radius = qd_dipole_radius;
  r.gamma_x = gamma_x;
  r.detuning = detuning;
  r.geometry = geometry;
  r.number_density = number_density;
  r.h0 = h0;
  r.lattice = lattice;
  r.system.qd_sign = qd_sign;
  r.system.mnp_qd_coupling_scale = coupling_scale;
  r.variant = scenario == ScenarioKind::kQdRing && include_qds ? RingVariant::kQdLoaded
                                                               : RingVariant::kBare;
  return r;
}

std::vector<ScenarioConfig> parse_config_set(std::string_view text,
                                             std::optional<ScenarioKind> scenario) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& err) {
    throw ConfigError(std::string("malformed config document: ") + err.what());
  }
  if (root && !root.IsNull() && !root.IsMap()) {
    throw ConfigError("document: expected a mapping at top level");
  }
  const ScenarioKind kind = resolve_scenario(root, scenario);

  if (!root.IsMap() || !root["variants"]) return {build(root, kind, true)};
  const YAML::Node variants = root["variants"];
  if (!variants.IsSequence() || variants.size() == 0) {
    throw ConfigError("variants: expected a non-empty sequence of mappings");
  }

  YAML::Node base = YAML::Clone(root);
  base.remove("variants");
  // Validate the base on its own so errors point at the right place.
  build(base, kind, false);

  std::vector<ScenarioConfig> out;
  std::set<std::string> names;
  for (std::size_t n = 0; n < variants.size(); ++n) {
    const YAML::Node v = variants[n];
    const std::string where = "variants[" + std::to_string(n) + "]";
    if (!v.IsMap()) throw ConfigError(where + ": expected a mapping");
    if (!v["name"] || !v["name"].IsScalar()) throw ConfigError(where + ".name: expected a string");
    const std::string name = v["name"].Scalar();
    if (!names.insert(name).second) throw ConfigError(where + ".name: duplicate '" + name + "'");
    if (v["scenario"] || v["variants"] || v["variant"]) {
      throw ConfigError(where + ": variants may not set scenario, variant or variants");
    }
    YAML::Node overlay = YAML::Clone(v);
    overlay.remove("name");
    YAML::Node merged = merge(base, overlay);
    merged["variant"] = name;
    try {
      out.push_back(build(merged, kind, false));
    } catch (const ConfigError& err) {
      throw ConfigError(where + " ('" + name + "'): " + err.what());
    }
  }
  return out;
}

ScenarioConfig parse_config(std::string_view text, std::optional<ScenarioKind> scenario) {
  std::vector<ScenarioConfig> set = parse_config_set(text, scenario);
  if (set.size() != 1 || !set.front().variant.empty()) {
    throw ConfigError("document defines variants; use parse_config_set");
  }
  return set.front();
}

std::vector<ScenarioConfig> load_config_file(const std::string& path,
                                             std::optional<ScenarioKind> scenario) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_set(buf.str(), scenario);
  } catch (const ConfigError& err) {
    throw ConfigError(path + ": " + err.what());
  }
}

std::string serialize_config(const ScenarioConfig& cfg) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "scenario" << YAML::Value << std::string(to_string(cfg.scenario));
  if (!cfg.variant.empty()) out << YAML::Key << "variant" << YAML::Value << cfg.variant;

  out << YAML::Key << "material" << YAML::Value << YAML::BeginMap;
  emit_double(out, "omega_p", cfg.material.omega_p);
  emit_double(out, "gamma", cfg.material.gamma);
  emit_double(out, "eps_inf", cfg.material.eps_inf);
  emit_double(out, "eps_b", cfg.material.eps_b);
  emit_double(out, "mu_b", cfg.material.mu_b);
  out << YAML::Key << "ohmic_correction" << YAML::Value
      << std::string(name_of(cfg.material.ohmic, kOhmicNames));
  out << YAML::EndMap;

  out << YAML::Key << "mnp" << YAML::Value << YAML::BeginMap;
  emit_double(out, "radius_m", cfg.mnp_radius);
  out << YAML::EndMap;

  out << YAML::Key << "qd" << YAML::Value << YAML::BeginMap;
  emit_double(out, "dipole_radius_m", cfg.qd_dipole_radius);
  emit_double(out, "gamma_x", cfg.gamma_x);
  emit_double(out, "detuning", cfg.detuning);
  out << YAML::EndMap;

  out << YAML::Key << "metamolecule" << YAML::Value << YAML::BeginMap;
  emit_double(out, "separation_m", cfg.separation);
  out << YAML::Key << "orientation" << YAML::Value
      << std::string(name_of(cfg.orientation, kOrientationNames));
  out << YAML::EndMap;

  out << YAML::Key << "couplings" << YAML::Value << YAML::BeginMap;
  emit_double(out, "mnp_qd_scale", cfg.coupling_scale);
  out << YAML::Key << "qd_sign" << YAML::Value << std::string(name_of(cfg.qd_sign, kQdSignNames));
  out << YAML::EndMap;

  out << YAML::Key << "drive" << YAML::Value << YAML::BeginMap;
  emit_double(out, cfg.drive.kind == DriveSpec::Kind::kEnergyMev ? "e0mu_mev" : "e0_v_per_m",
              cfg.drive.value);
  out << YAML::EndMap;

  out << YAML::Key << "ring" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "n_sites" << YAML::Value << cfg.geometry.n_sites;
  emit_double(out, "r_mnp_m", cfg.geometry.r_mnp);
  emit_double(out, "r_qd_m", cfg.geometry.r_qd);
  emit_double(out, "number_density_m3", cfg.number_density);
  emit_double(out, "h0_a_per_m", cfg.h0);
  out << YAML::Key << "lattice_correction" << YAML::Value
      << (cfg.lattice == LatticeCorrection::kOn);
  out << YAML::Key << "include_qds" << YAML::Value << cfg.include_qds;
  out << YAML::EndMap;

  out << YAML::Key << "liouville" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "fock_dim" << YAML::Value << cfg.hilbert.fock_dim;
  out << YAML::Key << "solver" << YAML::Value << std::string(name_of(cfg.solver, kSolverNames));
  out << YAML::Key << "threads" << YAML::Value << cfg.threads;
  out << YAML::EndMap;

  out << YAML::Key << "grid" << YAML::Value << YAML::BeginMap;
  emit_double(out, "start", cfg.grid.start);
  emit_double(out, "stop", cfg.grid.stop);
  out << YAML::Key << "points" << YAML::Value << cfg.grid.points;
  out << YAML::Key << "relative_to" << YAML::Value
      << std::string(name_of(cfg.grid.reference, kReferenceNames));
  out << YAML::EndMap;

  out << YAML::Key << "output" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "path" << YAML::Value << cfg.output_path;
  out << YAML::Key << "format" << YAML::Value
      << std::string(name_of(cfg.output_format, kFormatNames));
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string parameter_hash(const ScenarioConfig& cfg) {
  // Output location and thread count do not change results.
  ScenarioConfig physics = cfg;
  physics.output_path.clear();
  physics.output_format = OutputFormat::kCsv;
  physics.threads = 1;
  const std::string text = serialize_config(physics);

  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : text) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace qpm
