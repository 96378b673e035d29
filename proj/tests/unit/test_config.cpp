#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>

#include "qpm/config.hpp"
#include "qpm/errors.hpp"

namespace {

std::string error_of(std::string_view text) {
  try {
    qpm::parse_config_set(text);
  } catch (const qpm::ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Config, EmptyDocumentGivesDefaults) {
  for (auto kind : {qpm::ScenarioKind::kMetamolecule, qpm::ScenarioKind::kBareRing,
                    qpm::ScenarioKind::kQdRing, qpm::ScenarioKind::kNonlinear}) {
    EXPECT_EQ(qpm::parse_config("", kind), qpm::default_config(kind));
  }
  const auto cfg = qpm::parse_config("");
  EXPECT_EQ(cfg.scenario, qpm::ScenarioKind::kMetamolecule);
  EXPECT_EQ(cfg.mnp_radius, 16e-9);
  EXPECT_EQ(cfg.separation, 32e-9);
  EXPECT_EQ(cfg.material.eps_b, 2.2);
  EXPECT_EQ(cfg.material.omega_p, 1.37e16);
  EXPECT_EQ(cfg.drive.value, 1e-4);
  EXPECT_EQ(cfg.orientation, qpm::Orientation::kPerpendicular);
  EXPECT_EQ(cfg.hilbert.fock_dim, 15);
  EXPECT_EQ(cfg.detuning, 0.0);
}

TEST(Config, RingDefaults) {
  const auto cfg = qpm::default_config(qpm::ScenarioKind::kQdRing);
  EXPECT_EQ(cfg.detuning, 0.195e15);
  EXPECT_EQ(cfg.geometry.n_sites, 4);
  EXPECT_EQ(cfg.geometry.r_mnp, 38e-9);
  EXPECT_EQ(cfg.geometry.r_qd, 6e-9);
  EXPECT_NEAR(cfg.number_density * std::pow(96e-9, 3), 1.0, 1e-12);
  EXPECT_EQ(cfg.lattice, qpm::LatticeCorrection::kOff);
  EXPECT_EQ(cfg.ring().variant, qpm::RingVariant::kQdLoaded);
  EXPECT_EQ(qpm::default_config(qpm::ScenarioKind::kBareRing).ring().variant,
            qpm::RingVariant::kBare);
}

TEST(Config, ParsesEverySection) {
  const auto cfg = qpm::parse_config(R"(
scenario: nonlinear
material: {omega_p: 1.4e16, gamma: "0.5 THz", eps_inf: 4.5, eps_b: 2.0, mu_b: 1.0,
           ohmic_correction: printed}
mnp: {radius_m: 10e-9}
qd: {dipole_radius_m: 1.0e-9, gamma_x: 1e11, detuning: 1e14}
metamolecule: {separation_m: 25e-9, orientation: parallel}
couplings: {mnp_qd_scale: 0.5, qd_sign: printed}
drive: {e0_v_per_m: 2000}
ring: {n_sites: 3, r_mnp_m: 40e-9, r_qd_m: 5e-9, lattice_period_m: 100e-9,
       h0_a_per_m: 2.0, lattice_correction: true, include_qds: false}
liouville: {fock_dim: 12, solver: dense, threads: 2}
grid: {start: 1e15, stop: 2e15, points: 7, relative_to: absolute}
output: {path: out/x.json, format: json}
)");
  EXPECT_EQ(cfg.scenario, qpm::ScenarioKind::kNonlinear);
  EXPECT_EQ(cfg.material.omega_p, 1.4e16);
  EXPECT_DOUBLE_EQ(cfg.material.gamma, 2.0 * std::numbers::pi * 0.5e12);
  EXPECT_EQ(cfg.material.ohmic, qpm::OhmicCorrection::kAsPrinted);
  EXPECT_EQ(cfg.orientation, qpm::Orientation::kParallel);
  EXPECT_EQ(cfg.qd_sign, qpm::QdCouplingSign::kAsPrinted);
  EXPECT_EQ(cfg.drive.kind, qpm::DriveSpec::Kind::kFieldVPerM);
  EXPECT_EQ(cfg.drive.value, 2000.0);
  EXPECT_EQ(cfg.geometry.n_sites, 3);
  EXPECT_NEAR(cfg.number_density * 1e-21, 1.0, 1e-12);
  EXPECT_EQ(cfg.lattice, qpm::LatticeCorrection::kOn);
  EXPECT_FALSE(cfg.include_qds);
  EXPECT_EQ(cfg.hilbert.fock_dim, 12);
  EXPECT_EQ(cfg.solver, qpm::SolverStrategy::kDense);
  EXPECT_EQ(cfg.threads, 2u);
  EXPECT_EQ(cfg.frequencies(), qpm::linear_grid(1e15, 2e15, 7));
  EXPECT_EQ(cfg.output_format, qpm::OutputFormat::kJson);
  EXPECT_EQ(cfg.metamolecule().field, 2000.0);
}

TEST(Config, RejectsUnknownKeysByName) {
  EXPECT_NE(error_of("mnp: {radius_m: 1e-8, colour: red}").find("mnp.colour"), std::string::npos);
  EXPECT_NE(error_of("plasmon: {}").find("plasmon"), std::string::npos);
  EXPECT_NE(error_of("grid: {start: 1, stop: 2, points: 3, step: 1}").find("grid.step"),
            std::string::npos);
}

TEST(Config, RejectsWrongTypesNamingKeyAndType) {
  const std::string e1 = error_of("mnp: {radius_m: big}");
  EXPECT_NE(e1.find("mnp.radius_m"), std::string::npos);
  EXPECT_NE(e1.find("number"), std::string::npos);
  const std::string e2 = error_of("liouville: {fock_dim: 3.5}");
  EXPECT_NE(e2.find("liouville.fock_dim"), std::string::npos);
  EXPECT_NE(e2.find("integer"), std::string::npos);
  EXPECT_NE(error_of("ring: {include_qds: maybe}").find("boolean"), std::string::npos);
  EXPECT_NE(error_of("metamolecule: {orientation: diagonal}").find("parallel|perpendicular"),
            std::string::npos);
  EXPECT_NE(error_of("mnp: 5").find("mnp: expected a mapping"), std::string::npos);
  EXPECT_NE(error_of("[1, 2]").find("mapping"), std::string::npos);
  EXPECT_NE(error_of("scenario: lens").find("scenario"), std::string::npos);
  EXPECT_NE(error_of("mnp: {radius_m: [1").find("malformed"), std::string::npos);
}

TEST(Config, RejectsPhysicalViolations) {
  const std::string e = error_of("metamolecule: {separation_m: 10e-9}");
  EXPECT_NE(e.find("d >= 2r"), std::string::npos) << e;
  EXPECT_NE(error_of("material: {eps_b: 0.5}").find("eps_b"), std::string::npos);
  EXPECT_NE(error_of("scenario: qd-ring\nring: {n_sites: 3}").find("n_sites"), std::string::npos);
  EXPECT_NE(error_of("scenario: bare-ring\nring: {r_mnp_m: 5e-9}").find("r_mnp"),
            std::string::npos);
  EXPECT_NE(error_of("scenario: nonlinear\ndrive: {e0mu_mev: 0}").find("drive"),
            std::string::npos);
  EXPECT_NE(error_of("grid: {start: 2, stop: 1, points: 3}").find("grid.stop"), std::string::npos);
  EXPECT_NE(error_of("drive: {e0mu_mev: 1, e0_v_per_m: 2}").find("either"), std::string::npos);
}

TEST(Config, ScenarioArgumentMustAgreeWithDocument) {
  EXPECT_THROW(qpm::parse_config("scenario: qd-ring", qpm::ScenarioKind::kBareRing),
               qpm::ConfigError);
  EXPECT_NO_THROW(qpm::parse_config("scenario: qd-ring", qpm::ScenarioKind::kQdRing));
}

TEST(Config, VariantsDeepMergeOverTheBase) {
  const auto set = qpm::parse_config_set(R"(
scenario: qd-ring
qd: {gamma_x: 9e10, detuning: 0.19e15}
variants:
  - name: one
  - name: two
    qd: {detuning: 0.2e15}
    ring: {include_qds: false}
)");
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[0].variant, "one");
  EXPECT_EQ(set[0].detuning, 0.19e15);
  EXPECT_EQ(set[1].variant, "two");
  EXPECT_EQ(set[1].detuning, 0.2e15);
  EXPECT_EQ(set[1].gamma_x, 9e10);  // kept from the base
  EXPECT_FALSE(set[1].include_qds);
  EXPECT_TRUE(set[0].include_qds);
  EXPECT_THROW(qpm::parse_config("variants: [{name: a}]"), qpm::ConfigError);
}

TEST(Config, VariantErrorsNameTheVariant) {
  const std::string e = error_of(R"(
variants:
  - name: fine
  - name: broken
    metamolecule: {separation_m: 1e-9}
)");
  EXPECT_NE(e.find("broken"), std::string::npos) << e;
  EXPECT_NE(error_of("variants: [{name: a}, {name: a}]").find("duplicate"), std::string::npos);
  EXPECT_NE(error_of("variants: [{qd: {}}]").find("name"), std::string::npos);
  EXPECT_NE(error_of("variants: []").find("non-empty"), std::string::npos);
}

TEST(Config, SerializeParseRoundTripPreservesEveryField) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    auto cfg = qpm::default_config(static_cast<qpm::ScenarioKind>(n % 4));
    cfg.material.omega_p = 1.2e16 + u(rng) * 3e15;
    cfg.material.gamma = 1e13 + u(rng) * 1e14;
    cfg.material.eps_b = 1.0 + u(rng) * 2.0;
    cfg.mnp_radius = 5e-9 + u(rng) * 10e-9;
    cfg.separation = 3.0 * cfg.mnp_radius * (1.0 + u(rng));
    cfg.detuning = u(rng) * 3e14;
    cfg.gamma_x = 1e10 + u(rng) * 1e11;
    cfg.coupling_scale = u(rng);
    cfg.geometry.r_mnp = 30e-9 + u(rng) * 20e-9;
    cfg.number_density = 1e21 * (1.0 + u(rng));
    cfg.grid = {u(rng) * -1e13, u(rng) * 1e13 + 1e3, static_cast<std::size_t>(n + 2),
                qpm::GridSpec::Reference::kOmegaX};
    cfg.include_qds = n % 3 != 0;
    cfg.output_path = "out/run" + std::to_string(n) + ".csv";
    if (n % 5 == 0) cfg.drive = {qpm::DriveSpec::Kind::kFieldVPerM, 123.456 + u(rng)};
    const auto back = qpm::parse_config(qpm::serialize_config(cfg));
    EXPECT_EQ(back, cfg) << qpm::serialize_config(cfg);
  }
}

TEST(Config, VariantNameSurvivesRoundTrip) {
  auto cfg = qpm::parse_config_set("variants: [{name: alpha}]").front();
  const auto back = qpm::parse_config_set(qpm::serialize_config(cfg));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back.front(), cfg);
}

TEST(Config, ParameterHashIsDeterministicAndSensitive) {
  const auto a = qpm::default_config(qpm::ScenarioKind::kQdRing);
  auto b = a;
  EXPECT_EQ(qpm::parameter_hash(a), qpm::parameter_hash(b));
  EXPECT_EQ(qpm::parameter_hash(a).size(), 16u);
  b.detuning = std::nextafter(a.detuning, 1.0);
  EXPECT_NE(qpm::parameter_hash(a), qpm::parameter_hash(b));
  // Output placement does not change the physics.
  b = a;
  b.output_path = "elsewhere.json";
  b.output_format = qpm::OutputFormat::kJson;
  b.threads = 4;
  EXPECT_EQ(qpm::parameter_hash(a), qpm::parameter_hash(b));
}

TEST(GridArg, ParsesAbsoluteGrid) {
  const auto g = qpm::parse_grid_arg("4.2e15:4.5e15:301");
  EXPECT_EQ(g.start, 4.2e15);
  EXPECT_EQ(g.stop, 4.5e15);
  EXPECT_EQ(g.points, 301u);
  EXPECT_EQ(g.reference, qpm::GridSpec::Reference::kAbsolute);
  const auto t = qpm::parse_grid_arg("700THz:720THz:3");
  EXPECT_DOUBLE_EQ(t.start, 2.0 * std::numbers::pi * 700e12);
  EXPECT_THROW(qpm::parse_grid_arg("1:2"), qpm::ConfigError);
  EXPECT_THROW(qpm::parse_grid_arg("1:2:-3"), qpm::ConfigError);
  EXPECT_THROW(qpm::parse_grid_arg("a:2:3"), qpm::ConfigError);
  EXPECT_THROW(qpm::parse_grid_arg("3:2:3"), qpm::ConfigError);
}

TEST(Config, DefaultGridsAreCentredOnTheirReference) {
  const auto mm = qpm::default_config(qpm::ScenarioKind::kMetamolecule);
  const auto f = mm.frequencies();
  ASSERT_EQ(f.size() % 2, 1u);
  EXPECT_NEAR(f[f.size() / 2], mm.omega_x(), 1.0);
  const auto qd = qpm::default_config(qpm::ScenarioKind::kQdRing);
  const auto g = qd.frequencies();
  EXPECT_NEAR(g[g.size() / 2], qd.omega_x(), 1.0);
}

TEST(Config, LoadsShippedFigureConfigs) {
  for (const char* name : {"fig2", "fig3", "fig4", "fig5", "fig6", "fig2_literal_omega_p"}) {
    const std::string path = std::string(QPM_CONFIG_DIR) + "/" + name + ".cfg";
    std::vector<qpm::ScenarioConfig> set;
    ASSERT_NO_THROW(set = qpm::load_config_file(path)) << path;
    EXPECT_GE(set.size(), 2u) << path;
  }
  EXPECT_THROW(qpm::load_config_file("/nonexistent/x.cfg"), qpm::ConfigError);
}
