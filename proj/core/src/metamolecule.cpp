#include "qpm/metamolecule.hpp"

#include <spdlog/spdlog.h>

#include <cmath>
#include <string>

#include "qpm/errors.hpp"

namespace qpm {

using constants::kHbar;

namespace {

constexpr double kMinSurfaceGap = 1e-9;    // m
constexpr double kPopulationWarning = 0.1;
constexpr double kWeakRabiRatio = 0.1;     // mu E0 / hbar against gamma_x

}  // namespace

Drive Drive::from_field(double e0_v_per_m) {
  if (!(e0_v_per_m >= 0.0) || !std::isfinite(e0_v_per_m)) {
    throw DomainError("drive field must be finite and non-negative");
  }
  return Drive(e0_v_per_m);
}

Drive Drive::from_energy_mev(double e0mu_mev, double qd_dipole) {
  if (!(qd_dipole > 0.0)) throw DomainError("QD dipole moment must be positive");
  if (!(e0mu_mev >= 0.0) || !std::isfinite(e0mu_mev)) {
    throw DomainError("drive energy must be finite and non-negative");
  }
  return Drive(e0mu_mev * 1e-3 * constants::kElementaryCharge / qd_dipole);
}

MetamoleculeParams MetamoleculeParams::assemble(const MaterialParams& mat, double mnp_radius,
                                                double qd_dipole_radius, double gamma_x,
                                                double detuning, double separation,
                                                Orientation orient, double e0mu_mev,
                                                double coupling_scale) {
  MetamoleculeParams p;
  p.material = mat;
  p.mnp = derive_mnp(mat, mnp_radius);
  p.qd = QDParams::from_dipole_radius(qd_dipole_radius, p.mnp.omega_0 - detuning, gamma_x);
  p.separation = separation;
  p.orientation = orient;
  p.g = coupling_scale * coupling_g(p.qd, p.mnp, separation, orient, mat);
  p.chi = coupling_chi(p.mnp, mat);
  p.field = Drive::from_energy_mev(e0mu_mev, p.qd.mu).field();
  p.validate();
  return p;
}

void MetamoleculeParams::validate() const {
  material.validate();
  const double r = mnp.radius;
  if (!(separation >= 2.0 * r)) {
    throw DomainError("separation d = " + std::to_string(separation) +
                      " m violates the dipole approximation d >= 2r (r = " + std::to_string(r) +
                      " m)");
  }
  if (!(separation - r >= kMinSurfaceGap)) {
    throw DomainError("QD closer than 1 nm to the MNP surface");
  }
  if (!(mnp.gamma_0 > 0.0) || !(qd.gamma_x > 0.0)) {
    throw DomainError("damping rates gamma_0 and gamma_x must be positive");
  }
}

double MetamoleculeParams::rabi() const { return qd.mu * field / kHbar; }

SteadyAmplitudes mb_steady_state(const MetamoleculeParams& p, double omega) {
  SteadyAmplitudes out;
  out.omega = omega;
  out.delta_0 = p.mnp.omega_0 - omega;
  out.delta_x = p.qd.omega_x - omega;

  const cplx i{0.0, 1.0};
  const cplx lorentz_0 = i * out.delta_0 + 0.5 * p.mnp.gamma_0;
  const cplx lorentz_x = i * out.delta_x + 0.5 * p.qd.gamma_x;
  const cplx drive_a = i * p.chi * p.field / kHbar;
  const cplx drive_s = i * p.qd.mu * p.field / kHbar;

  // lorentz_0 a - g sigma = drive_a ;  g a + lorentz_x sigma = drive_s
  const cplx det = lorentz_0 * lorentz_x + p.g * p.g;
  const double scale = std::abs(lorentz_0) * std::abs(lorentz_x) + p.g * p.g;
  if (!(std::abs(det) > 1e-14 * scale)) {
    throw NumericalError("mb_steady_state: singular 2x2 system at omega = " +
                             std::to_string(omega),
                         {std::abs(det), scale});
  }
  out.sigma = (lorentz_0 * drive_s - p.g * drive_a) / det;
  out.a = (p.g * out.sigma + drive_a) / lorentz_0;

  out.weak_field_violated = std::norm(out.sigma) > kPopulationWarning ||
                            p.rabi() > kWeakRabiRatio * p.qd.gamma_x;
  if (out.weak_field_violated) {
    spdlog::debug("weak-field assumption violated at omega = {:.6e} (|sigma|^2 = {:.3e})", omega,
                  std::norm(out.sigma));
  }
  return out;
}

cplx analytic_polarizability(const MetamoleculeParams& p, double omega) {
  const cplx i{0.0, 1.0};
  const double g2 = p.g * p.g;
  const cplx l0 = i * (p.mnp.omega_0 - omega) + 0.5 * p.mnp.gamma_0;
  const cplx lx = i * (p.qd.omega_x - omega) + 0.5 * p.qd.gamma_x;
  const double mu = p.qd.mu;

  const cplx qd_term = i * mu * mu / (kHbar * (lx + g2 / l0));
  const cplx mnp_term = i * std::norm(p.chi) / (kHbar * (l0 + g2 / lx));
  const cplx cross_term = i * mu * p.g * (std::conj(p.chi) - p.chi) / (kHbar * (lx * l0 + g2));
  return qd_term + mnp_term + cross_term;
}

std::vector<double> linear_grid(double start, double stop, std::size_t points) {
  std::vector<double> grid;
  grid.reserve(points);
  if (points == 1) {
    grid.push_back(start);
    return grid;
  }
  const double step = (stop - start) / static_cast<double>(points - 1);
  for (std::size_t n = 0; n < points; ++n) {
    grid.push_back(n + 1 == points ? stop : start + step * static_cast<double>(n));
  }
  return grid;
}

void validate_grid(std::span<const double> grid) {
  for (std::size_t n = 0; n < grid.size(); ++n) {
    if (!std::isfinite(grid[n])) throw DomainError("frequency grid contains a non-finite value");
    if (n > 0 && !(grid[n] > grid[n - 1])) {
      throw DomainError("frequency grid must be strictly increasing (index " + std::to_string(n) +
                        ")");
    }
  }
}

ComplexSpectrum polarizability_spectrum(const MetamoleculeParams& p,
                                        std::span<const double> grid) {
  validate_grid(grid);
  ComplexSpectrum out;
  out.omega.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  std::size_t violations = 0;
  for (const double omega : grid) {
    if (mb_steady_state(p, omega).weak_field_violated) ++violations;
    out.values.push_back(analytic_polarizability(p, omega));
  }
  if (violations > 0) {
    spdlog::warn("weak-field limit violated at {} of {} sweep points; use the nonlinear solver",
                 violations, grid.size());
  }
  return out;
}

}  // namespace qpm
