#pragma once

// Linear response of one MNP-QD pair in the weak-drive limit.

#include <span>
#include <vector>

#include "qpm/materials.hpp"

namespace qpm {

/// Amplitude of the driving field, stored as E0 in V/m. The QD coupling
/// energy E0*mu is the quantity usually quoted, hence the meV factory.
class Drive {
 public:
  static Drive from_field(double e0_v_per_m);
  static Drive from_energy_mev(double e0mu_mev, double qd_dipole);

  double field() const { return e0_; }

 private:
  explicit Drive(double e0) : e0_(e0) {}
  double e0_ = 0.0;
};

struct MetamoleculeParams {
  MaterialParams material;
  MNPParams mnp;
  QDParams qd;
  double separation = 0.0;  // m
  Orientation orientation = Orientation::kPerpendicular;
  double g = 0.0;           // rad/s
  cplx chi;                 // C m
  double field = 0.0;       // E0, V/m

  /// Derives the MNP, g and chi from the primitive inputs. detuning is
  /// omega_0 - omega_x; coupling_scale multiplies g (0 decouples the pair).
  static MetamoleculeParams assemble(const MaterialParams& mat, double mnp_radius,
                                     double qd_dipole_radius, double gamma_x, double detuning,
                                     double separation, Orientation orient, double e0mu_mev,
                                     double coupling_scale = 1.0);

  /// d >= 2r and d - r >= 1 nm; positive rates. Throws DomainError.
  void validate() const;

  double rabi() const;  // mu E0 / hbar, rad/s
};

struct SteadyAmplitudes {
  cplx a;      // <a>
  cplx sigma;  // <sigma>
  double omega = 0.0;
  double delta_0 = 0.0;  // omega_0 - omega
  double delta_x = 0.0;  // omega_x - omega
  /// Set when the linear solution puts more than 0.1 in the QD excited state,
  /// or mu E0/hbar is not small against gamma_x.
  bool weak_field_violated = false;
};

/// Weak-field steady state of the Maxwell-Bloch pair, populations dropped.
SteadyAmplitudes mb_steady_state(const MetamoleculeParams& p, double omega);

/// Closed-form three-term polarizability (C m^2 / V); independent of E0.
cplx analytic_polarizability(const MetamoleculeParams& p, double omega);

struct ComplexSpectrum {
  std::vector<double> omega;  // rad/s, strictly increasing
  std::vector<cplx> values;
};

/// Evenly spaced frequency grid. points == 1 gives {start}.
std::vector<double> linear_grid(double start, double stop, std::size_t points);

/// Throws DomainError unless the grid is finite and strictly increasing.
void validate_grid(std::span<const double> grid);

ComplexSpectrum polarizability_spectrum(const MetamoleculeParams& p, std::span<const double> grid);

}  // namespace qpm
