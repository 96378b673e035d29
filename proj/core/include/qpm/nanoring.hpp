#pragma once

// Magnetic response of a ring of MNPs (optionally loaded with a concentric
// ring of QDs) excited by an axial magnetic field, and the Maxwell-Garnett
// permeability of a medium of such rings.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "qpm/materials.hpp"

namespace qpm {

struct RingGeometry {
  int n_sites = 4;
  double r_mnp = 38e-9;  // MNP ring radius, m
  double r_qd = 6e-9;    // QD ring radius, m

  /// n_sites >= 2 and r_mnp > r_qd > 0.
  void validate() const;

  /// MNP to its own QD (same angular position).
  double same_site_separation() const { return r_mnp - r_qd; }
  /// MNP to the diametrically opposite QD.
  double opposite_separation() const { return r_mnp + r_qd; }
  double site_angle(int n) const;

  RingSites mnp_ring() const { return {n_sites, r_mnp}; }
  RingSites qd_ring() const { return {n_sites, r_qd}; }

  /// Only N = 4 gives a dipole-dominated magnetic response; other values are
  /// accepted for the bare ring as a diagnostic.
  bool physical() const { return n_sites == 4; }

  bool operator==(const RingGeometry&) const = default;
};

/// Axial magnetic drive H = H0 exp(-i omega t) z.
struct DriveField {
  double h0 = 1.0;  // A/m

  /// Induced azimuthal field i omega mu_0 R H0 / 2 at radius R (V/m).
  cplx azimuthal_field(double omega, double radius, const MaterialParams& mat) const;
};

struct RingSystemOptions {
  QdCouplingSign qd_sign = QdCouplingSign::kDerived;
  double mnp_qd_coupling_scale = 1.0;  // multiplies g1 and g2
};

struct RingCouplings {
  cplx j1, j2;      // MNP-MNP, nearest and opposite
  cplx i1, i2;      // QD-QD, nearest and opposite
  double g1 = 0.0;  // same-site MNP-QD
  double g2 = 0.0;  // MNP to opposite QD
};

/// Steady-state block system of the N = 4 MNP-QD ring:
///   A a = B sigma + c,   D sigma = -B a + e.
struct RingLinearSystem {
  Eigen::Matrix4cd a;
  Eigen::Matrix4cd d;
  Eigen::Matrix4cd b;
  Eigen::Vector4cd c;
  Eigen::Vector4cd e;
  cplx chi;         // to turn <a_n> into an MNP dipole
  double mu = 0.0;  // to turn <sigma_n> into a QD dipole
  RingCouplings couplings;
};

struct RingDipoles {
  cplx p_mnp;  // chi* <a_1>, C m
  cplx p_qd;   // mu <sigma_1>, C m
  Eigen::Vector4cd a_sites;
  Eigen::Vector4cd sigma_sites;
};

/// Per-site MNP dipole of a bare ring of geometry.n_sites MNPs on radius
/// geometry.r_mnp (uniform mode of the circulant system).
cplx bare_ring_dipole(const RingGeometry& geometry, const MNPParams& mnp,
                      const MaterialParams& mat, double omega, double h0);

RingLinearSystem build_ring_system(const RingGeometry& geometry, const MNPParams& mnp,
                                   const QDParams& qd, const MaterialParams& mat, double omega,
                                   double h0, const RingSystemOptions& options = {});

/// Block elimination of the ring system. Throws NumericalError with
/// reciprocal condition estimates when a block is singular.
RingDipoles solve_ring(const RingLinearSystem& sys);

/// m = -i omega p N R / 2 (A m^2).
cplx magnetic_dipole(cplx p_site, int n_sites, double radius, double omega);

enum class LatticeCorrection { kOff, kOn };

/// mu_eff = 1 + 1 / (N_d^-1 (alpha_m^-1 + i k^3 / 6 pi) - 1/3); the
/// i k^3 / 6 pi term only with LatticeCorrection::kOn.
cplx maxwell_garnett(cplx alpha_m, double number_density, double k, LatticeCorrection lattice);

struct PermeabilityPoint {
  double omega = 0.0;
  cplx alpha_m;  // m^3
  cplx mu_eff;
};

enum class RingVariant { kBare, kQdLoaded };

struct RingScenario {
  MaterialParams material;
  double mnp_radius = 16e-9;
  double qd_dipole_radius = 0.9e-9;
  double gamma_x = 80e9;
  double detuning = 0.195e15;  // omega_0 - omega_x
  RingGeometry geometry;
  double number_density = 1.0 / (96e-9 * 96e-9 * 96e-9);  // 1/m^3
  double h0 = 1.0;
  LatticeCorrection lattice = LatticeCorrection::kOff;
  RingSystemOptions system;
  RingVariant variant = RingVariant::kBare;
};

/// Magnetic polarizability alpha_m = m / H0 of one ring at omega.
cplx ring_magnetic_polarizability(const RingScenario& scenario, const MNPParams& mnp,
                                  const QDParams& qd, double omega);

std::vector<PermeabilityPoint> permeability_spectrum(const RingScenario& scenario,
                                                     std::span<const double> grid);

}  // namespace qpm
