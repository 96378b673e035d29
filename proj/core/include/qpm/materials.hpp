#pragma once

// Drude metal, background medium and the closed-form couplings of the
// MNP-QD model: plasmon resonance and damping, MNP-QD coupling g, drive
// coupling chi, ring interaction scalars Q and the ring couplings J and I.
//
// Time convention is exp(-i omega t) throughout; retardation phases are
// exp(+i k r).

#include <complex>
#include <cstddef>

#include "qpm/units.hpp"

namespace qpm {

using cplx = std::complex<double>;

/// Which printed form of the Ohmic damping correction to use.
///   kDimensional: gamma_nr = gamma + gamma^3 (2 eps_b + eps_inf) / omega_p^2
///   kAsPrinted:   gamma_nr = gamma + gamma^3 (2 eps_b + eps_inf) / omega_p
/// The second is dimensionally inconsistent and only kept for audits.
enum class OhmicCorrection { kDimensional, kAsPrinted };

/// Silver plasma frequency used by default (rad/s).
inline constexpr double kDefaultPlasmaFrequency = 1.37e16;
/// The literal "2 pi x 4.35 THz" value, which puts the plasmon in the microwave.
inline constexpr double kLiteralPlasmaFrequency = 2.0 * constants::kPi * 4.35e12;

struct MaterialParams {
  double omega_p = kDefaultPlasmaFrequency;  // rad/s
  double gamma = 2.7e13;                     // rad/s, Drude damping
  double eps_inf = 5.0;
  double eps_b = 2.2;
  double mu_b = 1.0;
  double eps_0 = constants::kEpsilon0;
  double mu_0 = constants::kMu0;
  OhmicCorrection ohmic = OhmicCorrection::kDimensional;

  /// Throws DomainError unless rates are positive, eps_b >= 1 and mu_b > 0.
  void validate() const;

  /// Background wavenumber k = omega sqrt(mu_0 mu_b eps_0 eps_b), 1/m.
  double wavenumber(double omega) const;

  /// Frohlich denominator eps_inf + 2 eps_b.
  double frohlich_sum() const { return eps_inf + 2.0 * eps_b; }

  bool operator==(const MaterialParams&) const = default;
};

struct MNPParams {
  double radius = 0.0;    // m
  double omega_0 = 0.0;   // rad/s
  double eta = 0.0;       // rad/s
  double gamma_nr = 0.0;  // rad/s
  double gamma_r = 0.0;   // rad/s
  double gamma_0 = 0.0;   // rad/s, gamma_nr + gamma_r
};

struct QDParams {
  double r_0 = 0.9e-9;       // m
  double mu = 0.0;           // C m
  double omega_x = 0.0;      // rad/s
  double gamma_x = 80e9;     // rad/s

  /// mu = e r_0.
  static QDParams from_dipole_radius(double r_0, double omega_x, double gamma_x);
};

/// Drive field parallel (S = 2) or perpendicular (S = -1) to the MNP-QD axis.
enum class Orientation { kParallel, kPerpendicular };

constexpr double orientation_factor(Orientation o) {
  return o == Orientation::kParallel ? 2.0 : -1.0;
}

/// Sites of one ring: n equally spaced dipoles on a circle of the given radius.
struct RingSites {
  int n = 4;
  double radius = 0.0;  // m
};

/// Drude permittivity eps_inf - omega_p^2 / (omega^2 + i gamma omega).
cplx drude_permittivity(const MaterialParams& mat, double omega);

/// Plasmon resonance, eta and damping rates of an MNP of radius r. The
/// wavenumber inside gamma_r is evaluated at omega_eval.
MNPParams derive_mnp(const MaterialParams& mat, double r, double omega_eval);

/// Same, evaluating gamma_r at the plasmon resonance omega_0.
MNPParams derive_mnp(const MaterialParams& mat, double r);

/// MNP-QD coupling g = (S mu / d^3) sqrt(3 eta r^3 / (4 pi eps_0 hbar)), rad/s.
double coupling_g(const QDParams& qd, const MNPParams& mnp, double d, Orientation orient,
                  const MaterialParams& mat);

/// Drive coupling chi = -i eps_b sqrt(12 pi eta eps_0 hbar r^3), C m.
cplx coupling_chi(const MNPParams& mnp, const MaterialParams& mat);

/// Azimuthal field at site j of the ring produced by a unit azimuthal dipole
/// at site l (field per dipole moment, SI). Includes near-field and
/// retarded terms; the host medium is the background eps_b.
cplx q_general(const RingSites& ring, int j, int l, double k, const MaterialParams& mat);

/// Closed-form nearest-neighbour interaction of an N = 4 ring (separation sqrt(2) R).
cplx q_nearest_n4(double radius, double k, const MaterialParams& mat);

/// Closed-form opposite-site interaction of an N = 4 ring (separation 2R).
cplx q_opposite_n4(double radius, double k, const MaterialParams& mat);

/// MNP-MNP ring coupling J = -12 pi eps_0 eps_b^2 r^3 eta Q, rad/s.
cplx coupling_J(const MNPParams& mnp, const MaterialParams& mat, cplx q);

/// Sign convention for the QD-QD ring coupling.
///   kDerived: I = -(mu^2/hbar) Q, matching the construction of J.
///   kAsPrinted: I = +(mu^2/hbar) Q.
enum class QdCouplingSign { kDerived, kAsPrinted };

/// QD-QD ring coupling +-(mu^2/hbar) Q, rad/s.
cplx coupling_I(const QDParams& qd, cplx q, QdCouplingSign sign = QdCouplingSign::kDerived);

}  // namespace qpm
