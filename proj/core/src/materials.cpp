#include "qpm/materials.hpp"

#include <cmath>
#include <string>

#include "qpm/errors.hpp"

namespace qpm {

using constants::kHbar;
using constants::kPi;

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " +
                      std::to_string(value));
  }
}

}  // namespace

void MaterialParams::validate() const {
  require_positive(omega_p, "omega_p");
  require_positive(gamma, "gamma");
  require_positive(eps_inf, "eps_inf");
  require_positive(eps_0, "eps_0");
  require_positive(mu_0, "mu_0");
  require_positive(mu_b, "mu_b");
  if (!(eps_b >= 1.0)) {
    throw DomainError("eps_b must be >= 1, got " + std::to_string(eps_b));
  }
}

double MaterialParams::wavenumber(double omega) const {
  return omega * std::sqrt(mu_0 * mu_b * eps_0 * eps_b);
}

QDParams QDParams::from_dipole_radius(double r_0, double omega_x, double gamma_x) {
  require_positive(r_0, "QD dipole radius");
  require_positive(gamma_x, "gamma_x");
  QDParams qd;
  qd.r_0 = r_0;
  qd.mu = constants::kElementaryCharge * r_0;
  qd.omega_x = omega_x;
  qd.gamma_x = gamma_x;
  return qd;
}

cplx drude_permittivity(const MaterialParams& mat, double omega) {
  if (!(omega > 0.0)) {
    throw DomainError("drude_permittivity: omega must be positive, got " + std::to_string(omega));
  }
  const cplx denom{omega * omega, mat.gamma * omega};
  return mat.eps_inf - mat.omega_p * mat.omega_p / denom;
}

MNPParams derive_mnp(const MaterialParams& mat, double r, double omega_eval) {
  require_positive(r, "MNP radius");
  require_positive(omega_eval, "omega_eval");
  mat.validate();

  const double s = mat.frohlich_sum();
  const double wp = mat.omega_p;

  MNPParams out;
  out.radius = r;
  out.omega_0 = wp / std::sqrt(s);

  const double num = mat.gamma * mat.gamma * s + wp * wp;
  out.eta = num * num / (2.0 * std::pow(s, 1.5) * wp * wp * wp);

  const double cubic = mat.gamma * mat.gamma * mat.gamma * s;
  out.gamma_nr = mat.gamma + (mat.ohmic == OhmicCorrection::kDimensional ? cubic / (wp * wp)
                                                                          : cubic / wp);

  const double k = mat.wavenumber(omega_eval);
  out.gamma_r = 2.0 * k * k * k * out.omega_0 * r * r * r / s;
  out.gamma_0 = out.gamma_nr + out.gamma_r;
  return out;
}

MNPParams derive_mnp(const MaterialParams& mat, double r) {
  mat.validate();
  return derive_mnp(mat, r, mat.omega_p / std::sqrt(mat.frohlich_sum()));
}

double coupling_g(const QDParams& qd, const MNPParams& mnp, double d, Orientation orient,
                  const MaterialParams& mat) {
  if (!(d > 0.0)) {
    throw DomainError("coupling_g: separation must be positive, got " + std::to_string(d));
  }
  const double r3 = mnp.radius * mnp.radius * mnp.radius;
  const double root = std::sqrt(3.0 * mnp.eta * r3 / (4.0 * kPi * mat.eps_0 * kHbar));
  return orientation_factor(orient) * qd.mu / (d * d * d) * root;
}

cplx coupling_chi(const MNPParams& mnp, const MaterialParams& mat) {
  const double r3 = mnp.radius * mnp.radius * mnp.radius;
  return {0.0, -mat.eps_b * std::sqrt(12.0 * mnp.eta * mat.eps_0 * kPi * kHbar * r3)};
}

cplx q_general(const RingSites& ring, int j, int l, double k, const MaterialParams& mat) {
  if (ring.n < 2) throw DomainError("q_general: ring needs at least 2 sites");
  if (j < 0 || l < 0 || j >= ring.n || l >= ring.n) {
    throw DomainError("q_general: site index out of range");
  }
  if (j == l) throw DomainError("q_general: self-interaction (j == l) is excluded");
  require_positive(ring.radius, "ring radius");

  const double R = ring.radius;
  const double dphi = 2.0 * kPi * static_cast<double>(l - j) / static_cast<double>(ring.n);
  const double c = std::cos(dphi);
  const double s = std::sin(dphi);
  // Chord length 2R sin(|dphi|/2); avoids cancellation in 2R^2(1 - cos).
  const double rr = 2.0 * R * std::abs(std::sin(0.5 * dphi));
  const double kr = k * rr;
  const double R2 = R * R;

  const cplx retard{1.0, -kr};
  const cplx bracket = kr * kr * (2.0 * R2 * c - R2 * c * c - R2) +
                       3.0 * R2 * s * s * retard - rr * rr * c * retard;
  const cplx phase = std::exp(cplx{0.0, kr});
  return phase * bracket / (4.0 * kPi * mat.eps_0 * mat.eps_b * std::pow(rr, 5));
}

cplx q_nearest_n4(double radius, double k, const MaterialParams& mat) {
  const double R = radius;
  const double sq2 = std::numbers::sqrt2;
  const cplx phase = std::exp(cplx{0.0, sq2 * k * R});
  const cplx bracket = -2.0 * k * k * std::pow(R, 4) + 3.0 * R * R * cplx{1.0, -k * sq2 * R};
  return phase / (16.0 * sq2 * kPi * mat.eps_0 * mat.eps_b * std::pow(R, 5)) * bracket;
}

cplx q_opposite_n4(double radius, double k, const MaterialParams& mat) {
  const double R = radius;
  const cplx phase = std::exp(cplx{0.0, 2.0 * k * R});
  const cplx bracket = -16.0 * k * k * std::pow(R, 4) + 4.0 * R * R * cplx{1.0, -2.0 * k * R};
  return phase / (128.0 * kPi * mat.eps_0 * mat.eps_b * std::pow(R, 5)) * bracket;
}

cplx coupling_J(const MNPParams& mnp, const MaterialParams& mat, cplx q) {
  const double r3 = mnp.radius * mnp.radius * mnp.radius;
  return -12.0 * kPi * mat.eps_0 * mat.eps_b * mat.eps_b * r3 * mnp.eta * q;
}

cplx coupling_I(const QDParams& qd, cplx q, QdCouplingSign sign) {
  const double magnitude = qd.mu * qd.mu / kHbar;
  return (sign == QdCouplingSign::kDerived ? -magnitude : magnitude) * q;
}

}  // namespace qpm
