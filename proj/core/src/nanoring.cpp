#include "qpm/nanoring.hpp"

#include <cmath>
#include <string>

#include "qpm/errors.hpp"
#include "qpm/metamolecule.hpp"

namespace qpm {

using constants::kHbar;
using constants::kPi;

namespace {

constexpr double kMinRcond = 1e-14;

Eigen::Matrix4cd circulant(cplx diag, cplx nearest, cplx opposite) {
  Eigen::Matrix4cd m;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      switch ((col - row + 4) % 4) {
        case 0: m(row, col) = diag; break;
        case 2: m(row, col) = opposite; break;
        default: m(row, col) = nearest; break;
      }
    }
  }
  return m;
}

}  // namespace

void RingGeometry::validate() const {
  if (n_sites < 2) throw DomainError("ring needs at least 2 sites");
  if (!(r_qd > 0.0) || !(r_mnp > r_qd)) {
    throw DomainError("ring radii must satisfy r_mnp > r_qd > 0");
  }
}

double RingGeometry::site_angle(int n) const {
  return 2.0 * kPi * static_cast<double>(n) / static_cast<double>(n_sites);
}

cplx DriveField::azimuthal_field(double omega, double radius, const MaterialParams& mat) const {
  return {0.0, 0.5 * omega * mat.mu_0 * radius * h0};
}

cplx bare_ring_dipole(const RingGeometry& geometry, const MNPParams& mnp,
                      const MaterialParams& mat, double omega, double h0) {
  geometry.validate();
  const double k = mat.wavenumber(omega);
  const RingSites ring = geometry.mnp_ring();
  cplx j_sum = 0.0;
  for (int m = 1; m < ring.n; ++m) j_sum += coupling_J(mnp, mat, q_general(ring, 0, m, k, mat));

  const cplx i{0.0, 1.0};
  const cplx chi = coupling_chi(mnp, mat);
  const cplx lorentz = i * (mnp.omega_0 - omega) + 0.5 * mnp.gamma_0;
  const cplx e0 = DriveField{h0}.azimuthal_field(omega, ring.radius, mat);
  const cplx a = i * chi * e0 / kHbar / (lorentz + i * j_sum);
  return std::conj(chi) * a;
}

RingLinearSystem build_ring_system(const RingGeometry& geometry, const MNPParams& mnp,
                                   const QDParams& qd, const MaterialParams& mat, double omega,
                                   double h0, const RingSystemOptions& options) {
  geometry.validate();
  if (geometry.n_sites != 4) {
    throw DomainError("the MNP-QD ring system is defined for N = 4 only");
  }
  const double k = mat.wavenumber(omega);
  const RingSites mnp_ring = geometry.mnp_ring();
  const RingSites qd_ring = geometry.qd_ring();

  RingLinearSystem sys;
  RingCouplings& cp = sys.couplings;
  cp.j1 = coupling_J(mnp, mat, q_general(mnp_ring, 0, 1, k, mat));
  cp.j2 = coupling_J(mnp, mat, q_general(mnp_ring, 0, 2, k, mat));
  cp.i1 = coupling_I(qd, q_general(qd_ring, 0, 1, k, mat), options.qd_sign);
  cp.i2 = coupling_I(qd, q_general(qd_ring, 0, 2, k, mat), options.qd_sign);
  // Both MNP-QD links are transverse to the azimuthal drive.
  cp.g1 = options.mnp_qd_coupling_scale *
          coupling_g(qd, mnp, geometry.same_site_separation(), Orientation::kPerpendicular, mat);
  cp.g2 = options.mnp_qd_coupling_scale *
          coupling_g(qd, mnp, geometry.opposite_separation(), Orientation::kPerpendicular, mat);

  const cplx i{0.0, 1.0};
  sys.a = circulant(i * (mnp.omega_0 - omega) + 0.5 * mnp.gamma_0, i * cp.j1, i * cp.j2);
  sys.d = circulant(i * (qd.omega_x - omega) + 0.5 * qd.gamma_x, i * cp.i1, i * cp.i2);
  // Nearest-neighbour QDs drive an MNP with opposite phases and cancel.
  sys.b = circulant(cp.g1, 0.0, -cp.g2);

  sys.chi = coupling_chi(mnp, mat);
  sys.mu = qd.mu;
  const DriveField drive{h0};
  const cplx e_mnp = drive.azimuthal_field(omega, mnp_ring.radius, mat);
  const cplx e_qd = drive.azimuthal_field(omega, qd_ring.radius, mat);
  sys.c.setConstant(i * sys.chi * e_mnp / kHbar);
  sys.e.setConstant(i * qd.mu * e_qd / kHbar);
  return sys;
}

RingDipoles solve_ring(const RingLinearSystem& sys) {
  const Eigen::PartialPivLU<Eigen::Matrix4cd> lu_a(sys.a);
  const Eigen::PartialPivLU<Eigen::Matrix4cd> lu_d(sys.d);
  const double rcond_a = lu_a.rcond();
  const double rcond_d = lu_d.rcond();
  if (!(rcond_a > kMinRcond) || !(rcond_d > kMinRcond)) {
    throw NumericalError("solve_ring: singular MNP or QD block", {rcond_a, rcond_d});
  }

  const Eigen::Matrix4cd d_inv_b = lu_d.solve(sys.b);
  const Eigen::Matrix4cd a_inv_b = lu_a.solve(sys.b);
  const Eigen::Matrix4cd schur_a = sys.a + sys.b * d_inv_b;
  const Eigen::Matrix4cd schur_d = sys.d + sys.b * a_inv_b;
  const Eigen::PartialPivLU<Eigen::Matrix4cd> lu_sa(schur_a);
  const Eigen::PartialPivLU<Eigen::Matrix4cd> lu_sd(schur_d);
  if (!(lu_sa.rcond() > kMinRcond) || !(lu_sd.rcond() > kMinRcond)) {
    throw NumericalError("solve_ring: singular Schur complement",
                         {rcond_a, rcond_d, lu_sa.rcond(), lu_sd.rcond()});
  }

  RingDipoles out;
  out.a_sites = lu_sa.solve(sys.b * lu_d.solve(sys.e) + sys.c);
  out.sigma_sites = lu_sd.solve(sys.e - sys.b * lu_a.solve(sys.c));
  out.p_mnp = std::conj(sys.chi) * out.a_sites(0);
  out.p_qd = sys.mu * out.sigma_sites(0);
  return out;
}

cplx magnetic_dipole(cplx p_site, int n_sites, double radius, double omega) {
  return cplx{0.0, -0.5 * omega * static_cast<double>(n_sites) * radius} * p_site;
}

cplx maxwell_garnett(cplx alpha_m, double number_density, double k, LatticeCorrection lattice) {
  if (!(number_density > 0.0)) {
    throw DomainError("number density must be positive, got " + std::to_string(number_density));
  }
  if (alpha_m == cplx{0.0, 0.0}) return 1.0;
  const cplx inverse = 1.0 / alpha_m;
  if (!std::isfinite(inverse.real()) || !std::isfinite(inverse.imag())) return 1.0;

  cplx bracket = inverse;
  if (lattice == LatticeCorrection::kOn) bracket += cplx{0.0, k * k * k / (6.0 * kPi)};
  return 1.0 + 1.0 / (bracket / number_density - 1.0 / 3.0);
}

cplx ring_magnetic_polarizability(const RingScenario& scenario, const MNPParams& mnp,
                                  const QDParams& qd, double omega) {
  const RingGeometry& geom = scenario.geometry;
  if (scenario.variant == RingVariant::kBare) {
    const cplx p = bare_ring_dipole(geom, mnp, scenario.material, omega, scenario.h0);
    return magnetic_dipole(p, geom.n_sites, geom.r_mnp, omega) / scenario.h0;
  }
  const RingLinearSystem sys =
      build_ring_system(geom, mnp, qd, scenario.material, omega, scenario.h0, scenario.system);
  const RingDipoles dip = solve_ring(sys);
  const cplx m = magnetic_dipole(dip.p_mnp, geom.n_sites, geom.r_mnp, omega) +
                 magnetic_dipole(dip.p_qd, geom.n_sites, geom.r_qd, omega);
  return m / scenario.h0;
}

std::vector<PermeabilityPoint> permeability_spectrum(const RingScenario& scenario,
                                                     std::span<const double> grid) {
  validate_grid(grid);
  scenario.geometry.validate();
  if (!(scenario.h0 > 0.0)) throw DomainError("H0 must be positive");
  const MNPParams mnp = derive_mnp(scenario.material, scenario.mnp_radius);
  const QDParams qd = QDParams::from_dipole_radius(
      scenario.qd_dipole_radius, mnp.omega_0 - scenario.detuning, scenario.gamma_x);

  std::vector<PermeabilityPoint> out;
  out.reserve(grid.size());
  for (const double omega : grid) {
    PermeabilityPoint pt;
    pt.omega = omega;
    pt.alpha_m = ring_magnetic_polarizability(scenario, mnp, qd, omega);
    if (!std::isfinite(pt.alpha_m.real()) || !std::isfinite(pt.alpha_m.imag())) {
      throw NumericalError("non-finite magnetic polarizability at omega = " +
                           std::to_string(omega) + " rad/s");
    }
    pt.mu_eff = maxwell_garnett(pt.alpha_m, scenario.number_density,
                                scenario.material.wavenumber(omega), scenario.lattice);
    out.push_back(pt);
  }
  return out;
}

}  // namespace qpm
