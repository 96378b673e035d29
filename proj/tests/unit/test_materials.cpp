#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "qpm/errors.hpp"
#include "qpm/materials.hpp"

namespace {

using qpm::cplx;
using qpm::MaterialParams;
constexpr double kPi = std::numbers::pi;

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Retarded field of a point dipole p at the origin, evaluated at r, in a
// medium of relative permittivity eps_b:
//   E = e^{ikr}/(4 pi eps0 eps_b) [k^2 (r^ x p) x r^ / r + (3 r^(r^.p) - p)(1/r^3 - ik/r^2)]
Eigen::Vector2cd dipole_field(const Eigen::Vector2d& r, const Eigen::Vector2d& p, double k,
                              const MaterialParams& mat) {
  const double d = r.norm();
  const Eigen::Vector2d n = r / d;
  const double np = n.dot(p);
  const Eigen::Vector2d transverse = p - n * np;
  const Eigen::Vector2d longitudinal = 3.0 * n * np - p;
  const cplx i{0.0, 1.0};
  const cplx pref = std::exp(i * k * d) / (4.0 * kPi * mat.eps_0 * mat.eps_b);
  Eigen::Vector2cd e;
  for (int c = 0; c < 2; ++c) {
    e(c) = pref * (k * k * transverse(c) / d +
                   longitudinal(c) * (1.0 / (d * d * d) - i * k / (d * d)));
  }
  return e;
}

// Azimuthal field at site j due to a unit azimuthal dipole at site l.
cplx q_oracle(int n, double radius, int j, int l, double k, const MaterialParams& mat) {
  const double pj = 2.0 * kPi * j / n;
  const double pl = 2.0 * kPi * l / n;
  const Eigen::Vector2d rj{radius * std::cos(pj), radius * std::sin(pj)};
  const Eigen::Vector2d rl{radius * std::cos(pl), radius * std::sin(pl)};
  const Eigen::Vector2d phi_j{-std::sin(pj), std::cos(pj)};
  const Eigen::Vector2d phi_l{-std::sin(pl), std::cos(pl)};
  const Eigen::Vector2cd e = dipole_field(rj - rl, phi_l, k, mat);
  return e(0) * phi_j(0) + e(1) * phi_j(1);
}

}  // namespace

TEST(Drude, MatchesHandFormula) {
  const MaterialParams mat;
  for (double w : {1e14, 2.5e15, 4.4e15, 9e15}) {
    const cplx expected = mat.eps_inf - mat.omega_p * mat.omega_p / cplx(w * w, mat.gamma * w);
    EXPECT_LT(rel(qpm::drude_permittivity(mat, w), expected), 1e-14) << w;
  }
}

TEST(Drude, LossyMetalHasPositiveImaginaryPart) {
  const MaterialParams mat;
  for (double w = 1e14; w < 1e16; w *= 1.7) {
    EXPECT_GT(qpm::drude_permittivity(mat, w).imag(), 0.0);
  }
}

TEST(Drude, RejectsNonPositiveFrequency) {
  EXPECT_THROW(qpm::drude_permittivity(MaterialParams{}, 0.0), qpm::DomainError);
  EXPECT_THROW(qpm::drude_permittivity(MaterialParams{}, -1.0), qpm::DomainError);
}

TEST(DeriveMnp, FrohlichConditionHoldsInTheLosslessLimit) {
  MaterialParams mat;
  mat.gamma = 1e-9 * mat.omega_p;
  const qpm::MNPParams mnp = qpm::derive_mnp(mat, 16e-9);
  const double re = qpm::drude_permittivity(mat, mnp.omega_0).real();
  EXPECT_NEAR(re, -2.0 * mat.eps_b, 1e-9);
}

TEST(DeriveMnp, DefaultSilverResonanceIsVisible) {
  const qpm::MNPParams mnp = qpm::derive_mnp(MaterialParams{}, 16e-9);
  EXPECT_NEAR(mnp.omega_0, 1.37e16 / std::sqrt(9.4), 1.0);
  EXPECT_GT(mnp.omega_0, 2.5e15);
  EXPECT_LT(mnp.omega_0, 5.5e15);
}

TEST(DeriveMnp, EtaReducesToHalfResonanceOverFrohlichSumWithoutLoss) {
  MaterialParams mat;
  mat.gamma = 1e-12 * mat.omega_p;
  const qpm::MNPParams mnp = qpm::derive_mnp(mat, 16e-9);
  EXPECT_NEAR(mnp.eta / (mnp.omega_0 / (2.0 * mat.frohlich_sum())), 1.0, 1e-12);
}

TEST(DeriveMnp, DampingRatesFollowTheirDefinitions) {
  const MaterialParams mat;
  const double r = 16e-9;
  const qpm::MNPParams mnp = qpm::derive_mnp(mat, r);
  const double s = mat.eps_inf + 2.0 * mat.eps_b;
  const double k = mnp.omega_0 * std::sqrt(mat.mu_0 * mat.eps_0 * mat.eps_b);
  EXPECT_NEAR(mnp.gamma_r / (2.0 * std::pow(k, 3) * mnp.omega_0 * std::pow(r, 3) / s), 1.0, 1e-12);
  EXPECT_NEAR(mnp.gamma_nr / (mat.gamma + std::pow(mat.gamma, 3) * s / std::pow(mat.omega_p, 2)),
              1.0, 1e-14);
  EXPECT_DOUBLE_EQ(mnp.gamma_0, mnp.gamma_nr + mnp.gamma_r);
  // The cubic Ohmic correction is a tiny perturbation for silver.
  EXPECT_LT((mnp.gamma_nr - mat.gamma) / mat.gamma, 1e-4);
}

TEST(DeriveMnp, PrintedOhmicVariantIsSelectable) {
  MaterialParams mat;
  mat.ohmic = qpm::OhmicCorrection::kAsPrinted;
  const qpm::MNPParams mnp = qpm::derive_mnp(mat, 16e-9);
  const double s = mat.frohlich_sum();
  EXPECT_NEAR(mnp.gamma_nr / (mat.gamma + std::pow(mat.gamma, 3) * s / mat.omega_p), 1.0, 1e-14);
}

TEST(DeriveMnp, RejectsBadInputs) {
  EXPECT_THROW(qpm::derive_mnp(MaterialParams{}, 0.0), qpm::DomainError);
  MaterialParams bad;
  bad.eps_b = 0.5;
  EXPECT_THROW(qpm::derive_mnp(bad, 16e-9), qpm::DomainError);
  bad = MaterialParams{};
  bad.gamma = -1.0;
  EXPECT_THROW(qpm::derive_mnp(bad, 16e-9), qpm::DomainError);
}

TEST(Couplings, GScalesWithOrientationAndInverseCube) {
  const MaterialParams mat;
  const qpm::MNPParams mnp = qpm::derive_mnp(mat, 16e-9);
  const qpm::QDParams qd = qpm::QDParams::from_dipole_radius(0.9e-9, mnp.omega_0, 80e9);
  const double gp = qpm::coupling_g(qd, mnp, 32e-9, qpm::Orientation::kPerpendicular, mat);
  const double gl = qpm::coupling_g(qd, mnp, 32e-9, qpm::Orientation::kParallel, mat);
  EXPECT_NEAR(gl / gp, -2.0, 1e-14);
  const double g2 = qpm::coupling_g(qd, mnp, 64e-9, qpm::Orientation::kPerpendicular, mat);
  EXPECT_NEAR(gp / g2, 8.0, 1e-12);

  const double r3 = std::pow(16e-9, 3);
  const double expected =
      -1.0 * qd.mu / std::pow(32e-9, 3) *
      std::sqrt(3.0 * mnp.eta * r3 / (4.0 * kPi * mat.eps_0 * qpm::constants::kHbar));
  EXPECT_NEAR(gp / expected, 1.0, 1e-14);
}

TEST(Couplings, ChiIsNegativeImaginary) {
  const MaterialParams mat;
  const qpm::MNPParams mnp = qpm::derive_mnp(mat, 16e-9);
  const cplx chi = qpm::coupling_chi(mnp, mat);
  EXPECT_EQ(chi.real(), 0.0);
  const double expected =
      mat.eps_b * std::sqrt(12.0 * kPi * mnp.eta * mat.eps_0 * qpm::constants::kHbar *
                            std::pow(16e-9, 3));
  EXPECT_NEAR(-chi.imag() / expected, 1.0, 1e-14);
}

TEST(Couplings, QdDipoleFromRadius) {
  const qpm::QDParams qd = qpm::QDParams::from_dipole_radius(0.9e-9, 4e15, 80e9);
  EXPECT_DOUBLE_EQ(qd.mu, qpm::constants::kElementaryCharge * 0.9e-9);
  EXPECT_THROW(qpm::QDParams::from_dipole_radius(-1e-9, 4e15, 80e9), qpm::DomainError);
}

TEST(RingQ, MatchesVectorDipoleFieldForManyGeometries) {
  const MaterialParams mat;
  std::mt19937_64 rng(20241015);
  std::uniform_real_distribution<double> radius(2e-9, 200e-9);
  std::uniform_real_distribution<double> omega(1e14, 8e15);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    const double R = radius(rng);
    const double k = mat.wavenumber(omega(rng));
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        if (j == l) continue;
        const cplx got = qpm::q_general({n, R}, j, l, k, mat);
        EXPECT_LT(rel(got, q_oracle(n, R, j, l, k, mat)), 1e-10)
            << "n=" << n << " R=" << R << " j=" << j << " l=" << l;
      }
    }
  }
}

TEST(RingQ, SymmetricUnderSiteExchange) {
  const MaterialParams mat;
  const double k = mat.wavenumber(4e15);
  for (int n = 2; n <= 8; ++n) {
    for (int j = 0; j < n; ++j) {
      for (int l = j + 1; l < n; ++l) {
        EXPECT_LT(rel(qpm::q_general({n, 38e-9}, j, l, k, mat),
                      qpm::q_general({n, 38e-9}, l, j, k, mat)),
                  1e-13);
      }
    }
  }
}

TEST(RingQ, ClosedFormsForFourSitesAgreeWithGeneralForm) {
  const MaterialParams mat;
  for (double R = 5e-9; R < 300e-9; R *= 1.13) {
    for (double w : {5e14, 3e15, 4.3e15, 7e15}) {
      const double k = mat.wavenumber(w);
      EXPECT_LT(rel(qpm::q_general({4, R}, 0, 1, k, mat), qpm::q_nearest_n4(R, k, mat)), 1e-10);
      EXPECT_LT(rel(qpm::q_general({4, R}, 0, 3, k, mat), qpm::q_nearest_n4(R, k, mat)), 1e-10);
      EXPECT_LT(rel(qpm::q_general({4, R}, 0, 2, k, mat), qpm::q_opposite_n4(R, k, mat)), 1e-10);
    }
  }
}

TEST(RingQ, StaticLimitOfNearestNeighbour) {
  const MaterialParams mat;
  const double R = 38e-9;
  const double rr = std::sqrt(2.0) * R;
  const double expected = 3.0 * R * R / (4.0 * kPi * mat.eps_0 * mat.eps_b * std::pow(rr, 5));
  EXPECT_LT(rel(qpm::q_general({4, R}, 0, 1, 0.0, mat), expected), 1e-13);
}

TEST(RingQ, RejectsInvalidSites) {
  const MaterialParams mat;
  EXPECT_THROW(qpm::q_general({4, 38e-9}, 1, 1, 1e7, mat), qpm::DomainError);
  EXPECT_THROW(qpm::q_general({4, 38e-9}, 0, 4, 1e7, mat), qpm::DomainError);
  EXPECT_THROW(qpm::q_general({1, 38e-9}, 0, 0, 1e7, mat), qpm::DomainError);
}

TEST(RingCouplings, JAndIFromQ) {
  const MaterialParams mat;
  const qpm::MNPParams mnp = qpm::derive_mnp(mat, 16e-9);
  const qpm::QDParams qd = qpm::QDParams::from_dipole_radius(0.9e-9, mnp.omega_0, 80e9);
  const cplx q{3.0e25, -1.5e24};
  const cplx j = qpm::coupling_J(mnp, mat, q);
  const cplx chi = qpm::coupling_chi(mnp, mat);
  // J = -|chi|^2 Q / hbar.
  EXPECT_LT(rel(j, -std::norm(chi) * q / qpm::constants::kHbar), 1e-13);
  const cplx i_derived = qpm::coupling_I(qd, q);
  const cplx i_printed = qpm::coupling_I(qd, q, qpm::QdCouplingSign::kAsPrinted);
  EXPECT_LT(rel(i_derived, -qd.mu * qd.mu * q / qpm::constants::kHbar), 1e-14);
  EXPECT_LT(rel(i_printed, -i_derived), 1e-15);
}

TEST(Units, ParsesFrequencyLiterals) {
  EXPECT_DOUBLE_EQ(qpm::parse_frequency("4.2e15"), 4.2e15);
  EXPECT_DOUBLE_EQ(qpm::parse_frequency("4.2e15 rad/s"), 4.2e15);
  EXPECT_DOUBLE_EQ(qpm::parse_frequency("4.35 THz"), 2.0 * kPi * 4.35e12);
  EXPECT_DOUBLE_EQ(qpm::parse_frequency("-1e12"), -1e12);
  EXPECT_THROW(qpm::parse_frequency("fast"), qpm::DomainError);
  EXPECT_THROW(qpm::parse_frequency("1 GHz"), qpm::DomainError);
  EXPECT_NEAR(qpm::rad_per_s_to_thz(qpm::thz_to_rad_per_s(0.05)), 0.05, 1e-17);
  EXPECT_NEAR(qpm::mev_to_rad_per_s(1.0), 1.519267e12, 1e6);
}
