#pragma once

// Driven-dissipative MNP-QD pair beyond the weak-field limit: Lindblad
// generator on a truncated boson (plasmon) x qubit (QD) space and its
// steady state.
//
// Basis ordering: index = 2 * n + q, with n the plasmon number and q = 0
// (ground) or 1 (excited). Density matrices are vectorised column-major,
// vec(rho)[i + dim * j] = rho(i, j), so vec(A rho B) = (B^T kron A) vec(rho).

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <span>
#include <vector>

#include "qpm/metamolecule.hpp"

namespace qpm {

using SparseOp = Eigen::SparseMatrix<cplx, Eigen::ColMajor>;
using Operator = Eigen::MatrixXcd;

struct HilbertConfig {
  int fock_dim = 15;

  int dim() const { return 2 * fock_dim; }
  void validate() const;  // fock_dim >= 2

  bool operator==(const HilbertConfig&) const = default;
};

/// Plasmon annihilation and QD lowering operators on the joint space.
struct ModeOperators {
  SparseOp a;
  SparseOp sigma;

  static ModeOperators build(const HilbertConfig& cfg);
};

/// Rotating-frame Hamiltonian divided by hbar (rad/s):
///   D0 a'a + Dx s's + i g (s a' - s' a) - (E0/hbar)(mu (s + s') + chi* a + chi a').
/// Throws std::logic_error if the result is not Hermitian.
Operator build_hamiltonian(const MetamoleculeParams& p, double omega, const HilbertConfig& cfg);

struct DecayRates {
  double gamma_0 = 0.0;  // plasmon
  double gamma_x = 0.0;  // QD
};

/// Lindblad generator stored divided by rate_scale, so matrix entries are
/// dimensionless; multiply by rate_scale to get 1/s.
struct SuperOperator {
  SparseOp matrix;
  int dim = 0;
  double rate_scale = 1.0;
};

SuperOperator build_liouvillian(const Operator& hamiltonian, const DecayRates& rates,
                                const HilbertConfig& cfg);

enum class SolverStrategy { kAuto, kSparse, kDense };

struct SteadyStateOptions {
  SolverStrategy strategy = SolverStrategy::kAuto;
  double tolerance = 1e-9;       // on ||L rho|| / ||rho||, dimensionless generator
  double positivity_tol = 1e-8;  // most negative eigenvalue tolerated
  double shift = 1e-9;           // inverse-iteration shift, dimensionless
  int max_iterations = 12;
  /// kAuto falls back to the dense solve when dim^2 is below this.
  int dense_fallback_limit = 2500;
};

struct SteadyState {
  Eigen::MatrixXcd rho;  // Hermitian, unit trace
  double residual = 0.0;
  std::vector<double> residual_history;
  double hermiticity_error = 0.0;  // max |rho - rho'| before symmetrisation
  double min_eigenvalue = 0.0;
  SolverStrategy used = SolverStrategy::kSparse;
};

SteadyState steady_state(const SuperOperator& generator, const SteadyStateOptions& options = {});

/// Tr[rho op].
cplx expectation(const Eigen::MatrixXcd& rho, const SparseOp& op);

struct NonlinearResponse {
  cplx alpha;  // C m^2 / V
  cplx a;      // Tr[rho a]
  cplx sigma;  // Tr[rho sigma]
  double qd_population = 0.0;
  double plasmon_number = 0.0;
  double residual = 0.0;
};

NonlinearResponse nonlinear_response(const MetamoleculeParams& p, double omega,
                                     const HilbertConfig& cfg,
                                     const SteadyStateOptions& options = {});

/// alpha = (chi* Tr[rho a] + mu Tr[rho sigma]) / E0. Throws DomainError for E0 = 0.
cplx nonlinear_polarizability(const MetamoleculeParams& p, double omega, const HilbertConfig& cfg,
                              const SteadyStateOptions& options = {});

/// Sweep of nonlinear_polarizability; points are independent and are split
/// across `threads` workers (0 = hardware concurrency).
ComplexSpectrum nonlinear_spectrum(const MetamoleculeParams& p, std::span<const double> grid,
                                   const HilbertConfig& cfg,
                                   const SteadyStateOptions& options = {}, unsigned threads = 1);

}  // namespace qpm
