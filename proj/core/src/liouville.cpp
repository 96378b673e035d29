#include "qpm/liouville.hpp"

#include <spdlog/spdlog.h>

#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <unsupported/Eigen/KroneckerProduct>

#include "qpm/errors.hpp"

namespace qpm {

using constants::kHbar;

namespace {

SparseOp identity(int n) {
  SparseOp id(n, n);
  id.setIdentity();
  return id;
}

SparseOp kron(const SparseOp& lhs, const SparseOp& rhs) {
  SparseOp out;
  out = Eigen::kroneckerProduct(lhs, rhs);
  return out;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho) {
  return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, int dim) {
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), dim, dim);
}

cplx vec_trace(const Eigen::VectorXcd& v, int dim) {
  cplx tr = 0.0;
  for (int i = 0; i < dim; ++i) tr += v(i + dim * i);
  return tr;
}

double relative_residual(const SparseOp& l, const Eigen::VectorXcd& v) {
  return (l * v).norm() / v.norm();
}

struct Finalized {
  Eigen::MatrixXcd rho;
  double hermiticity_error;
  double min_eigenvalue;
};

Finalized finalize(const Eigen::VectorXcd& v, int dim, double positivity_tol) {
  Eigen::MatrixXcd rho = unvectorize(v, dim);
  rho /= rho.trace();
  Finalized out;
  out.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  out.rho = 0.5 * (rho + rho.adjoint());
  out.rho /= out.rho.trace().real();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(out.rho, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = eig.eigenvalues().minCoeff();
  if (out.min_eigenvalue < -positivity_tol) {
    throw NumericalError("steady state is not positive semidefinite (min eigenvalue " +
                             std::to_string(out.min_eigenvalue) + ")",
                         {out.min_eigenvalue});
  }
  return out;
}

SteadyState solve_sparse(const SuperOperator& gen, const SteadyStateOptions& opt) {
  const int dim = gen.dim;
  const Eigen::Index n2 = gen.matrix.rows();

  SparseOp shifted = gen.matrix;
  for (Eigen::Index k = 0; k < n2; ++k) shifted.coeffRef(k, k) -= opt.shift;
  shifted.makeCompressed();

  Eigen::SparseLU<SparseOp, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(shifted);
  lu.factorize(shifted);
  if (lu.info() != Eigen::Success) {
    throw NumericalError("steady_state: sparse LU of the shifted generator failed: " +
                         lu.lastErrorMessage());
  }

  // Start from the maximally mixed state, which overlaps the steady state
  // through the trace.
  Eigen::VectorXcd v = vectorize(Eigen::MatrixXcd::Identity(dim, dim) / double(dim));
  SteadyState out;
  out.used = SolverStrategy::kSparse;
  double residual = relative_residual(gen.matrix, v);
  for (int it = 0; it < opt.max_iterations; ++it) {
    Eigen::VectorXcd next = lu.solve(v);
    if (lu.info() != Eigen::Success || !next.allFinite()) {
      throw NumericalError("steady_state: inverse iteration produced a non-finite iterate",
                           out.residual_history);
    }
    const cplx tr = vec_trace(next, dim);
    if (std::abs(tr) == 0.0) {
      throw NumericalError("steady_state: iterate lost its trace", out.residual_history);
    }
    next /= tr;
    const double r = relative_residual(gen.matrix, next);
    out.residual_history.push_back(r);
    v = std::move(next);
    // Stop once converged and no longer improving.
    if (r < opt.tolerance && r > 0.5 * residual) {
      residual = r;
      break;
    }
    residual = r;
    if (r < 1e-3 * opt.tolerance) break;
  }
  if (!(residual < opt.tolerance)) {
    throw NumericalError("steady_state: inverse iteration did not converge (residual " +
                             std::to_string(residual) + ")",
                         out.residual_history);
  }

  const Finalized fin = finalize(v, dim, opt.positivity_tol);
  out.rho = fin.rho;
  out.hermiticity_error = fin.hermiticity_error;
  out.min_eigenvalue = fin.min_eigenvalue;
  out.residual = relative_residual(gen.matrix, vectorize(out.rho));
  return out;
}

SteadyState solve_dense(const SuperOperator& gen, const SteadyStateOptions& opt) {
  const int dim = gen.dim;
  Eigen::MatrixXcd m = Eigen::MatrixXcd(gen.matrix);
  // The (0,0) population equation is redundant under trace preservation;
  // replace it with Tr rho = 1.
  m.row(0).setZero();
  for (int i = 0; i < dim; ++i) m(0, i + dim * i) = 1.0;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(m.rows());
  rhs(0) = 1.0;

  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(m);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-15)) {
    throw NumericalError("steady_state: dense generator has a degenerate null space",
                         {rcond});
  }
  const Eigen::VectorXcd v = lu.solve(rhs);

  SteadyState out;
  out.used = SolverStrategy::kDense;
  out.residual_history.push_back(relative_residual(gen.matrix, v));
  const Finalized fin = finalize(v, dim, opt.positivity_tol);
  out.rho = fin.rho;
  out.hermiticity_error = fin.hermiticity_error;
  out.min_eigenvalue = fin.min_eigenvalue;
  out.residual = relative_residual(gen.matrix, vectorize(out.rho));
  if (!(out.residual < opt.tolerance)) {
    throw NumericalError("steady_state: dense solve residual " + std::to_string(out.residual) +
                             " above tolerance",
                         out.residual_history);
  }
  return out;
}

}  // namespace

void HilbertConfig::validate() const {
  if (fock_dim < 2) throw DomainError("fock_dim must be >= 2");
}

ModeOperators ModeOperators::build(const HilbertConfig& cfg) {
  cfg.validate();
  SparseOp boson(cfg.fock_dim, cfg.fock_dim);
  std::vector<Eigen::Triplet<cplx>> trip;
  for (int n = 1; n < cfg.fock_dim; ++n) trip.emplace_back(n - 1, n, std::sqrt(double(n)));
  boson.setFromTriplets(trip.begin(), trip.end());

  SparseOp lowering(2, 2);
  lowering.insert(0, 1) = 1.0;
  lowering.makeCompressed();

  ModeOperators ops;
  ops.a = kron(boson, identity(2));
  ops.sigma = kron(identity(cfg.fock_dim), lowering);
  return ops;
}

Operator build_hamiltonian(const MetamoleculeParams& p, double omega, const HilbertConfig& cfg) {
  const ModeOperators ops = ModeOperators::build(cfg);
  const SparseOp a_dag = ops.a.adjoint();
  const SparseOp s_dag = ops.sigma.adjoint();
  const cplx i{0.0, 1.0};
  const double drive = p.field / kHbar;

  SparseOp h = (p.mnp.omega_0 - omega) * (a_dag * ops.a) +
               (p.qd.omega_x - omega) * (s_dag * ops.sigma);
  h += (i * p.g) * (ops.sigma * a_dag - s_dag * ops.a);
  h -= (drive * p.qd.mu) * (ops.sigma + s_dag);
  h -= drive * (std::conj(p.chi) * ops.a + p.chi * a_dag);

  Operator dense(h);
  const double scale = std::max(1.0, dense.cwiseAbs().maxCoeff());
  const double herm = (dense - dense.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12 * scale) {
    throw std::logic_error("build_hamiltonian: non-Hermitian generator (" + std::to_string(herm) +
                           ")");
  }
  return dense;
}

SuperOperator build_liouvillian(const Operator& hamiltonian, const DecayRates& rates,
                                const HilbertConfig& cfg) {
  cfg.validate();
  const int dim = cfg.dim();
  if (hamiltonian.rows() != dim || hamiltonian.cols() != dim) {
    throw std::invalid_argument("build_liouvillian: Hamiltonian is " +
                                std::to_string(hamiltonian.rows()) + "x" +
                                std::to_string(hamiltonian.cols()) + ", expected " +
                                std::to_string(dim));
  }
  if (rates.gamma_0 < 0.0 || rates.gamma_x < 0.0) {
    throw DomainError("decay rates must be non-negative");
  }

  SuperOperator out;
  out.dim = dim;
  out.rate_scale = std::max(rates.gamma_0, rates.gamma_x);
  if (out.rate_scale == 0.0) out.rate_scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());

  const ModeOperators ops = ModeOperators::build(cfg);
  const SparseOp id = identity(dim);
  const SparseOp h = (hamiltonian / out.rate_scale).sparseView();
  const SparseOp h_t = h.transpose();
  const cplx i{0.0, 1.0};

  SparseOp l = -i * (kron(id, h) - kron(h_t, id));
  const auto add_dissipator = [&](const SparseOp& c, double rate) {
    if (rate == 0.0) return;
    const double g = rate / out.rate_scale;
    const SparseOp c_dag = c.adjoint();
    const SparseOp number = c_dag * c;
    const SparseOp number_t = number.transpose();
    const SparseOp c_conj = c.conjugate();
    l += g * kron(c_conj, c);
    l -= (0.5 * g) * kron(id, number);
    l -= (0.5 * g) * kron(number_t, id);
  };
  add_dissipator(ops.a, rates.gamma_0);
  add_dissipator(ops.sigma, rates.gamma_x);
  l.prune(cplx{0.0, 0.0});
  l.makeCompressed();
  out.matrix = std::move(l);
  return out;
}

SteadyState steady_state(const SuperOperator& generator, const SteadyStateOptions& options) {
  const long n2 = static_cast<long>(generator.dim) * generator.dim;
  switch (options.strategy) {
    case SolverStrategy::kDense:
      return solve_dense(generator, options);
    case SolverStrategy::kSparse:
      return solve_sparse(generator, options);
    case SolverStrategy::kAuto:
      break;
  }
  try {
    return solve_sparse(generator, options);
  } catch (const NumericalError& err) {
    if (n2 >= options.dense_fallback_limit) throw;
    spdlog::debug("sparse steady-state solve failed ({}); using dense fallback", err.what());
    return solve_dense(generator, options);
  }
}

cplx expectation(const Eigen::MatrixXcd& rho, const SparseOp& op) {
  cplx acc = 0.0;
  for (int col = 0; col < op.outerSize(); ++col) {
    for (SparseOp::InnerIterator it(op, col); it; ++it) {
      acc += it.value() * rho(it.col(), it.row());
    }
  }
  return acc;
}

NonlinearResponse nonlinear_response(const MetamoleculeParams& p, double omega,
                                     const HilbertConfig& cfg,
                                     const SteadyStateOptions& options) {
  if (!(p.field > 0.0)) {
    throw DomainError("nonlinear polarizability needs a non-zero drive field");
  }
  const Operator h = build_hamiltonian(p, omega, cfg);
  const SuperOperator l = build_liouvillian(h, {p.mnp.gamma_0, p.qd.gamma_x}, cfg);
  const SteadyState ss = steady_state(l, options);
  const ModeOperators ops = ModeOperators::build(cfg);

  NonlinearResponse out;
  out.a = expectation(ss.rho, ops.a);
  out.sigma = expectation(ss.rho, ops.sigma);
  out.alpha = (std::conj(p.chi) * out.a + p.qd.mu * out.sigma) / p.field;
  out.qd_population = expectation(ss.rho, SparseOp(ops.sigma.adjoint() * ops.sigma)).real();
  out.plasmon_number = expectation(ss.rho, SparseOp(ops.a.adjoint() * ops.a)).real();
  out.residual = ss.residual;
  return out;
}

cplx nonlinear_polarizability(const MetamoleculeParams& p, double omega, const HilbertConfig& cfg,
                              const SteadyStateOptions& options) {
  return nonlinear_response(p, omega, cfg, options).alpha;
}

ComplexSpectrum nonlinear_spectrum(const MetamoleculeParams& p, std::span<const double> grid,
                                   const HilbertConfig& cfg, const SteadyStateOptions& options,
                                   unsigned threads) {
  validate_grid(grid);
  cfg.validate();
  ComplexSpectrum out;
  out.omega.assign(grid.begin(), grid.end());
  out.values.assign(grid.size(), cplx{});

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, grid.size()));

  std::vector<std::exception_ptr> errors(threads);
  const auto work = [&](unsigned worker) {
    try {
      for (std::size_t n = worker; n < grid.size(); n += threads) {
        out.values[n] = nonlinear_polarizability(p, grid[n], cfg, options);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return out;
}

}  // namespace qpm
