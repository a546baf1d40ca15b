#include "djc/fock.hpp"

#include <cmath>

namespace djc::fock {

namespace {
const Complex kI(0.0, 1.0);
}

Eigen::MatrixXcd build_hamiltonian(const ModelParams& params, Subsystem s, FockTruncation trunc) {
  trunc.validate();
  const int nmax = trunc.nmax;
  const int dim = 2 * nmax;
  const double nu = params.nu(s);
  const double omega = params.omega(s);
  const double g = params.coupling(s);

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int spin = 0; spin < 2; ++spin) {
    const double sz = spin == 1 ? 1.0 : -1.0;
    for (int n = 0; n < nmax; ++n) {
      h(spin * nmax + n, spin * nmax + n) = nu * (n + 0.5) + 0.5 * omega * sz;
    }
  }
  // a^dag sigma_- : |up, n> -> sqrt(n+1) |down, n+1>
  for (int n = 0; n + 1 < nmax; ++n) {
    const double amp = g * std::sqrt(static_cast<double>(n + 1));
    h(0 * nmax + (n + 1), 1 * nmax + n) = amp;
    h(1 * nmax + n, 0 * nmax + (n + 1)) = amp;
  }
  return h;
}

double block_rabi(const ModelParams& params, Subsystem s, int n) {
  if (n < 1) throw std::invalid_argument("block index must be at least 1");
  const double g = params.coupling(s);
  const double half_delta = 0.5 * params.detuning(s);
  return std::sqrt(g * g * n + half_delta * half_delta);
}

Eigen::VectorXcd evolve(const Eigen::MatrixXcd& h, double t, const Eigen::VectorXcd& state) {
  if (h.rows() != h.cols() || h.rows() != state.size()) throw DimensionMismatch{};
  return Propagator(h).apply(t, state);
}

Propagator::Propagator(const Eigen::MatrixXcd& hamiltonian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  vecs_ = solver.eigenvectors();
  vals_ = solver.eigenvalues();
}

Eigen::VectorXcd Propagator::apply(double t, const Eigen::VectorXcd& state) const {
  if (state.size() != vals_.size()) throw DimensionMismatch{};
  Eigen::VectorXcd modal = vecs_.adjoint() * state;
  for (Eigen::Index i = 0; i < modal.size(); ++i) {
    modal(i) *= std::exp(-kI * vals_(i) * t);
  }
  return vecs_ * modal;
}

Eigen::MatrixXcd Propagator::unitary(double t) const {
  Eigen::VectorXcd phases(vals_.size());
  for (Eigen::Index i = 0; i < vals_.size(); ++i) {
    phases(i) = std::exp(-kI * vals_(i) * t);
  }
  return vecs_ * phases.asDiagonal() * vecs_.adjoint();
}

Eigen::VectorXcd embed_initial(const InitialStateSpec& spec, FockTruncation trunc) {
  trunc.validate();
  const int nmax = trunc.nmax;
  const int dim_side = 2 * nmax;
  const auto idx = [nmax, dim_side](int sa, int na, int sb, int nb) {
    return (sa * nmax + na) * dim_side + (sb * nmax + nb);
  };

  Eigen::VectorXcd joint = Eigen::VectorXcd::Zero(dim_side * dim_side);
  const double c = std::cos(spec.alpha);
  const Complex s = std::exp(kI * spec.beta) * std::sin(spec.alpha);
  if (spec.family == Family::Phi) {
    joint(idx(1, 0, 1, 0)) = c;  // up, up
    joint(idx(0, 0, 0, 0)) = s;  // down, down
  } else {
    joint(idx(1, 0, 0, 0)) = c;  // up, down
    joint(idx(0, 0, 1, 0)) = s;  // down, up
  }
  return joint;
}

ExtractResult extract_four_qubit(const Eigen::VectorXcd& joint, FockTruncation trunc) {
  trunc.validate();
  const int nmax = trunc.nmax;
  const int dim_side = 2 * nmax;
  if (joint.size() != dim_side * dim_side) throw DimensionMismatch{};

  Amplitudes amps{};
  double in_sector = 0.0;
  for (int sa = 0; sa < 2; ++sa) {
    for (int na = 0; na < 2; ++na) {
      for (int sb = 0; sb < 2; ++sb) {
        for (int nb = 0; nb < 2; ++nb) {
          const Complex amp = joint((sa * nmax + na) * dim_side + (sb * nmax + nb));
          amps[pack_index(sa, sb, na, nb)] = amp;
          in_sector += std::norm(amp);
        }
      }
    }
  }
  const double total = joint.squaredNorm();

  ExtractResult res;
  res.leakage = total - in_sector;
  res.state = make_state(amps, /*normalize=*/true);
  return res;
}

double fidelity_up_to_phase(const FourQubitState& s1, const FourQubitState& s2) {
  if (std::abs(norm(s1) - 1.0) > 1e-8 || std::abs(norm(s2) - 1.0) > 1e-8) {
    throw NotNormalized{};
  }
  return std::abs(overlap(s1, s2));
}

OracleEvolver::OracleEvolver(const ModelParams& params, FockTruncation trunc)
    : params_(params),
      trunc_(trunc),
      prop_a_(build_hamiltonian(params, Subsystem::A, trunc)),
      prop_b_(build_hamiltonian(params, Subsystem::B, trunc)) {
  params_.validate();
}

Eigen::VectorXcd OracleEvolver::joint_at(const InitialStateSpec& spec, double t) const {
  const int dim_side = 2 * trunc_.nmax;
  const Eigen::VectorXcd initial = embed_initial(spec, trunc_);

  // (U_A (x) U_B) v via the matrix reshape M(ia, ib) = v(ia*dim + ib):
  // M' = U_A M U_B^T.
  Eigen::MatrixXcd m(dim_side, dim_side);
  for (int ia = 0; ia < dim_side; ++ia) {
    for (int ib = 0; ib < dim_side; ++ib) {
      m(ia, ib) = initial(ia * dim_side + ib);
    }
  }
  const Eigen::MatrixXcd evolved =
      prop_a_.unitary(t) * m * prop_b_.unitary(t).transpose();

  Eigen::VectorXcd joint(dim_side * dim_side);
  for (int ia = 0; ia < dim_side; ++ia) {
    for (int ib = 0; ib < dim_side; ++ib) {
      joint(ia * dim_side + ib) = evolved(ia, ib);
    }
  }
  return joint;
}

ExtractResult OracleEvolver::four_qubit_at(const InitialStateSpec& spec, double t) const {
  return extract_four_qubit(joint_at(spec, t), trunc_);
}

Eigen::VectorXcd evolve_joint(const ModelParams& params, FockTruncation trunc,
                              const InitialStateSpec& spec, double t) {
  return OracleEvolver(params, trunc).joint_at(spec, t);
}

}  // namespace djc::fock
