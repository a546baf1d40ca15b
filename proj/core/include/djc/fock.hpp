#pragma once

#include <utility>

#include <Eigen/Dense>

#include "djc/dynamics.hpp"
#include "djc/state.hpp"

namespace djc::fock {

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("operator and state dimensions differ") {}
};

struct NotNormalized : std::invalid_argument {
  NotNormalized() : std::invalid_argument("state is not unit-norm within tolerance") {}
};

// Photon numbers 0..nmax-1 are retained per cavity; nmax >= 2 so that the
// one-excitation sector is representable.
struct FockTruncation {
  int nmax = 2;
  void validate() const {
    if (nmax < 2) throw std::invalid_argument("nmax must be at least 2");
  }
};

// Single-pair Hamiltonian on the basis |s, n> (atom level s, photon number
// n), index = s*nmax + n:
//   <s,n|H|s,n> = nu (n + 1/2) +/- omega/2,
//   <down,n+1|H|up,n> = g sqrt(n+1).
Eigen::MatrixXcd build_hamiltonian(const ModelParams& params, Subsystem s, FockTruncation trunc);

// Dressed-doublet frequency of the n-excitation block, sqrt(g^2 n + delta^2/4).
double block_rabi(const ModelParams& params, Subsystem s, int n);

// exp(-i h t)|state> by Hermitian eigendecomposition; one-shot convenience.
Eigen::VectorXcd evolve(const Eigen::MatrixXcd& h, double t, const Eigen::VectorXcd& state);

// Caches the eigendecomposition of one Hermitian generator; immutable after
// construction, safe for concurrent readers.
class Propagator {
 public:
  explicit Propagator(const Eigen::MatrixXcd& hamiltonian);

  Eigen::Index dim() const { return vals_.size(); }
  Eigen::VectorXcd apply(double t, const Eigen::VectorXcd& state) const;
  Eigen::MatrixXcd unitary(double t) const;

 private:
  Eigen::MatrixXcd vecs_;
  Eigen::VectorXd vals_;
};

// Joint vector on (atom A x cavity a) x (atom B x cavity b);
// index = (sA*nmax + na) * (2*nmax) + (sB*nmax + nb).
Eigen::VectorXcd embed_initial(const InitialStateSpec& spec, FockTruncation trunc);

Eigen::VectorXcd evolve_joint(const ModelParams& params, FockTruncation trunc,
                              const InitialStateSpec& spec, double t);

struct ExtractResult {
  FourQubitState state;  // projected to photon numbers {0,1} and renormalized
  double leakage = 0.0;  // population outside that sector
};

ExtractResult extract_four_qubit(const Eigen::VectorXcd& joint, FockTruncation trunc);

// |<s1|s2>|; both inputs must be unit-norm within 1e-8.
double fidelity_up_to_phase(const FourQubitState& s1, const FourQubitState& s2);

// Bundles the two subsystem propagators for repeated evaluation along a
// sweep. Immutable; concurrent four_qubit_at calls are safe.
class OracleEvolver {
 public:
  OracleEvolver(const ModelParams& params, FockTruncation trunc);

  Eigen::VectorXcd joint_at(const InitialStateSpec& spec, double t) const;
  ExtractResult four_qubit_at(const InitialStateSpec& spec, double t) const;

  const ModelParams& params() const { return params_; }
  FockTruncation truncation() const { return trunc_; }

 private:
  ModelParams params_;
  FockTruncation trunc_;
  Propagator prop_a_;
  Propagator prop_b_;
};

}  // namespace djc::fock
