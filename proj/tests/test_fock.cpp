#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "djc/fock.hpp"
#include "helpers.hpp"

using namespace djc;
using namespace djc::fock;
using namespace djc::testing;

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// N = a^dag a + (sigma_z + 1)/2 on the |s, n> basis
Eigen::MatrixXcd number_operator(int nmax) {
  Eigen::MatrixXcd n_op = Eigen::MatrixXcd::Zero(2 * nmax, 2 * nmax);
  for (int s = 0; s < 2; ++s) {
    for (int n = 0; n < nmax; ++n) {
      n_op(s * nmax + n, s * nmax + n) = n + s;
    }
  }
  return n_op;
}

}  // namespace

TEST_CASE("build_hamiltonian") {
  const ModelParams p = detuned_double_params();

  SUBCASE("coupling element") {
    const Eigen::MatrixXcd h = build_hamiltonian(p, Subsystem::A, {2});
    // <down,1|H|up,0> = g sqrt(1); basis index s*nmax+n
    CHECK(std::abs(h(1, 2) - Complex(p.coupling_a)) < 1e-15);
  }

  SUBCASE("sqrt(n+1) ladder weights") {
    const Eigen::MatrixXcd h = build_hamiltonian(p, Subsystem::B, {4});
    CHECK(std::abs(h(2, 4 + 1) - Complex(p.coupling_b * std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(h(3, 4 + 2) - Complex(p.coupling_b * std::sqrt(3.0))) < 1e-15);
  }

  SUBCASE("diagonal elements") {
    const Eigen::MatrixXcd h = build_hamiltonian(p, Subsystem::A, {3});
    CHECK(std::abs(h(0, 0) - Complex(p.nu_a * 0.5 - 0.5 * p.omega_a)) < 1e-15);
    CHECK(std::abs(h(3 + 1, 3 + 1) - Complex(p.nu_a * 1.5 + 0.5 * p.omega_a)) < 1e-15);
  }

  SUBCASE("hermitian and excitation conserving") {
    for (int nmax : {2, 3, 4}) {
      for (Subsystem s : {Subsystem::A, Subsystem::B}) {
        const Eigen::MatrixXcd h = build_hamiltonian(p, s, {nmax});
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
        const Eigen::MatrixXcd n_op = number_operator(nmax);
        CHECK((h * n_op - n_op * h).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }

  SUBCASE("truncation below two is rejected") {
    CHECK_THROWS_AS(build_hamiltonian(p, Subsystem::A, {1}), std::invalid_argument);
  }
}

TEST_CASE("block_rabi") {
  const ModelParams p = detuned_equal_params();
  SUBCASE("n = 1 reproduces the one-excitation frequency") {
    CHECK(block_rabi(p, Subsystem::A, 1) == doctest::Approx(p.rabi(Subsystem::A)).epsilon(1e-14));
  }
  SUBCASE("resonance scaling") {
    CHECK(block_rabi(resonance_equal_params(), Subsystem::B, 4) == doctest::Approx(2.0));
  }
  SUBCASE("matches the eigen-splitting of the excitation blocks") {
    for (int n = 1; n <= 3; ++n) {
      const Eigen::MatrixXcd h = build_hamiltonian(p, Subsystem::A, {4});
      // block basis {|up, n-1>, |down, n>}
      Eigen::Matrix2cd block;
      block << h(4 + (n - 1), 4 + (n - 1)), h(4 + (n - 1), n), h(n, 4 + (n - 1)), h(n, n);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(block);
      const double split = solver.eigenvalues()(1) - solver.eigenvalues()(0);
      CHECK(std::abs(split - 2.0 * block_rabi(p, Subsystem::A, n)) < 1e-10);
    }
  }
  SUBCASE("invalid block index") {
    CHECK_THROWS_AS(block_rabi(p, Subsystem::A, 0), std::invalid_argument);
  }
}

TEST_CASE("evolve") {
  const ModelParams p = detuned_double_params();
  const Eigen::MatrixXcd h = build_hamiltonian(p, Subsystem::A, {3});
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(6);
  v(3) = Complex(0.6, 0.0);
  v(1) = Complex(0.0, 0.8);

  SUBCASE("t = 0 is the identity") {
    const Eigen::VectorXcd out = evolve(h, 0.0, v);
    CHECK((out - v).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("norm preservation") {
    for (double t : {0.3, 1.7, 12.0}) {
      CHECK(std::abs(evolve(h, t, v).norm() - v.norm()) < 1e-12);
    }
  }
  SUBCASE("group property") {
    const Eigen::VectorXcd two_step = evolve(h, 0.9, evolve(h, 0.4, v));
    const Eigen::VectorXcd one_step = evolve(h, 1.3, v);
    CHECK((two_step - one_step).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("dimension mismatch") {
    Eigen::VectorXcd bad = Eigen::VectorXcd::Zero(4);
    CHECK_THROWS_AS(evolve(h, 1.0, bad), DimensionMismatch);
  }
}

TEST_CASE("evolve_joint") {
  const InitialStateSpec phi{Family::Phi, 0.6, 0.3};

  SUBCASE("t = 0 returns the embedded initial state") {
    for (const ModelParams& p : standard_param_sets()) {
      const Eigen::VectorXcd joint = evolve_joint(p, {2}, phi, 0.0);
      const Eigen::VectorXcd want = embed_initial(phi, {2});
      CHECK((joint - want).cwiseAbs().maxCoeff() < 1e-13);
    }
  }

  SUBCASE("leakage stays below 1e-12 for any truncation") {
    for (const ModelParams& p : standard_param_sets()) {
      for (int nmax : {2, 3, 4}) {
        for (double t : linspace(0.0, 2.0 * kPi, 7)) {
          for (Family fam : {Family::Phi, Family::Psi}) {
            const InitialStateSpec spec{fam, 0.7, 0.4};
            const auto res = extract_four_qubit(evolve_joint(p, {nmax}, spec, t), {nmax});
            CHECK(res.leakage < 1e-12);
          }
        }
      }
    }
  }

  SUBCASE("resonance half-period moves both excitations into the cavities") {
    const InitialStateSpec product{Family::Phi, 0.0, 0.0};
    const auto res =
        extract_four_qubit(evolve_joint(resonance_equal_params(), {2}, product, kPi / 2.0), {2});
    CHECK(std::abs(std::abs(res.state.amps[3]) - 1.0) < 1e-12);
  }

  SUBCASE("energy expectation is conserved") {
    const ModelParams p = detuned_double_params();
    const int nmax = 3;
    const Eigen::MatrixXcd ha = build_hamiltonian(p, Subsystem::A, {nmax});
    const Eigen::MatrixXcd hb = build_hamiltonian(p, Subsystem::B, {nmax});
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2 * nmax, 2 * nmax);
    const Eigen::MatrixXcd h_tot = kron(ha, id) + kron(id, hb);

    const Eigen::VectorXcd v0 = evolve_joint(p, {nmax}, phi, 0.0);
    const Complex e0 = (v0.adjoint() * h_tot * v0)(0);
    for (double t : linspace(0.1, 8.0, 6)) {
      const Eigen::VectorXcd vt = evolve_joint(p, {nmax}, phi, t);
      const Complex et = (vt.adjoint() * h_tot * vt)(0);
      CHECK(std::abs(et - e0) / std::abs(e0) < 1e-10);
    }
  }

  SUBCASE("truncation independence") {
    const ModelParams p = detuned_double_params();
    for (double t : {0.5, 1.9, 4.2}) {
      const auto r2 = extract_four_qubit(evolve_joint(p, {2}, phi, t), {2});
      const auto r3 = extract_four_qubit(evolve_joint(p, {3}, phi, t), {3});
      const auto r4 = extract_four_qubit(evolve_joint(p, {4}, phi, t), {4});
      for (int k = 0; k < 16; ++k) {
        CHECK(std::abs(r2.state.amps[k] - r3.state.amps[k]) < 1e-12);
        CHECK(std::abs(r2.state.amps[k] - r4.state.amps[k]) < 1e-12);
      }
    }
  }
}

TEST_CASE("extract_four_qubit") {
  SUBCASE("in-sector state has zero leakage") {
    const auto res = extract_four_qubit(embed_initial({Family::Phi, 0.8, 0.1}, {2}), {2});
    CHECK(res.leakage == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(norm(res.state) - 1.0) < 1e-14);
  }
  SUBCASE("hand-built out-of-sector weight is reported") {
    const int nmax = 3;
    const int dim_side = 2 * nmax;
    Eigen::VectorXcd joint = Eigen::VectorXcd::Zero(dim_side * dim_side);
    // sqrt(0.75)|down,0;down,0> + sqrt(0.25)|down,2;down,0>
    joint(0) = std::sqrt(0.75);
    joint(2 * dim_side) = std::sqrt(0.25);
    const auto res = extract_four_qubit(joint, {nmax});
    CHECK(res.leakage == doctest::Approx(0.25).epsilon(1e-14));
  }
}

TEST_CASE("fidelity_up_to_phase") {
  const FourQubitState s = random_state(8);
  SUBCASE("global phase is ignored") {
    Amplitudes rotated = s.amps;
    for (Complex& a : rotated) a *= std::exp(Complex(0.0, 1.234));
    CHECK(fidelity_up_to_phase(s, make_state(rotated)) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("orthogonal states give zero") {
    CHECK(fidelity_up_to_phase(basis_state(2), basis_state(9)) == 0.0);
  }
  SUBCASE("unnormalized input is rejected") {
    Amplitudes big = s.amps;
    for (Complex& a : big) a *= 1.5;
    CHECK_THROWS_AS(fidelity_up_to_phase(s, FourQubitState{big}), NotNormalized);
  }
}

TEST_CASE("closed forms against the oracle") {
  const auto invariant_gap = [](const InvariantSet& a, const InvariantSet& b) {
    double worst = std::abs(a.i1 - b.i1);
    worst = std::max(worst, std::abs(a.i2 - b.i2));
    worst = std::max(worst, std::abs(a.i3 - b.i3));
    worst = std::max(worst, std::abs(a.i4 - b.i4));
    worst = std::max(worst, std::abs(a.d4 - b.d4));
    return std::max(worst, std::abs(a.tau4 - b.tau4));
  };
  for (const ModelParams& p : standard_param_sets()) {
    const OracleEvolver oracle(p, {2});
    for (double t : linspace(0.0, 2.0 * kPi, 7)) {
      for (double alpha : {0.0, 0.6, kPi / 2.0}) {
        for (double beta : {0.0, 1.0}) {
          const InitialStateSpec phi{Family::Phi, alpha, beta};
          const InitialStateSpec psi{Family::Psi, alpha, beta};
          const FourQubitState closed_phi = phi_state(p, alpha, beta, t);
          const FourQubitState closed_psi = psi_state(p, alpha, beta, t);
          const FourQubitState oracle_phi = oracle.four_qubit_at(phi, t).state;
          const FourQubitState oracle_psi = oracle.four_qubit_at(psi, t).state;
          CHECK(fidelity_up_to_phase(closed_phi, oracle_phi) >= 1.0 - 1e-10);
          CHECK(fidelity_up_to_phase(closed_psi, oracle_psi) >= 1.0 - 1e-10);
          CHECK(invariant_gap(compute_invariants(closed_phi), compute_invariants(oracle_phi)) <
                1e-10);
          CHECK(invariant_gap(compute_invariants(closed_psi), compute_invariants(oracle_psi)) <
                1e-10);
        }
      }
    }
  }
}
