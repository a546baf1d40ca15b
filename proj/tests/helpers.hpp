#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "djc/dynamics.hpp"
#include "djc/state.hpp"

namespace djc::testing {

inline constexpr double kPi = std::numbers::pi;

inline FourQubitState ghz_family(double alpha, double beta) {
  Amplitudes a{};
  a[0] = std::cos(alpha);
  a[15] = std::exp(Complex(0.0, beta)) * std::sin(alpha);
  return make_state(a);
}

inline FourQubitState ghz4() { return ghz_family(kPi / 4.0, 0.0); }

inline FourQubitState w_state() {
  Amplitudes a{};
  a[1] = a[2] = a[4] = a[8] = 0.5;
  return make_state(a);
}

inline FourQubitState basis_state(int k) {
  Amplitudes a{};
  a[k] = 1.0;
  return make_state(a);
}

inline FourQubitState random_support_state(std::uint64_t seed, const std::vector<int>& support) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Amplitudes a{};
  for (int k : support) a[k] = Complex(gauss(rng), gauss(rng));
  return make_state(a, /*normalize=*/true);
}

// Random amplitudes on the Phi-family support {0, 3, 6, 9, 12}.
inline FourQubitState random_phi_support(std::uint64_t seed) {
  return random_support_state(seed, {0, 3, 6, 9, 12});
}

// Random amplitudes on the Psi-family support {1, 2, 4, 8}.
inline FourQubitState random_psi_support(std::uint64_t seed) {
  return random_support_state(seed, {1, 2, 4, 8});
}

inline ModelParams resonance_equal_params() {
  ModelParams p;
  p.nu_a = p.omega_a = 1.0;
  p.nu_b = p.omega_b = 1.0;
  p.coupling_a = p.coupling_b = 1.0;
  return p;
}

inline ModelParams resonance_double_params() {
  ModelParams p;
  p.nu_a = p.omega_a = 1.0;
  p.nu_b = p.omega_b = 1.2;
  p.coupling_a = 2.0;
  p.coupling_b = 1.0;
  return p;
}

inline ModelParams detuned_equal_params() {
  ModelParams p;
  p.nu_a = 1.0;
  p.omega_a = 1.5;  // delta_A = 0.5
  p.nu_b = 1.3;
  p.omega_b = 2.3;  // delta_B = 1.0
  p.coupling_a = p.coupling_b = 1.0;
  return p;
}

inline ModelParams detuned_double_params() {
  ModelParams p = detuned_equal_params();
  p.coupling_a = 1.6;
  p.coupling_b = 0.8;
  return p;
}

// Resonance, detuned (delta_A = 0.5, delta_B = 1.0), equal couplings and
// g_A = 2 g_B.
inline std::vector<ModelParams> standard_param_sets() {
  return {resonance_equal_params(), resonance_double_params(), detuned_equal_params(),
          detuned_double_params()};
}

inline std::vector<double> linspace(double start, double stop, int steps) {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < steps; ++i) {
    out.push_back(start + (stop - start) * static_cast<double>(i) / (steps - 1));
  }
  return out;
}

inline double rel_err(Complex got, Complex want) {
  const double scale = std::abs(want);
  if (scale < 1e-300) return std::abs(got - want);
  return std::abs(got - want) / scale;
}

inline double rel_err(double got, double want) {
  return rel_err(Complex(got, 0.0), Complex(want, 0.0));
}

}  // namespace djc::testing
