#include "djc/state.hpp"

#include <cmath>
#include <random>

namespace djc {

namespace {

void check_finite(const Amplitudes& amps) {
  for (const Complex& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::invalid_argument("non-finite amplitude");
    }
  }
}

double norm_sq(const Amplitudes& amps) {
  double s = 0.0;
  for (const Complex& a : amps) s += std::norm(a);
  return s;
}

bool is_unitary(const Eigen::Matrix2cd& u) {
  const Eigen::Matrix2cd residual = u.adjoint() * u - Eigen::Matrix2cd::Identity();
  return residual.cwiseAbs().maxCoeff() <= kUnitaryTol;
}

// In-place action of a 2x2 matrix on the qubit stored in the given bit.
void apply_one_qubit(Amplitudes& amps, const Eigen::Matrix2cd& u, int bit) {
  const int step = 1 << bit;
  for (int base = 0; base < 16; ++base) {
    if (base & step) continue;
    const Complex lo = amps[base];
    const Complex hi = amps[base | step];
    amps[base] = u(0, 0) * lo + u(0, 1) * hi;
    amps[base | step] = u(1, 0) * lo + u(1, 1) * hi;
  }
}

}  // namespace

FourQubitState make_state(const Amplitudes& amps, bool normalize) {
  check_finite(amps);
  FourQubitState state{amps};
  if (normalize) {
    bool all_zero = true;
    for (const Complex& a : state.amps) {
      if (std::abs(a) >= 1e-30) {
        all_zero = false;
        break;
      }
    }
    if (all_zero) throw ZeroVector{};
    const double n = std::sqrt(norm_sq(state.amps));
    for (Complex& a : state.amps) a /= n;
  }
  return state;
}

double norm(const FourQubitState& state) { return std::sqrt(norm_sq(state.amps)); }

Complex overlap(const FourQubitState& s1, const FourQubitState& s2) {
  Complex acc = 0.0;
  for (int k = 0; k < 16; ++k) acc += std::conj(s1.amps[k]) * s2.amps[k];
  return acc;
}

FourQubitState apply_local_unitaries(const FourQubitState& state, const LocalUnitary& u) {
  for (const Eigen::Matrix2cd* factor : {&u.u4, &u.u3, &u.u2, &u.u1}) {
    if (!is_unitary(*factor)) throw NonUnitaryFactor{};
  }
  FourQubitState out = state;
  apply_one_qubit(out.amps, u.u4, 3);
  apply_one_qubit(out.amps, u.u3, 2);
  apply_one_qubit(out.amps, u.u2, 1);
  apply_one_qubit(out.amps, u.u1, 0);
  return out;
}

FourQubitState random_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Amplitudes amps;
  for (Complex& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = Complex(re, im);
  }
  return make_state(amps, /*normalize=*/true);
}

Eigen::Matrix2cd random_su2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double q[4];
  double len = 0.0;
  do {
    len = 0.0;
    for (double& x : q) {
      x = gauss(rng);
      len += x * x;
    }
    len = std::sqrt(len);
  } while (len < 1e-12);
  const double a = q[0] / len, b = q[1] / len, c = q[2] / len, d = q[3] / len;
  Eigen::Matrix2cd u;
  u << Complex(a, b), Complex(c, d), Complex(-c, d), Complex(a, -b);
  return u;
}

LocalUnitary random_local_unitary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LocalUnitary u;
  u.u4 = random_su2(rng());
  u.u3 = random_su2(rng());
  u.u2 = random_su2(rng());
  u.u1 = random_su2(rng());
  return u;
}

}  // namespace djc
