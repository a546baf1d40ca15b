#include "djc/dynamics.hpp"

#include <cmath>

namespace djc {

namespace {
const Complex kI(0.0, 1.0);
}

double ModelParams::rabi(Subsystem s) const {
  const double g = coupling(s);
  const double half_delta = 0.5 * detuning(s);
  return std::sqrt(g * g + half_delta * half_delta);
}

void ModelParams::validate() const {
  const double fields[] = {nu_a, omega_a, coupling_a, nu_b, omega_b, coupling_b};
  for (double v : fields) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite model parameter");
  }
  if (coupling_a <= 0.0 || coupling_b <= 0.0) {
    throw std::invalid_argument("coupling constants must be positive");
  }
}

double sinc_rotation(double w, double t) {
  const double x = w * t;
  if (std::abs(x) < 1e-8) {
    return t * (1.0 - x * x / 6.0);
  }
  return std::sin(x) / w;
}

JCCoefficients coefficients(const ModelParams& params, Subsystem s, double t) {
  const double g = params.coupling(s);
  const double delta = params.detuning(s);
  const double nu = params.nu(s);
  const double omega_r = params.rabi(s);
  const double sinc = sinc_rotation(omega_r, t);
  const Complex field_phase = std::exp(-kI * nu * t);

  JCCoefficients c;
  c.f = field_phase * (std::cos(omega_r * t) - kI * 0.5 * delta * sinc);
  c.g = -kI * g * sinc * field_phase;
  // phase of the unexcited level |down, 0>, whose energy is nu/2 - omega/2 = -delta/2
  c.h = std::exp(kI * 0.5 * delta * t);
  return c;
}

FourQubitState phi_state(const ModelParams& params, double alpha, double beta, double t) {
  const JCCoefficients ca = coefficients(params, Subsystem::A, t);
  const JCCoefficients cb = coefficients(params, Subsystem::B, t);
  const double c = std::cos(alpha);
  const Complex s = std::exp(kI * beta) * std::sin(alpha);

  Amplitudes amps{};
  amps[pack_index(0, 0, 0, 0)] = ca.h * cb.h * s;
  amps[pack_index(0, 0, 1, 1)] = ca.g * cb.g * c;
  amps[pack_index(0, 1, 1, 0)] = ca.g * cb.f * c;
  amps[pack_index(1, 0, 0, 1)] = ca.f * cb.g * c;
  amps[pack_index(1, 1, 0, 0)] = ca.f * cb.f * c;
  return make_state(amps);
}

FourQubitState psi_state(const ModelParams& params, double alpha, double beta, double t) {
  const JCCoefficients ca = coefficients(params, Subsystem::A, t);
  const JCCoefficients cb = coefficients(params, Subsystem::B, t);
  const double c = std::cos(alpha);
  const Complex s = std::exp(kI * beta) * std::sin(alpha);

  Amplitudes amps{};
  amps[pack_index(0, 0, 0, 1)] = ca.h * cb.g * s;
  amps[pack_index(0, 0, 1, 0)] = ca.g * cb.h * c;
  amps[pack_index(0, 1, 0, 0)] = ca.h * cb.f * s;
  amps[pack_index(1, 0, 0, 0)] = ca.f * cb.h * c;
  return make_state(amps);
}

FourQubitState evolved_state(const ModelParams& params, const InitialStateSpec& spec, double t) {
  return spec.family == Family::Phi ? phi_state(params, spec.alpha, spec.beta, t)
                                    : psi_state(params, spec.alpha, spec.beta, t);
}

Complex closed_form_I1_phi(const ModelParams& params, double alpha, double t) {
  const JCCoefficients ca = coefficients(params, Subsystem::A, t);
  const JCCoefficients cb = coefficients(params, Subsystem::B, t);
  const double c = std::cos(alpha);
  const Complex a = (ca.f * cb.g * c) * (ca.g * cb.f * c);
  const Complex b = (ca.f * cb.f * c) * (ca.g * cb.g * c);
  return 0.5 * (a + b);
}

Complex closed_form_I2_phi(const ModelParams& params, double alpha, double t) {
  const JCCoefficients ca = coefficients(params, Subsystem::A, t);
  const JCCoefficients cb = coefficients(params, Subsystem::B, t);
  const double c = std::cos(alpha);
  const Complex a = (ca.f * cb.g * c) * (ca.g * cb.f * c);
  const Complex b = (ca.f * cb.f * c) * (ca.g * cb.g * c);
  return (a * a + 4.0 * a * b + b * b) / 6.0;
}

Complex closed_form_I3_phi(const ModelParams& params, double alpha, double t) {
  const JCCoefficients ca = coefficients(params, Subsystem::A, t);
  const JCCoefficients cb = coefficients(params, Subsystem::B, t);
  const double c = std::cos(alpha);
  const Complex a = (ca.f * cb.g * c) * (ca.g * cb.f * c);
  const Complex b = (ca.f * cb.f * c) * (ca.g * cb.g * c);
  return 0.5 * (a * b) * (a + b);
}

InvariantSet ghz_family_reference(double alpha, double beta) {
  const double sin2a = std::sin(2.0 * alpha);
  const Complex phase = std::exp(kI * beta);

  InvariantSet inv;
  inv.i1 = 0.5 * std::cos(alpha) * std::sin(alpha) * phase;
  inv.i2 = (sin2a * sin2a / 24.0) * phase * phase;
  inv.i3 = 0.0;
  inv.i4 = 0.0;
  const FourDeterminant fd = four_determinant(inv.i1, inv.i2, inv.i3, inv.i4);
  inv.s = fd.s;
  inv.t = fd.t;
  inv.d4 = fd.d4;
  inv.tau4 = sin2a * sin2a;
  return inv;
}

}  // namespace djc
