#include "djc/reference_variants.hpp"

#include <cmath>

namespace djc::variants {

namespace {

const Complex kI(0.0, 1.0);

Complex drive_phase(const ModelParams& p, double t, int power) {
  return std::exp(-kI * (static_cast<double>(power) * t * (p.nu_a + p.nu_b)));
}

Complex general_form(const ModelParams& p, double alpha, double t, bool quadratic) {
  const double ga = p.coupling(Subsystem::A);
  const double gb = p.coupling(Subsystem::B);
  const double da = p.detuning(Subsystem::A);
  const double db = p.detuning(Subsystem::B);
  const double ea = quadratic ? ga * ga : ga;
  const double eb = quadratic ? gb * gb : gb;

  const double wa = std::sqrt(0.25 * da * da + ea);
  const double wb = std::sqrt(0.25 * db * db + eb);
  const double sa = std::sin(wa * t);
  const double sb = std::sin(wb * t);
  const Complex big_a = std::sqrt(da * da + 4.0 * ea) * std::cos(wa * t) - kI * da * sa;
  const Complex big_b = std::sqrt(db * db + 4.0 * eb) * std::cos(wb * t) - kI * db * sb;
  const Complex pre =
      -4.0 * ga * gb / ((da * da + 4.0 * ea) * (db * db + 4.0 * eb)) * drive_phase(p, t, 2);
  const double c = std::cos(alpha);
  return pre * c * c * sa * sb * big_a * big_b;
}

}  // namespace

Complex i1_general(const ModelParams& p, double alpha, double t) {
  return general_form(p, alpha, t, /*quadratic=*/false);
}

Complex i1_general_quadratic(const ModelParams& p, double alpha, double t) {
  return general_form(p, alpha, t, /*quadratic=*/true);
}

Complex i1_resonance(const ModelParams& p, double alpha, double t) {
  const double ga = p.coupling(Subsystem::A);
  const double gb = p.coupling(Subsystem::B);
  const double c = std::cos(alpha);
  return -0.25 * std::sqrt(ga * gb) * drive_phase(p, t, 2) * c * c *
         std::sin(2.0 * t * std::sqrt(ga)) * std::sin(2.0 * t * std::sqrt(gb));
}

Complex i1_double_coupling(const ModelParams& p, double alpha, double t) {
  const double gb = p.coupling(Subsystem::B);
  const double c = std::cos(alpha);
  return -(std::sqrt(2.0) / 4.0) * gb * drive_phase(p, t, 2) * c * c *
         std::sin(2.0 * t * std::sqrt(2.0 * gb)) * std::sin(2.0 * t * std::sqrt(gb));
}

Complex i1_equal_coupling(const ModelParams& p, double alpha, double t) {
  const double gb = p.coupling(Subsystem::B);
  const double c = std::cos(alpha);
  const double s = std::sin(2.0 * t * std::sqrt(gb));
  return -0.25 * gb * drive_phase(p, t, 2) * c * c * s * s;
}

Complex i2_resonance(const ModelParams& p, double alpha, double t) {
  const double ga = p.coupling(Subsystem::A);
  const double gb = p.coupling(Subsystem::B);
  const double c = std::cos(alpha);
  return -(1.0 / 16.0) * std::sqrt(ga * gb) * drive_phase(p, t, 4) * c * c *
         std::sin(2.0 * t * std::sqrt(ga)) * std::sin(2.0 * t * std::sqrt(gb));
}

Complex i3_resonance(const ModelParams& p, double alpha, double t) {
  const double ga = p.coupling(Subsystem::A);
  const double gb = p.coupling(Subsystem::B);
  const double c = std::cos(alpha);
  const double c2 = c * c;
  const double sa = std::sin(2.0 * t * std::sqrt(ga));
  const double sb = std::sin(2.0 * t * std::sqrt(gb));
  return -(1.0 / 64.0) * std::pow(ga * gb, 1.5) * drive_phase(p, t, 6) * c2 * c2 * c2 *
         (sa * sa * sa) * (sb * sb * sb);
}

}  // namespace djc::variants
