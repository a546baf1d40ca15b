#include "sweep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "djc/fock.hpp"

namespace djc::tools {

std::vector<double> linspace(double start, double stop, int steps) {
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

void validate_config(const SweepConfig& cfg, bool require_two_axes) {
  cfg.params.validate();
  fock::FockTruncation{cfg.nmax}.validate();

  if (cfg.t_steps < 1 || cfg.alpha_steps < 1) {
    throw std::invalid_argument("step counts must be at least 1");
  }
  if (require_two_axes && (cfg.t_steps < 2 || cfg.alpha_steps < 2)) {
    throw std::invalid_argument("surface needs both t and alpha swept (steps >= 2)");
  }
  if (cfg.t_steps > 1 && cfg.t_stop < cfg.t_start) {
    throw std::invalid_argument("t range is reversed");
  }

  constexpr double kHalfPi = std::numbers::pi / 2.0;
  constexpr double kSlack = 1e-9;
  const double alpha_lo = std::min(cfg.alpha_start, cfg.alpha_stop);
  const double alpha_hi = std::max(cfg.alpha_start, cfg.alpha_stop);
  if (alpha_lo < -kSlack || alpha_hi > kHalfPi + kSlack) {
    throw std::invalid_argument("alpha must lie in [0, pi/2]");
  }
  if (cfg.beta < -kSlack || cfg.beta > std::numbers::pi + kSlack) {
    throw std::invalid_argument("beta must lie in [0, pi]");
  }
}

std::vector<GridPoint> evaluate_grid(const SweepConfig& cfg) {
  const fock::OracleEvolver oracle(cfg.params, {cfg.nmax});
  const std::vector<double> ts = linspace(cfg.t_start, cfg.t_stop, cfg.t_steps);
  const std::vector<double> alphas = linspace(cfg.alpha_start, cfg.alpha_stop, cfg.alpha_steps);

  std::vector<GridPoint> grid;
  grid.reserve(ts.size() * alphas.size());
  for (double t : ts) {
    for (double alpha : alphas) {
      const InitialStateSpec spec{cfg.family, alpha, cfg.beta};
      GridPoint point;
      point.t = t;
      point.alpha = alpha;
      point.beta = cfg.beta;
      point.inv = compute_invariants(evolved_state(cfg.params, spec, t));
      point.leakage = oracle.four_qubit_at(spec, t).leakage;
      grid.push_back(point);
    }
  }
  return grid;
}

}  // namespace djc::tools
