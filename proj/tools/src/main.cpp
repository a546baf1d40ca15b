#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "djc/fock.hpp"
#include "djc/invariants.hpp"
#include "io.hpp"
#include "sweep.hpp"
#include "verify.hpp"

namespace {

using namespace djc;
using namespace djc::tools;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification failure or I/O trouble
constexpr int kExitUsage = 2;    // bad flags, bad config, bad input files

struct SweepCli {
  SweepConfig cfg;
  std::string family_name = "phi";
  double alpha_fixed = 0.0;
  std::string config_path;
  CLI::App* cmd = nullptr;
  CLI::Option* alpha_fixed_opt = nullptr;

  void finalize() {
    if (!config_path.empty()) apply_config_file();
    cfg.family = family_name == "psi" ? Family::Psi : Family::Phi;
    if (alpha_fixed_opt != nullptr && alpha_fixed_opt->count() > 0) {
      cfg.alpha_start = cfg.alpha_stop = alpha_fixed;
      cfg.alpha_steps = 1;
    }
  }

  // key=value per line, '#' comments; keys are the long flag names.
  // Flags given on the command line keep precedence.
  void apply_config_file() {
    std::ifstream in(config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + config_path);
    const auto trim = [](std::string s) {
      const auto first = s.find_first_not_of(" \t\r");
      const auto last = s.find_last_not_of(" \t\r");
      if (first == std::string::npos) return std::string{};
      return s.substr(first, last - first + 1);
    };
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      const std::string stripped = trim(line);
      if (stripped.empty()) continue;
      const auto where = config_path + ":" + std::to_string(line_no);
      const auto eq = stripped.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument(where + ": expected key=value");
      }
      const std::string key = trim(stripped.substr(0, eq));
      const std::string value = trim(stripped.substr(eq + 1));
      CLI::Option* opt = cmd->get_option_no_throw("--" + key);
      if (opt == nullptr || key == "config") {
        throw std::invalid_argument(where + ": unknown key '" + key + "'");
      }
      if (opt->count() > 0) continue;
      opt->add_result(value);
      opt->run_callback();
    }
  }
};

void add_model_options(CLI::App* cmd, SweepConfig& cfg) {
  cmd->add_option("--nu-a", cfg.params.nu_a, "field frequency of cavity a")->capture_default_str();
  cmd->add_option("--omega-a", cfg.params.omega_a, "transition frequency of atom A")
      ->capture_default_str();
  cmd->add_option("--g-a", cfg.params.coupling_a, "coupling constant of pair A")
      ->capture_default_str();
  cmd->add_option("--nu-b", cfg.params.nu_b, "field frequency of cavity b")->capture_default_str();
  cmd->add_option("--omega-b", cfg.params.omega_b, "transition frequency of atom B")
      ->capture_default_str();
  cmd->add_option("--g-b", cfg.params.coupling_b, "coupling constant of pair B")
      ->capture_default_str();
  cmd->add_option("--nmax", cfg.nmax, "retained photon numbers per cavity (>= 2)")
      ->capture_default_str();
}

void add_sweep_options(CLI::App* cmd, SweepCli& cli, bool with_fixed_alpha) {
  cli.cmd = cmd;
  add_model_options(cmd, cli.cfg);
  cmd->add_option("--config", cli.config_path, "key=value file; command-line flags win");
  cmd->add_option("--family", cli.family_name, "initial-state family")
      ->check(CLI::IsMember({"phi", "psi"}))
      ->capture_default_str();
  cmd->add_option("--t-start", cli.cfg.t_start, "sweep start time")->capture_default_str();
  cmd->add_option("--t-stop", cli.cfg.t_stop, "sweep stop time")->capture_default_str();
  cmd->add_option("--t-steps", cli.cfg.t_steps, "number of time samples")->capture_default_str();
  auto* astart = cmd->add_option("--alpha-start", cli.cfg.alpha_start, "alpha sweep start")
                     ->capture_default_str();
  auto* astop = cmd->add_option("--alpha-stop", cli.cfg.alpha_stop, "alpha sweep stop")
                    ->capture_default_str();
  auto* asteps = cmd->add_option("--alpha-steps", cli.cfg.alpha_steps, "number of alpha samples")
                     ->capture_default_str();
  if (with_fixed_alpha) {
    cli.alpha_fixed_opt =
        cmd->add_option("--alpha", cli.alpha_fixed, "fixed alpha (disables the alpha sweep)");
    cli.alpha_fixed_opt->excludes(astart)->excludes(astop)->excludes(asteps);
  }
  cmd->add_option("--beta", cli.cfg.beta, "relative phase of the initial state")
      ->capture_default_str();
}

int run_invariants(const std::string& path, const std::string& out_path) {
  const Amplitudes amps = read_amplitude_file(path);

  bool all_zero = true;
  for (const Complex& a : amps) {
    if (std::abs(a) >= 1e-30) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) throw ZeroVector{};

  const FourQubitState state = make_state(amps);
  const InvariantSet inv = compute_invariants(state);

  std::string text;
  const auto add_complex = [&text](const char* name, Complex v) {
    text += name;
    text += " = ";
    text += format17(v.real());
    text += ' ';
    text += format17(v.imag());
    text += '\n';
  };
  text += "norm = " + format17(norm(state)) + '\n';
  add_complex("I1  ", inv.i1);
  add_complex("I2  ", inv.i2);
  add_complex("I3  ", inv.i3);
  add_complex("I4  ", inv.i4);
  add_complex("S   ", inv.s);
  add_complex("T   ", inv.t);
  add_complex("D4  ", inv.d4);
  text += "tau4 = " + format17(inv.tau4) + '\n';

  std::fputs(text.c_str(), stdout);
  if (!out_path.empty()) {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw IOError("cannot open " + out_path + " for writing");
    os << text;
    if (!os) throw IOError("failed writing " + out_path);
  }
  return kExitOk;
}

int run_evolve(SweepCli& cli) {
  cli.finalize();
  validate_config(cli.cfg, /*require_two_axes=*/false);
  const std::vector<GridPoint> grid = evaluate_grid(cli.cfg);
  if (cli.cfg.out_path.empty()) {
    write_csv(std::cout, grid);
  } else {
    write_csv_file(cli.cfg.out_path, grid);
    std::printf("wrote %zu rows to %s\n", grid.size(), cli.cfg.out_path.c_str());
  }
  return kExitOk;
}

int run_surface(SweepCli& cli) {
  cli.finalize();
  validate_config(cli.cfg, /*require_two_axes=*/true);
  const std::vector<GridPoint> grid = evaluate_grid(cli.cfg);
  write_csv_file(cli.cfg.out_path, grid);
  write_svg_heatmap_file(cli.cfg.svg_path, cli.cfg, grid);
  std::printf("wrote %s and %s (%d x %d cells)\n", cli.cfg.out_path.c_str(),
              cli.cfg.svg_path.c_str(), cli.cfg.t_steps, cli.cfg.alpha_steps);
  return kExitOk;
}

int run_verify_cmd(SweepCli& cli) {
  cli.finalize();
  validate_config(cli.cfg, /*require_two_axes=*/false);
  return run_verify(cli.cfg, std::cout) ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double Jaynes-Cummings model: four-qubit states, invariants and cross-checks"};
  app.require_subcommand(1);

  std::string amp_path;
  std::string inv_out;
  auto* cmd_invariants =
      app.add_subcommand("invariants", "invariants of a state given as 16 amplitudes");
  cmd_invariants->add_option("file", amp_path, "amplitude file (16 rows of \"re im\")")
      ->required();
  cmd_invariants->add_option("--out", inv_out, "also write the report to this path");

  SweepCli evolve_cli;
  auto* cmd_evolve = app.add_subcommand("evolve", "invariant time series as CSV");
  add_sweep_options(cmd_evolve, evolve_cli, /*with_fixed_alpha=*/true);
  cmd_evolve->add_option("--out", evolve_cli.cfg.out_path, "CSV path (stdout when omitted)");

  SweepCli surface_cli;
  surface_cli.cfg.alpha_steps = 33;
  auto* cmd_surface = app.add_subcommand("surface", "tau4(t, alpha) heatmap as SVG + CSV");
  add_sweep_options(cmd_surface, surface_cli, /*with_fixed_alpha=*/false);
  surface_cli.cfg.out_path = "surface.csv";
  surface_cli.cfg.svg_path = "surface.svg";
  cmd_surface->add_option("--out", surface_cli.cfg.out_path, "CSV grid path")
      ->capture_default_str();
  cmd_surface->add_option("--svg", surface_cli.cfg.svg_path, "SVG heatmap path")
      ->capture_default_str();

  SweepCli verify_cli;
  verify_cli.cfg.t_steps = 25;
  verify_cli.cfg.alpha_steps = 9;
  auto* cmd_verify =
      app.add_subcommand("verify", "closed forms vs Fock-space evolution, plus variant report");
  add_sweep_options(cmd_verify, verify_cli, /*with_fixed_alpha=*/false);
  cmd_verify->add_option("--out", verify_cli.cfg.out_path, "per-point CSV detail path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_invariants) return run_invariants(amp_path, inv_out);
    if (*cmd_evolve) return run_evolve(evolve_cli);
    if (*cmd_surface) return run_surface(surface_cli);
    if (*cmd_verify) return run_verify_cmd(verify_cli);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IOError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
