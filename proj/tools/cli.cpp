#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "twoatom/couplings.hpp"
#include "twoatom/errors.hpp"
#include "twoatom/scenario.hpp"

namespace twoatom::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double parse_number(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || !std::isfinite(v)) throw UsageError("option '" + key + "': '" + value + "' is not a number");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw UsageError("option '" + key + "': '" + value + "' is not a boolean");
}

double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

struct CouplingsOptions {
  double r12 = 1.0 / 6.0;
  double angle_deg = 90.0;
  std::string config;

  void apply(const std::string& key, const std::string& value) {
    if (key == "r12") r12 = parse_number(key, value);
    else if (key == "angle") angle_deg = parse_number(key, value);
    else throw UsageError("unknown config key '" + key + "' for 'couplings'");
  }
};

struct FigureOptions {
  int figure = 1;
  std::string out;
  bool caption = true;
  bool no_caption = false;
  std::string config;

  void apply(const std::string& key, const std::string& value) {
    if (key == "out") out = value;
    else if (key == "caption-couplings") caption = parse_bool(key, value);
    else if (key == "no-caption-couplings") caption = !parse_bool(key, value);
    else throw UsageError("unknown config key '" + key + "' for 'figure'");
  }
};

struct EvolveOptions {
  std::string init = "e1g2";
  double delta = 0.0;
  double r12 = 1.0 / 6.0;
  double angle_deg = 90.0;
  double omega0 = 0.0;
  double t_end = 8.0;
  double dt = 1e-3;
  std::size_t stride = 10;
  std::string engine = "collective";
  std::string out;
  bool caption = false;
  std::optional<double> gamma12_override;
  std::optional<double> omega12_override;
  std::string config;

  void apply(const std::string& key, const std::string& value) {
    if (key == "init") init = value;
    else if (key == "delta") delta = parse_number(key, value);
    else if (key == "r12") r12 = parse_number(key, value);
    else if (key == "angle") angle_deg = parse_number(key, value);
    else if (key == "omega0") omega0 = parse_number(key, value);
    else if (key == "t-end") t_end = parse_number(key, value);
    else if (key == "dt") dt = parse_number(key, value);
    else if (key == "stride") {
      const double s = parse_number(key, value);
      if (s < 1 || s != std::floor(s)) throw UsageError("option 'stride' must be a positive integer");
      stride = static_cast<std::size_t>(s);
    } else if (key == "engine") engine = value;
    else if (key == "out") out = value;
    else if (key == "caption-couplings") caption = parse_bool(key, value);
    else if (key == "gamma12-override") gamma12_override = parse_number(key, value);
    else if (key == "omega12-override") omega12_override = parse_number(key, value);
    else throw UsageError("unknown config key '" + key + "' for 'evolve'");
  }
};

template <typename Options>
void apply_config(Options& opts) {
  if (opts.config.empty()) return;
  std::map<std::string, std::string> entries;
  try {
    entries = read_config(opts.config);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  for (const auto& [key, value] : entries) opts.apply(key, value);
}

int run_couplings(const CouplingsOptions& o, std::ostream& out) {
  AtomPairConfig cfg;
  cfg.separation_over_lambda = o.r12;
  cfg.dipole_angle = normalize_dipole_angle(degrees_to_radians(o.angle_deg));
  double g12 = 0.0;
  double w12 = 0.0;
  try {
    g12 = collective_damping(cfg);
    w12 = dipole_dipole_shift(cfg);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "r12/lambda       = %.6g\nangle(mu, r12)   = %.6g deg\n", o.r12, o.angle_deg);
  out << buf;
  std::snprintf(buf, sizeof buf, "gamma12          = %.4f Gamma\n", g12);
  out << buf;
  std::snprintf(buf, sizeof buf, "omega12 [3/4]    = %.4f Gamma   (default, used by computed couplings)\n", w12);
  out << buf;
  std::snprintf(buf, sizeof buf, "omega12 [x2]     = %.4f Gamma   (doubled convention, 1.12 Gamma at lambda/6)\n",
                2.0 * w12);
  out << buf;
  return kExitOk;
}

void require_out(const std::string& path) {
  if (path.empty()) throw UsageError("--out <path> is required");
}

int run_figure(const FigureOptions& o, std::ostream& out) {
  require_out(o.out);
  const ScenarioSpec spec = figure_preset(o.figure, o.caption && !o.no_caption);
  const Trajectory traj = run_scenario(spec);
  write_csv(traj, std::filesystem::path(o.out));
  out << "wrote " << traj.times.size() << " rows for " << spec.name << " to " << o.out << '\n';
  return kExitOk;
}

int run_evolve(const EvolveOptions& o, std::ostream& out) {
  require_out(o.out);
  ScenarioSpec spec;
  spec.name = "evolve";
  try {
    spec.initial = initial_state_from_string(o.init);
  } catch (const std::invalid_argument&) {
    std::ifstream in(o.init);
    if (!in) throw UsageError("--init '" + o.init + "' is neither a preset name nor a readable file");
    spec.initial = InitialState::custom;
    try {
      spec.custom_state = read_density(in);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--init file: ") + e.what());
    }
  }
  try {
    spec.engine = engine_from_string(o.engine);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  spec.geometry.separation_over_lambda = o.r12;
  spec.geometry.dipole_angle = normalize_dipole_angle(degrees_to_radians(o.angle_deg));
  spec.geometry.delta = o.delta;
  spec.geometry.omega0 = o.omega0;
  spec.couplings_mode = o.caption ? CouplingsMode::caption_override : CouplingsMode::computed;
  spec.gamma12_override = o.gamma12_override;
  spec.omega12_override = o.omega12_override;
  spec.grid = {o.t_end, o.dt, o.stride};
  if (!(o.dt > 0.0)) throw UsageError("--dt must be positive");
  if (!(o.t_end >= 0.0)) throw UsageError("--t-end must be non-negative");

  SystemParams params;
  try {
    params = resolve_params(spec);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const Trajectory traj = run_scenario(spec);
  write_csv(traj, std::filesystem::path(o.out));
  out << "wrote " << traj.times.size() << " rows (gamma12 = " << params.gamma12 << ", omega12 = " << params.omega12
      << ", engine " << to_string(spec.engine) << ") to " << o.out << '\n';
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-atom spontaneous emission: couplings, dynamics and entanglement", "twoatom"};
  app.require_subcommand(1);

  CouplingsOptions copts;
  auto* couplings = app.add_subcommand("couplings", "Print the collective damping and dipole-dipole shift");
  couplings->add_option("--r12", copts.r12, "Separation in units of the resonant wavelength");
  couplings->add_option("--angle", copts.angle_deg, "Angle between dipole and interatomic axis (degrees)");
  couplings->add_option("--config", copts.config, "key = value file overriding flags");

  FigureOptions fopts;
  auto* figure = app.add_subcommand("figure", "Write the CSV of a figure preset (1..6)");
  figure->add_option("number", fopts.figure, "Figure number")->required()->check(CLI::Range(1, 6));
  figure->add_option("--out", fopts.out, "Output CSV path");
  figure->add_flag("--caption-couplings", fopts.caption, "Use gamma12 = 0.79, omega12 = 1.12 (default)");
  figure->add_flag("--no-caption-couplings", fopts.no_caption, "Compute couplings from the geometry instead");
  figure->add_option("--config", fopts.config, "key = value file overriding flags");

  EvolveOptions eopts;
  auto* evolve = app.add_subcommand("evolve", "Integrate a custom scenario and write its CSV");
  evolve->add_option("--init", eopts.init, "e1g2 | g1e2 | e1e2 | sym | antisym | <density-matrix file>");
  evolve->add_option("--delta", eopts.delta, "Half the transition-frequency difference (units of Gamma)");
  evolve->add_option("--r12", eopts.r12, "Separation in units of the resonant wavelength");
  evolve->add_option("--angle", eopts.angle_deg, "Angle between dipole and interatomic axis (degrees)");
  evolve->add_option("--omega0", eopts.omega0, "Mean transition frequency (0 = rotating frame)");
  evolve->add_option("--t-end", eopts.t_end, "Final time (Gamma t)");
  evolve->add_option("--dt", eopts.dt, "RK4 step (Gamma t)");
  evolve->add_option("--stride", eopts.stride, "Write every n-th step")->check(CLI::PositiveNumber);
  evolve->add_option("--engine", eopts.engine, "product | collective");
  evolve->add_option("--out", eopts.out, "Output CSV path");
  evolve->add_flag("--caption-couplings", eopts.caption, "Use gamma12 = 0.79, omega12 = 1.12");
  evolve->add_option("--gamma12-override", eopts.gamma12_override, "Pin gamma12 (|value| = 1 selects the Dicke limit)");
  evolve->add_option("--omega12-override", eopts.omega12_override, "Pin omega12");
  evolve->add_option("--config", eopts.config, "key = value file overriding flags");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (couplings->parsed()) {
      apply_config(copts);
      return run_couplings(copts, out);
    }
    if (figure->parsed()) {
      apply_config(fopts);
      return run_figure(fopts, out);
    }
    apply_config(eopts);
    return run_evolve(eopts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "numerical invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace twoatom::cli
