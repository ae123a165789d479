#include "twoatom/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "twoatom/entanglement.hpp"

namespace twoatom {

std::string to_string(InitialState s) {
  switch (s) {
    case InitialState::e1g2: return "e1g2";
    case InitialState::g1e2: return "g1e2";
    case InitialState::e1e2: return "e1e2";
    case InitialState::sym: return "sym";
    case InitialState::antisym: return "antisym";
    case InitialState::custom: return "custom";
  }
  return "custom";
}

InitialState initial_state_from_string(const std::string& s) {
  for (auto st : {InitialState::e1g2, InitialState::g1e2, InitialState::e1e2, InitialState::sym,
                  InitialState::antisym})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown initial state '" + s + "' (expected e1g2, g1e2, e1e2, sym, antisym)");
}

DensityMatrix initial_density(InitialState s) {
  const double h = 1.0 / std::sqrt(2.0);
  std::array<Complex, 4> amp{};
  switch (s) {
    case InitialState::e1g2: amp[product_index::eg] = 1.0; break;
    case InitialState::g1e2: amp[product_index::ge] = 1.0; break;
    case InitialState::e1e2: amp[product_index::ee] = 1.0; break;
    case InitialState::sym:
      amp[product_index::eg] = h;
      amp[product_index::ge] = h;
      break;
    case InitialState::antisym:
      amp[product_index::eg] = h;
      amp[product_index::ge] = -h;
      break;
    case InitialState::custom:
      throw std::invalid_argument("initial_density: custom state has no preset amplitudes");
  }
  return pure_state_density(amp, Basis::product);
}

DensityMatrix initial_density(const ScenarioSpec& spec) {
  if (spec.initial != InitialState::custom) return initial_density(spec.initial);
  if (!spec.custom_state) throw std::invalid_argument("scenario: custom initial state not provided");
  return *spec.custom_state;
}

SystemParams resolve_params(const ScenarioSpec& spec) {
  CouplingParams c = spec.couplings_mode == CouplingsMode::caption_override ? caption_couplings()
                                                                            : compute_couplings(spec.geometry);
  SystemParams p;
  p.gamma = spec.geometry.gamma;
  p.gamma12 = spec.gamma12_override.value_or(c.gamma12);
  p.omega12 = spec.omega12_override.value_or(c.omega12);
  p.delta = spec.geometry.delta;
  p.omega0 = spec.geometry.omega0;
  p.allow_dicke_limit = spec.gamma12_override.has_value() && std::abs(*spec.gamma12_override) == p.gamma;
  p.validate();
  return p;
}

ScenarioSpec figure_preset(int figure, bool caption_couplings) {
  ScenarioSpec spec;
  spec.name = "figure-" + std::to_string(figure);
  spec.geometry.separation_over_lambda = 1.0 / 6.0;
  spec.geometry.dipole_angle = std::numbers::pi / 2;
  spec.couplings_mode = caption_couplings ? CouplingsMode::caption_override : CouplingsMode::computed;
  spec.grid = {8.0, 1e-3, 10};
  switch (figure) {
    case 1:
      spec.initial = InitialState::e1g2;
      spec.claim =
          "C starts at 0, rises to a single interior maximum reached once rho_ss has decayed below 0.1, "
          "and then follows rho_aa (relative gap < 1% at Gamma t = 8).";
      break;
    case 2:
      spec.initial = InitialState::e1e2;
      spec.grid.t_end = 12.0;
      spec.claim =
          "C stays 0 while rho_ss is appreciable, appears once rho_ss < 1e-3 and then decays at the "
          "subradiant rate Gamma - Gamma12.";
      break;
    case 3:
      spec.initial = InitialState::e1g2;
      spec.geometry.delta = 1.0;
      spec.claim = "Detuning lets population leak into |a>, so the long-time entanglement exceeds the delta = 0 case.";
      break;
    case 4:
      spec.initial = InitialState::g1e2;
      spec.geometry.delta = 1.0;
      spec.claim = "C shows a fast early stage and a slow late stage with different time scales.";
      break;
    case 5:
      spec.initial = InitialState::sym;
      spec.geometry.delta = 1.0;
      spec.claim =
          "C starts at 1, drops to zero inside 1.5 <= Gamma t <= 2.5 where rho_ss = rho_aa, then revives.";
      break;
    case 6:
      spec.initial = InitialState::antisym;
      spec.geometry.delta = 1.0;
      spec.claim = "C decays exponentially at late times with rate Gamma - Gamma12.";
      break;
    default: throw std::invalid_argument("figure preset must be 1..6, got " + std::to_string(figure));
  }
  return spec;
}

Observables observe(const DensityMatrix& rho) {
  using namespace collective_index;
  const DensityMatrix c = basis_change(rho, Basis::collective);
  const MeasureResult m = measure(rho);
  Observables o;
  o.rho_ee = c(e, e).real();
  o.rho_ss = c(s, s).real();
  o.rho_aa = c(a, a).real();
  o.rho_gg = c(g, g).real();
  o.rho_as = c(a, s);
  o.concurrence = m.concurrence;
  o.negativity = m.negativity;
  o.s_squared = 2.0 - 2.0 * o.rho_aa;
  return o;
}

Trajectory run_scenario(const ScenarioSpec& spec) {
  IntegrationOptions opts;
  opts.t_end = spec.grid.t_end;
  opts.dt = spec.grid.dt;
  opts.stride = spec.grid.stride;
  opts.engine = spec.engine;
  opts.output_basis = Basis::collective;
  Trajectory traj = integrate(initial_density(spec), resolve_params(spec), opts);
  traj.derived.reserve(traj.states.size());
  for (const auto& rho : traj.states) traj.derived.push_back(observe(rho));
  return traj;
}

double log_linear_slope(const std::vector<double>& times, const std::vector<double>& values, double t0, double t1) {
  if (times.size() != values.size()) throw std::invalid_argument("log_linear_slope: size mismatch");
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    const double t = times[k];
    if (t < t0 || t > t1) continue;
    if (!(values[k] > 0.0)) throw std::invalid_argument("log_linear_slope: non-positive value in the fit window");
    const double y = std::log(values[k]);
    n += 1;
    sx += t;
    sy += y;
    sxx += t * t;
    sxy += t * y;
  }
  const double denom = n * sxx - sx * sx;
  if (n < 2 || denom <= 0.0) throw std::invalid_argument("log_linear_slope: fewer than two points in the window");
  return (n * sxy - sx * sy) / denom;
}

std::vector<double> concurrence_series(const Trajectory& traj) {
  std::vector<double> c;
  c.reserve(traj.derived.size());
  for (const auto& o : traj.derived) c.push_back(o.concurrence);
  return c;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  // adding zero folds -0 into +0
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
  return buf;
}

}  // namespace

void write_csv(const Trajectory& traj, std::ostream& os) {
  if (traj.derived.size() != traj.times.size())
    throw std::invalid_argument("write_csv: trajectory has no derived observables");
  os << kCsvHeader << '\n';
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Observables& o = traj.derived[k];
    os << fmt(traj.times[k]) << ',' << fmt(o.concurrence) << ',' << fmt(o.negativity) << ',' << fmt(o.rho_ee)
       << ',' << fmt(o.rho_ss) << ',' << fmt(o.rho_aa) << ',' << fmt(o.rho_gg) << ',' << fmt(o.rho_as.real())
       << ',' << fmt(o.rho_as.imag()) << ',' << fmt(o.s_squared) << '\n';
  }
}

void write_csv(const Trajectory& traj, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(traj, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::map<std::string, std::string> parse_config(std::istream& is) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string{};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key.empty() || value.empty())
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key or value");
    out[key] = value;
  }
  return out;
}

std::map<std::string, std::string> read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path.string() + "'");
  return parse_config(in);
}

}  // namespace twoatom
