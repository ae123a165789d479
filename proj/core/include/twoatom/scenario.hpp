#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoatom/couplings.hpp"
#include "twoatom/dynamics.hpp"
#include "twoatom/hilbert.hpp"

namespace twoatom {

enum class InitialState { e1g2, g1e2, e1e2, sym, antisym, custom };

std::string to_string(InitialState s);
// Accepts the preset names above (not "custom").
InitialState initial_state_from_string(const std::string& s);

enum class CouplingsMode {
  computed,         // from geometry
  caption_override  // gamma12 = 0.79, omega12 = 1.12
};

struct TimeGrid {
  double t_end = 8.0;
  double dt = 1e-3;
  std::size_t stride = 10;
};

struct ScenarioSpec {
  std::string name = "custom";
  // Expected qualitative behaviour, checked by the acceptance suite.
  std::string claim;
  InitialState initial = InitialState::e1g2;
  std::optional<DensityMatrix> custom_state;  // required when initial == custom
  AtomPairConfig geometry;
  CouplingsMode couplings_mode = CouplingsMode::computed;
  std::optional<double> gamma12_override;
  std::optional<double> omega12_override;
  TimeGrid grid;
  Engine engine = Engine::collective;
};

// Pure initial state for a preset name (product basis).
DensityMatrix initial_density(InitialState s);
DensityMatrix initial_density(const ScenarioSpec& spec);

// Resolves the couplings (computed, caption, or manual overrides) into
// dynamics parameters. A manual |gamma12| equal to gamma enables the Dicke limit.
SystemParams resolve_params(const ScenarioSpec& spec);

// Presets for figures 1-6. All use r12 = lambda/6 with mu perpendicular to r12.
ScenarioSpec figure_preset(int figure, bool caption_couplings = true);

// Collective populations, <a|rho|s>, concurrence, negativity and S^2.
Observables observe(const DensityMatrix& rho);

// Integrates the scenario and fills Trajectory::derived.
Trajectory run_scenario(const ScenarioSpec& spec);

// Least-squares slope of log(values) against times over t0 <= t <= t1.
// Throws std::invalid_argument with fewer than two points or a non-positive value.
double log_linear_slope(const std::vector<double>& times, const std::vector<double>& values, double t0, double t1);

// Concurrence column of a trajectory produced by run_scenario.
std::vector<double> concurrence_series(const Trajectory& traj);

inline constexpr const char* kCsvHeader =
    "gamma_t,concurrence,negativity,rho_ee,rho_ss,rho_aa,rho_gg,re_rho_as,im_rho_as,s_squared";

// One row per stored step, 12 significant digits. Throws std::runtime_error
// naming the path on I/O failure.
void write_csv(const Trajectory& traj, std::ostream& os);
void write_csv(const Trajectory& traj, const std::filesystem::path& path);

// `key = value` lines, `#` starts a comment, blank lines ignored. Throws
// std::invalid_argument with the line number for malformed input.
std::map<std::string, std::string> parse_config(std::istream& is);
std::map<std::string, std::string> read_config(const std::filesystem::path& path);

}  // namespace twoatom
