#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "twoatom/analytic.hpp"
#include "twoatom/scenario.hpp"

using namespace twoatom;

TEST_CASE("figure presets") {
  const struct {
    int n;
    InitialState init;
    double delta;
    double t_end;
  } expected[] = {{1, InitialState::e1g2, 0.0, 8.0},    {2, InitialState::e1e2, 0.0, 12.0},
                  {3, InitialState::e1g2, 1.0, 8.0},    {4, InitialState::g1e2, 1.0, 8.0},
                  {5, InitialState::sym, 1.0, 8.0},     {6, InitialState::antisym, 1.0, 8.0}};
  for (const auto& e : expected) {
    CAPTURE(e.n);
    const auto spec = figure_preset(e.n);
    CHECK(spec.initial == e.init);
    CHECK(spec.geometry.delta == e.delta);
    CHECK(spec.grid.t_end == e.t_end);
    CHECK(spec.grid.dt == 1e-3);
    const auto p = resolve_params(spec);
    CHECK(p.gamma12 == 0.79);
    CHECK(p.omega12 == 1.12);
  }
  const auto computed = resolve_params(figure_preset(1, false));
  CHECK(std::abs(computed.gamma12 - 0.79321675501254984) < 1e-13);
  CHECK(std::abs(computed.omega12 - 0.5607385172658469) < 1e-13);
  CHECK_THROWS_AS(figure_preset(7), std::invalid_argument);
  CHECK_THROWS_AS(figure_preset(0), std::invalid_argument);
}

TEST_CASE("overrides and the Dicke limit") {
  ScenarioSpec spec;
  spec.gamma12_override = 1.0;
  spec.omega12_override = 0.3;
  const auto p = resolve_params(spec);
  CHECK(p.gamma12 == 1.0);
  CHECK(p.omega12 == 0.3);
  CHECK(p.allow_dicke_limit);
  spec.gamma12_override = 1.5;
  CHECK_THROWS_AS(resolve_params(spec), std::domain_error);
}

TEST_CASE("initial states") {
  using namespace collective_index;
  const auto sym = basis_change(initial_density(InitialState::sym), Basis::collective);
  CHECK(std::abs(sym(s, s) - 1.0) < 1e-15);
  const auto anti = basis_change(initial_density(InitialState::antisym), Basis::collective);
  CHECK(std::abs(anti(a, a) - 1.0) < 1e-15);
  const auto ge = basis_change(initial_density(InitialState::g1e2), Basis::collective);
  CHECK(std::abs(ge(a, s) + 0.5) < 1e-15);
  CHECK(initial_state_from_string("e1e2") == InitialState::e1e2);
  CHECK_THROWS_AS(initial_state_from_string("custom"), std::invalid_argument);
  ScenarioSpec spec;
  spec.initial = InitialState::custom;
  CHECK_THROWS_AS(initial_density(spec), std::invalid_argument);
}

TEST_CASE("CSV output") {
  auto spec = figure_preset(1);
  spec.grid.t_end = 0.05;
  const auto traj = run_scenario(spec);
  std::ostringstream os;
  write_csv(traj, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == kCsvHeader);
  std::getline(in, line);
  CHECK(line == "0,0,0,0,0.5,0.5,0,0.5,0,1");
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == traj.times.size());
  CHECK(rows == 6);

  const auto exact = one_excited_solution(0.05, resolve_params(spec));
  const auto& last = traj.derived.back();
  CHECK(std::abs(last.rho_ss - exact(collective_index::s, collective_index::s).real()) < 1e-12);
  CHECK(std::abs(last.s_squared - (2.0 - 2.0 * last.rho_aa)) < 1e-15);
}

TEST_CASE("runs are deterministic") {
  auto spec = figure_preset(5);
  spec.grid.t_end = 1.0;
  std::ostringstream a;
  std::ostringstream b;
  write_csv(run_scenario(spec), a);
  write_csv(run_scenario(spec), b);
  CHECK(a.str() == b.str());
}

TEST_CASE("config parsing") {
  std::istringstream in("# comment\n\n  delta = 1.5  \n--t-end=3 # trailing\nengine = product\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.size() == 3);
  CHECK(cfg.at("delta") == "1.5");
  CHECK(cfg.at("t-end") == "3");
  CHECK(cfg.at("engine") == "product");
  std::istringstream bad("delta = 1\njust words\n");
  try {
    parse_config(bad);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream empty_value("delta =\n");
  CHECK_THROWS_AS(parse_config(empty_value), std::invalid_argument);
  CHECK_THROWS_AS(read_config("/nonexistent/config.txt"), std::invalid_argument);
}

TEST_CASE("log-linear slope") {
  std::vector<double> t;
  std::vector<double> y;
  for (int k = 0; k <= 100; ++k) {
    t.push_back(0.1 * k);
    y.push_back(3.0 * std::exp(-0.21 * t.back()));
  }
  CHECK(std::abs(log_linear_slope(t, y, 4.0, 8.0) + 0.21) < 1e-12);
  CHECK_THROWS_AS(log_linear_slope(t, y, 20.0, 30.0), std::invalid_argument);
  y[50] = 0.0;
  CHECK_THROWS_AS(log_linear_slope(t, y, 4.0, 8.0), std::invalid_argument);
}

TEST_CASE("figure 1 late-time overlap with rho_aa") {
  const auto traj = run_scenario(figure_preset(1));
  const auto& last = traj.derived.back();
  REQUIRE(traj.times.back() == 8.0);
  CHECK(std::abs(last.concurrence - last.rho_aa) / last.rho_aa < 0.01);
}

TEST_CASE("detuning raises the entanglement maximum") {
  const auto c1 = concurrence_series(run_scenario(figure_preset(1)));
  const auto c3 = concurrence_series(run_scenario(figure_preset(3)));
  const double max1 = *std::max_element(c1.begin(), c1.end());
  const double max3 = *std::max_element(c3.begin(), c3.end());
  CAPTURE(max1);
  CAPTURE(max3);
  CHECK(max3 > max1);
}

TEST_CASE("figure 4 shows two time scales") {
  const auto traj = run_scenario(figure_preset(4));
  const auto c = concurrence_series(traj);
  const double early = log_linear_slope(traj.times, c, 0.5, 1.5);
  const double late = log_linear_slope(traj.times, c, 5.0, 8.0);
  CAPTURE(early);
  CAPTURE(late);
  CHECK(std::abs(early) > 2.0 * std::abs(late));
}

TEST_CASE("no entanglement from |e1 e2> in the Dicke limit") {
  auto spec = figure_preset(2);
  spec.gamma12_override = 1.0;
  const auto traj = run_scenario(spec);
  const auto c = concurrence_series(traj);
  CHECK(*std::max_element(c.begin(), c.end()) < 1e-9);
}
