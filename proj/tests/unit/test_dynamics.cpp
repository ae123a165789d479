#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "random_states.hpp"
#include "twoatom/analytic.hpp"
#include "twoatom/dynamics.hpp"
#include "twoatom/errors.hpp"

using namespace twoatom;

namespace {

SystemParams pinned(double delta = 0.0) {
  SystemParams p;
  p.gamma12 = 0.79;
  p.omega12 = 1.12;
  p.delta = delta;
  return p;
}

DensityMatrix product_pure(std::array<Complex, 4> amp) { return pure_state_density(amp, Basis::product); }

// The derivative of rho_gg is minus the derivative of the other populations.
Mat4 collective_derivative(const Mat4& collective, const SystemParams& p) {
  using namespace collective_index;
  Mat4 d = collective_rhs(CollectiveState::from_matrix(collective), p).to_matrix();
  d(g, g) = -(d(e, e) + d(s, s) + d(a, a));
  return d;
}

}  // namespace

TEST_CASE("ground state is stationary") {
  const auto rho = product_pure({0.0, 0.0, 0.0, 1.0});
  CHECK(max_abs_diff(product_liouvillian_rhs(rho, pinned(0.7)), Mat4{}) == 0.0);
}

TEST_CASE("both-excited decay rates") {
  using namespace collective_index;
  const auto rho = product_pure({1.0, 0.0, 0.0, 0.0});
  const SystemParams p = pinned();
  const Mat4 d = to_basis(product_liouvillian_rhs(rho, p), Basis::product, Basis::collective);
  CHECK(std::abs(d(e, e) + 2.0 * p.gamma) < 1e-15);
  CHECK(std::abs(d(s, s) - (p.gamma + p.gamma12)) < 1e-15);
  CHECK(std::abs(d(a, a) - (p.gamma - p.gamma12)) < 1e-15);
  CHECK(std::abs(d(g, g)) < 1e-15);
  CHECK(std::abs(d.trace()) < 1e-15);
}

TEST_CASE("collective equations at |e1 g2>, identical atoms") {
  const auto c = basis_change(product_pure({0.0, 1.0, 0.0, 0.0}), Basis::collective);
  const CollectiveState r = collective_rhs(CollectiveState::from_matrix(c.matrix()), pinned());
  CHECK(std::abs(r.ss - (-0.5 * 1.79)) < 1e-15);
  CHECK(std::abs(r.aa - (-0.5 * 0.21)) < 1e-15);
  // <a|rho|s> rotates as exp(+2i omega12 t)
  CHECK(std::abs(r.as - Complex(-0.5, 1.12)) < 1e-15);
  CHECK(std::abs(r.ee) == 0.0);
}

TEST_CASE("detuning transfers population only through Im rho_as") {
  using namespace collective_index;
  // |s><s|: rho_as = 0, so populations feel no transfer but coherence is driven
  Mat4 sym = Mat4{};
  sym(s, s) = 1.0;
  const CollectiveState r = collective_rhs(CollectiveState::from_matrix(sym), pinned(1.0));
  CHECK(std::abs(r.ss + 1.79) < 1e-15);
  CHECK(std::abs(r.aa) < 1e-15);
  CHECK(std::abs(r.as - Complex(0.0, 1.0)) < 1e-15);

  // real rho_as cancels the transfer term
  const auto eg = basis_change(product_pure({0.0, 1.0, 0.0, 0.0}), Basis::collective);
  const CollectiveState r0 = collective_rhs(CollectiveState::from_matrix(eg.matrix()), pinned(0.0));
  const CollectiveState r1 = collective_rhs(CollectiveState::from_matrix(eg.matrix()), pinned(1.0));
  CHECK(std::abs(r0.ss - r1.ss) < 1e-15);
  CHECK(std::abs(r0.aa - r1.aa) < 1e-15);

  // imaginary rho_as moves population from |s> to |a> at 2 delta Im rho_as
  Mat4 m = Mat4::diagonal({0.0, 0.5, 0.5, 0.0});
  m(a, s) = Complex(0.0, 0.25);
  m(s, a) = Complex(0.0, -0.25);
  const CollectiveState rt = collective_rhs(CollectiveState::from_matrix(m), pinned(1.0));
  const CollectiveState r00 = collective_rhs(CollectiveState::from_matrix(m), pinned(0.0));
  CHECK(std::abs((rt.ss - r00.ss) - (-2.0 * 1.0 * 0.25)) < 1e-15);
  CHECK(std::abs((rt.aa - r00.aa) - (2.0 * 1.0 * 0.25)) < 1e-15);
}

TEST_CASE("one-excitation sector is closed") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = testing::random_one_excited(rng);
    const Mat4 d = collective_derivative(rho.matrix(), pinned(0.6));
    using namespace collective_index;
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(std::abs(d(e, k)) < 1e-15);
      if (k != g) CHECK(std::abs(d(g, k)) < 1e-15);
    }
  }
}

TEST_CASE("product and collective right-hand sides agree") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    SystemParams p;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    p.gamma = 1.0 + 0.5 * u(rng);
    p.gamma12 = 0.95 * p.gamma * u(rng);
    p.omega12 = 2.0 * u(rng);
    p.delta = 2.0 * u(rng);
    p.omega0 = 3.0 * u(rng);
    const auto rho = testing::random_density(rng);
    const Mat4 via_product = to_basis(product_liouvillian_rhs(rho, p), Basis::product, Basis::collective);
    const Mat4 via_collective = collective_derivative(basis_change(rho, Basis::collective).matrix(), p);
    CHECK(max_abs_diff(via_product, via_collective) < 1e-13);
  }
}

TEST_CASE("trace, Hermiticity and positivity are preserved") {
  testing::Rng rng(29);
  for (Engine engine : {Engine::product, Engine::collective}) {
    for (int trial = 0; trial < 5; ++trial) {
      IntegrationOptions opts;
      opts.t_end = 4.0;
      opts.dt = 1e-2;
      opts.stride = 20;
      opts.engine = engine;
      int drift_calls = 0;
      opts.on_trace_drift = [&](double, double) { ++drift_calls; };
      const auto traj = integrate(testing::random_density(rng), pinned(0.8), opts);
      CHECK(drift_calls == 0);
      for (const auto& rho : traj.states) {
        CHECK(std::abs(rho.matrix().trace() - 1.0) < 1e-12);
        CHECK(hermiticity_defect(rho.matrix()) == 0.0);
        CHECK(rho.min_eigenvalue() > -1e-10);
      }
    }
  }
}

TEST_CASE("engines produce the same trajectory") {
  testing::Rng rng(31);
  SystemParams p = pinned(0.9);
  p.omega0 = 2.0;
  IntegrationOptions opts;
  opts.t_end = 5.0;
  opts.dt = 1e-3;
  opts.stride = 100;
  const auto rho0 = testing::random_density(rng);
  opts.engine = Engine::product;
  const auto a = integrate(rho0, p, opts);
  opts.engine = Engine::collective;
  const auto b = integrate(rho0, p, opts);
  REQUIRE(a.times.size() == b.times.size());
  for (std::size_t k = 0; k < a.times.size(); ++k) {
    CHECK(a.times[k] == b.times[k]);
    CHECK(max_abs_diff(a.states[k].matrix(), b.states[k].matrix()) < 1e-12);
  }
}

TEST_CASE("time grid") {
  IntegrationOptions opts;
  opts.t_end = 0.105;
  opts.dt = 0.01;
  opts.stride = 3;
  const auto traj = integrate(product_pure({0.0, 1.0, 0.0, 0.0}), pinned(), opts);
  // steps at 0.03, 0.06, 0.09 plus the shortened final step to 0.105
  REQUIRE(traj.times.size() == 5);
  CHECK(traj.times.front() == 0.0);
  CHECK(std::abs(traj.times[1] - 0.03) < 1e-15);
  CHECK(traj.times.back() == 0.105);
  CHECK(traj.states.front().basis() == Basis::collective);
}

TEST_CASE("Dicke limit keeps the antisymmetric state empty") {
  SystemParams p;
  p.gamma12 = 1.0;
  p.omega12 = 0.5;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p.allow_dicke_limit = true;
  IntegrationOptions opts;
  opts.t_end = 6.0;
  opts.dt = 1e-2;
  opts.stride = 10;
  const auto traj = integrate(product_pure({1.0, 0.0, 0.0, 0.0}), p, opts);
  for (const auto& rho : traj.states) {
    CHECK(std::abs(total_spin_squared(rho) - 2.0) < 1e-14);
  }
}

TEST_CASE("parameter and basis validation") {
  SystemParams p = pinned();
  p.gamma12 = 1.2;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  p = pinned();
  p.gamma = -1.0;
  CHECK_THROWS_AS(p.validate(), std::domain_error);
  const auto collective = basis_change(product_pure({0.0, 1.0, 0.0, 0.0}), Basis::collective);
  CHECK_THROWS_AS(product_liouvillian_rhs(collective, pinned()), BasisMismatch);
  IntegrationOptions opts;
  opts.dt = 0.0;
  CHECK_THROWS_AS(integrate(collective, pinned(), opts), std::invalid_argument);
  CHECK(engine_from_string("product") == Engine::product);
  CHECK_THROWS_AS(engine_from_string("euler"), std::invalid_argument);
}

TEST_CASE("RK4 converges at fourth order") {
  using namespace collective_index;
  const SystemParams p = pinned();
  const double t = 2.0;
  const auto exact = one_excited_solution(t, p);
  auto error_at = [&](double dt, Engine engine) {
    IntegrationOptions opts;
    opts.t_end = t;
    opts.dt = dt;
    opts.stride = 1000000;
    opts.engine = engine;
    const auto traj = integrate(basis_change(product_pure({0.0, 1.0, 0.0, 0.0}), Basis::collective), p, opts);
    return max_abs_diff(traj.states.back().matrix(), exact.matrix());
  };
  for (Engine engine : {Engine::product, Engine::collective}) {
    const double coarse = error_at(0.01, engine);
    const double fine = error_at(0.005, engine);
    CAPTURE(coarse);
    CAPTURE(fine);
    CHECK(coarse / fine >= 12.0);
    CHECK(coarse / fine <= 20.0);
  }
}
