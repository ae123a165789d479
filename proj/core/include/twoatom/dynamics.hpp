#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twoatom/hilbert.hpp"
#include "twoatom/matrix.hpp"

namespace twoatom {

// Parameters of the pair master equation, in units of the single-atom rate.
// The atomic frequencies are omega1 = omega0 - delta, omega2 = omega0 + delta.
struct SystemParams {
  double gamma = 1.0;
  double gamma12 = 0.0;
  double omega12 = 0.0;
  double delta = 0.0;
  double omega0 = 0.0;
  // |gamma12| == gamma (small-sample limit) must be requested explicitly.
  bool allow_dicke_limit = false;

  // Throws std::domain_error.
  void validate() const;
};

// Right-hand side of the master equation in the product basis, assembled
// term by term: free evolution, dipole-dipole exchange, and the collective
// dissipator with rates {Gamma_ij}. Throws BasisMismatch for collective input.
Mat4 product_liouvillian_rhs(const DensityMatrix& rho, const SystemParams& params);
Mat4 product_liouvillian_rhs(const Mat4& rho_product, const SystemParams& params);

// The nine independent collective-basis elements, rho_xy = <x|rho|y>.
// Populations are stored as complex numbers whose imaginary part stays zero;
// rho_gg follows from the trace and conjugate elements are never stored.
struct CollectiveState {
  Complex ee, ss, aa;
  Complex as, se, ae, gs, ga, eg;

  static CollectiveState from_matrix(const Mat4& collective);
  Mat4 to_matrix() const;

  CollectiveState& operator+=(const CollectiveState& o);
  friend CollectiveState operator+(CollectiveState a, const CollectiveState& b) { return a += b; }
  friend CollectiveState operator*(double k, CollectiveState a);
};

CollectiveState collective_rhs(const CollectiveState& state, const SystemParams& params);

enum class Engine { product, collective };
std::string to_string(Engine e);
Engine engine_from_string(const std::string& s);

// Observables recorded alongside each stored state.
struct Observables {
  double rho_ee = 0, rho_ss = 0, rho_aa = 0, rho_gg = 0;
  Complex rho_as{};
  double concurrence = 0, negativity = 0, s_squared = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<Observables> derived;  // filled by the scenario layer
};

struct IntegrationOptions {
  double t_end = 10.0;
  double dt = 1e-3;
  Engine engine = Engine::collective;
  std::size_t stride = 1;  // store every stride-th step (the final step is always stored)
  Basis output_basis = Basis::collective;
  // Called when a stored state needed trace renormalization (drift > 1e-10).
  std::function<void(double time, double drift)> on_trace_drift;
};

// Fixed-step classical RK4. Throws InvariantViolation when a stored state
// drifts in trace by more than 1e-6 or loses positivity beyond 1e-8.
Trajectory integrate(const DensityMatrix& rho0, const SystemParams& params, const IntegrationOptions& opts);

}  // namespace twoatom
