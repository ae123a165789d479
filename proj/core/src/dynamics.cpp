#include "twoatom/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "twoatom/errors.hpp"

namespace twoatom {
namespace {

// Single-atom operators on (|e>, |g>), lifted to the pair.
struct PairOperators {
  Mat4 lower[2];  // S^-_1, S^-_2
  Mat4 raise[2];  // S^+_1, S^+_2
  Mat4 sz[2];     // S^z_1, S^z_2

  PairOperators() {
    // Product index = 2 * (atom 1 is ground) + (atom 2 is ground).
    for (std::size_t i = 0; i < 4; ++i) {
      const bool g1 = i & 2;
      const bool g2 = i & 1;
      sz[0](i, i) = g1 ? -0.5 : 0.5;
      sz[1](i, i) = g2 ? -0.5 : 0.5;
      if (!g1) lower[0](i | 2, i) = 1.0;
      if (!g2) lower[1](i | 1, i) = 1.0;
    }
    raise[0] = lower[0].adjoint();
    raise[1] = lower[1].adjoint();
  }
};

const PairOperators& ops() {
  static const PairOperators o;
  return o;
}

Mat4 commutator(const Mat4& a, const Mat4& b) { return a * b - b * a; }

void check_trace_drift(double drift, double time) {
  if (drift > 1e-6) {
    throw InvariantViolation("integrate: trace drift " + std::to_string(drift) + " at gamma*t = " +
                             std::to_string(time));
  }
}

}  // namespace

void SystemParams::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::domain_error("system params: gamma must be positive");
  for (double v : {gamma12, omega12, delta, omega0})
    if (!std::isfinite(v)) throw std::domain_error("system params: non-finite parameter");
  if (std::abs(gamma12) > gamma)
    throw std::domain_error("system params: |gamma12| exceeds gamma");
  if (std::abs(gamma12) == gamma && !allow_dicke_limit)
    throw std::domain_error("system params: gamma12 = gamma (Dicke limit) requires an explicit override");
}

Mat4 product_liouvillian_rhs(const Mat4& rho, const SystemParams& p) {
  const auto& o = ops();
  const double omega[2] = {p.omega0 - p.delta, p.omega0 + p.delta};
  const double rates[2][2] = {{p.gamma, p.gamma12}, {p.gamma12, p.gamma}};

  Mat4 out;
  for (int i = 0; i < 2; ++i) out -= kI * omega[i] * commutator(o.sz[i], rho);

  const Mat4 exchange = o.raise[0] * o.lower[1] + o.raise[1] * o.lower[0];
  out -= kI * p.omega12 * commutator(exchange, rho);

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double g = rates[i][j];
      if (g == 0.0) continue;
      const Mat4 pm = o.raise[i] * o.lower[j];
      out += Complex{g} * (o.lower[j] * rho * o.raise[i] - 0.5 * (rho * pm + pm * rho));
    }
  return out;
}

Mat4 product_liouvillian_rhs(const DensityMatrix& rho, const SystemParams& params) {
  if (rho.basis() != Basis::product)
    throw BasisMismatch("product_liouvillian_rhs: density matrix must be in the product basis");
  return product_liouvillian_rhs(rho.matrix(), params);
}

CollectiveState CollectiveState::from_matrix(const Mat4& m) {
  using namespace collective_index;
  CollectiveState st;
  st.ee = m(e, e).real();
  st.ss = m(s, s).real();
  st.aa = m(a, a).real();
  st.as = m(a, s);
  st.se = m(s, e);
  st.ae = m(a, e);
  st.gs = m(g, s);
  st.ga = m(g, a);
  st.eg = m(e, g);
  return st;
}

Mat4 CollectiveState::to_matrix() const {
  using namespace collective_index;
  Mat4 m;
  m(e, e) = ee.real();
  m(s, s) = ss.real();
  m(a, a) = aa.real();
  m(g, g) = 1.0 - ee.real() - ss.real() - aa.real();
  auto put = [&](std::size_t r, std::size_t c, Complex v) {
    m(r, c) = v;
    m(c, r) = std::conj(v);
  };
  put(a, s, as);
  put(s, e, se);
  put(a, e, ae);
  put(g, s, gs);
  put(g, a, ga);
  put(e, g, eg);
  return m;
}

CollectiveState& CollectiveState::operator+=(const CollectiveState& o) {
  ee += o.ee;
  ss += o.ss;
  aa += o.aa;
  as += o.as;
  se += o.se;
  ae += o.ae;
  gs += o.gs;
  ga += o.ga;
  eg += o.eg;
  return *this;
}

CollectiveState operator*(double k, CollectiveState a) {
  for (Complex* c : {&a.ee, &a.ss, &a.aa, &a.as, &a.se, &a.ae, &a.gs, &a.ga, &a.eg}) *c *= k;
  return a;
}

CollectiveState collective_rhs(const CollectiveState& x, const SystemParams& p) {
  const double g = p.gamma;
  const double g12 = p.gamma12;
  const double w = p.omega12;
  const double d = p.delta;
  const double w0 = p.omega0;
  const Complex sa = std::conj(x.as);
  const Complex transfer = kI * d * (x.as - sa);

  CollectiveState r;
  r.ee = -2.0 * g * x.ee;
  r.ss = -(g + g12) * (x.ss - x.ee) + transfer;
  r.aa = -(g - g12) * (x.aa - x.ee) - transfer;
  // The exchange shifts |s> up and |a> down by omega12, so <a|rho|s> rotates
  // as exp(+2i omega12 t).
  r.as = -(g - 2.0 * kI * w) * x.as + kI * d * (x.ss - x.aa);
  r.se = -(0.5 * (3.0 * g + g12) - kI * (w0 - w)) * x.se + kI * d * x.ae;
  r.ae = -(0.5 * (3.0 * g - g12) - kI * (w0 + w)) * x.ae + kI * d * x.se;
  r.gs = -(0.5 * (g + g12) - kI * (w0 + w)) * x.gs + (g + g12) * x.se - kI * d * x.ga;
  r.ga = -(0.5 * (g - g12) - kI * (w0 - w)) * x.ga - (g - g12) * x.ae - kI * d * x.gs;
  r.eg = -(g + 2.0 * kI * w0) * x.eg;
  // Populations are real by construction; drop rounding residue.
  r.ee = r.ee.real();
  r.ss = r.ss.real();
  r.aa = r.aa.real();
  return r;
}

std::string to_string(Engine e) { return e == Engine::product ? "product" : "collective"; }

Engine engine_from_string(const std::string& s) {
  if (s == "product") return Engine::product;
  if (s == "collective") return Engine::collective;
  throw std::invalid_argument("unknown engine '" + s + "' (expected product or collective)");
}

Trajectory integrate(const DensityMatrix& rho0, const SystemParams& params, const IntegrationOptions& opts) {
  params.validate();
  if (!(opts.dt > 0.0) || !std::isfinite(opts.dt)) throw std::invalid_argument("integrate: dt must be positive");
  if (!(opts.t_end >= 0.0) || !std::isfinite(opts.t_end))
    throw std::invalid_argument("integrate: t_end must be non-negative");
  if (opts.stride == 0) throw std::invalid_argument("integrate: stride must be at least 1");

  const auto steps = static_cast<std::size_t>(std::ceil(opts.t_end / opts.dt - 1e-9));
  Trajectory traj;
  traj.times.reserve(steps / opts.stride + 2);
  traj.states.reserve(steps / opts.stride + 2);

  const Basis engine_basis = opts.engine == Engine::product ? Basis::product : Basis::collective;
  Mat4 current = basis_change(rho0, engine_basis).matrix();
  CollectiveState cstate = CollectiveState::from_matrix(current);

  auto store = [&](double t, const Mat4& m) {
    Mat4 out = to_basis(m, engine_basis, opts.output_basis);
    out = 0.5 * (out + out.adjoint());
    const double tr = out.trace().real();
    const double drift = std::abs(tr - 1.0);
    check_trace_drift(drift, t);
    if (drift > 1e-10) {
      out *= Complex{1.0 / tr};
      if (opts.on_trace_drift) opts.on_trace_drift(t, drift);
    }
    try {
      traj.states.emplace_back(out, opts.output_basis);
    } catch (const InvariantViolation& e) {
      throw InvariantViolation(std::string(e.what()) + " at gamma*t = " + std::to_string(t));
    }
    traj.times.push_back(t);
  };

  store(0.0, current);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_prev = static_cast<double>(k - 1) * opts.dt;
    const double t_next = k == steps ? opts.t_end : static_cast<double>(k) * opts.dt;
    const double h = t_next - t_prev;
    if (opts.engine == Engine::product) {
      const Mat4 k1 = product_liouvillian_rhs(current, params);
      const Mat4 k2 = product_liouvillian_rhs(current + Complex{0.5 * h} * k1, params);
      const Mat4 k3 = product_liouvillian_rhs(current + Complex{0.5 * h} * k2, params);
      const Mat4 k4 = product_liouvillian_rhs(current + Complex{h} * k3, params);
      current += Complex{h / 6.0} * (k1 + Complex{2.0} * k2 + Complex{2.0} * k3 + k4);
      current = 0.5 * (current + current.adjoint());
    } else {
      const CollectiveState k1 = collective_rhs(cstate, params);
      const CollectiveState k2 = collective_rhs(cstate + (0.5 * h) * k1, params);
      const CollectiveState k3 = collective_rhs(cstate + (0.5 * h) * k2, params);
      const CollectiveState k4 = collective_rhs(cstate + h * k3, params);
      cstate += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (k % opts.stride == 0 || k == steps) {
      store(t_next, opts.engine == Engine::product ? current : cstate.to_matrix());
    }
  }
  return traj;
}

}  // namespace twoatom
