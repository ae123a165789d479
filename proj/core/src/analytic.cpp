#include "twoatom/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twoatom {
namespace {

constexpr double kPatternTolerance = 1e-12;

void require_identical(const SystemParams& p, const char* who) {
  p.validate();
  if (p.delta != 0.0)
    throw std::domain_error(std::string(who) + ": closed form exists only for identical atoms (delta = 0)");
}

}  // namespace

DensityMatrix one_excited_solution(double t, const SystemParams& p) {
  using namespace collective_index;
  require_identical(p, "one_excited_solution");
  const double rate = p.gamma;
  const double rate12 = p.gamma12;
  Mat4 m;
  m(s, s) = 0.5 * std::exp(-(rate + rate12) * t);
  m(a, a) = 0.5 * std::exp(-(rate - rate12) * t);
  // 1 - e^{-Gt} cosh(G12 t), written so that it stays accurate near t = 0.
  m(g, g) = -0.5 * (std::expm1(-(rate - rate12) * t) + std::expm1(-(rate + rate12) * t));
  m(a, s) = 0.5 * std::exp(Complex{-rate, 2.0 * p.omega12} * t);
  m(s, a) = std::conj(m(a, s));
  return DensityMatrix(m, Basis::collective);
}

Mat4 DiagonalDecomposition::reconstruct() const {
  Mat4 m;
  for (std::size_t k = 0; k < 4; ++k) m += Mat4::outer(states[k], states[k]) * Complex{populations[k]};
  return m;
}

DiagonalDecomposition diagonal_decomposition(const DensityMatrix& input) {
  using namespace collective_index;
  const DensityMatrix rho = basis_change(input, Basis::collective);
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(rho(e, k)) > kPatternTolerance)
      throw std::invalid_argument("diagonal_decomposition: state has weight on |e>");
  }
  if (std::abs(rho(g, s)) > kPatternTolerance || std::abs(rho(g, a)) > kPatternTolerance)
    throw std::invalid_argument("diagonal_decomposition: coherence between |g> and the one-excitation block");

  const double ss = rho(s, s).real();
  const double aa = rho(a, a).real();
  const Complex as = rho(a, s);
  const Complex sa = rho(s, a);
  const double mean = 0.5 * (ss + aa);
  const double radius = std::hypot(0.5 * (ss - aa), std::abs(as));
  const double p1 = mean + radius;
  const double p2 = mean - radius;

  // Two equivalent forms of the eigenvector for p1; keep the better conditioned.
  Complex vs = sa;
  Complex va = p1 - ss;
  const Complex alt_s = p1 - aa;
  const Complex alt_a = as;
  if (std::norm(alt_s) + std::norm(alt_a) > std::norm(vs) + std::norm(va)) {
    vs = alt_s;
    va = alt_a;
  }
  double n = std::sqrt(std::norm(vs) + std::norm(va));
  if (n == 0.0) {
    // Fully degenerate block (rho_ss = rho_aa, no coherence): any basis works.
    vs = 1.0;
    va = 0.0;
    n = 1.0;
  }
  vs /= n;
  va /= n;

  DiagonalDecomposition out{};
  out.states[0][s] = vs;
  out.states[0][a] = va;
  out.states[1][s] = -std::conj(va);
  out.states[1][a] = std::conj(vs);
  out.states[2][g] = 1.0;
  out.states[3][e] = 1.0;
  // Rounding can leave the vanishing eigenvalue at -1e-17 or so.
  out.populations = {p1, (p2 < 0.0 && p2 > -1e-12) ? 0.0 : p2, rho(g, g).real(), 0.0};
  return out;
}

Populations dicke_both_excited_populations(double t, double gamma) {
  const double ee = std::exp(-2.0 * gamma * t);
  const double ss = 2.0 * gamma * t * ee;
  return {ee, ss, 0.0, 1.0 - ee - ss};
}

Populations both_excited_populations(double t, const SystemParams& p) {
  require_identical(p, "both_excited_populations");
  const double g = p.gamma;
  const double g12 = p.gamma12;
  if (g12 == g) {
    throw std::domain_error(
        "both_excited_populations: gamma12 = gamma has no finite prefactor; use "
        "dicke_both_excited_populations (rho_ss = 2 G t exp(-2 G t))");
  }
  if (g12 == -g) throw std::domain_error("both_excited_populations: gamma12 = -gamma is outside the closed form");
  const double slow = g - g12;
  if (slow < 1e-6 * g) return dicke_both_excited_populations(t, g);

  const double ee = std::exp(-2.0 * g * t);
  // e^{-(G+G12)t} - e^{-2Gt} = e^{-2Gt} (e^{(G-G12)t} - 1)
  const double ss = (g + g12) / slow * ee * std::expm1(slow * t);
  const double aa = slow / (g + g12) * (std::exp(-slow * t) - ee);
  return {ee, ss, aa, 1.0 - ee - ss - aa};
}

}  // namespace twoatom
