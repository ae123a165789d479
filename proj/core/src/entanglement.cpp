#include "twoatom/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "twoatom/errors.hpp"

namespace twoatom {
namespace {

constexpr double kSpectrumClamp = 1e-8;
constexpr double kPatternTolerance = 1e-12;

// sigma_y (x) sigma_y in the product basis (|e>, |g>) per atom.
const Mat4& spin_flip() {
  static const Mat4 m = [] {
    const Complex sy[2][2] = {{0.0, -kI}, {kI, 0.0}};
    Mat4 out;
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) out(r, c) = sy[r >> 1][c >> 1] * sy[r & 1][c & 1];
    return out;
  }();
  return m;
}

}  // namespace

std::array<double, 4> wootters_spectrum(const DensityMatrix& input) {
  const Mat4 rho = basis_change(input, Basis::product).matrix();
  const Mat4& flip = spin_flip();
  const Mat4 tilde = flip * rho.conj() * flip;
  const Mat4 root = psd_sqrt(rho, kSpectrumClamp);
  const Mat4 r = root * tilde * root;
  const auto lambda = hermitian_eigenvalues(0.5 * (r + r.adjoint()));

  std::array<double, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    const double v = lambda[3 - k];
    if (v < -kSpectrumClamp)
      throw InvariantViolation("concurrence: rho*rho~ has eigenvalue " + std::to_string(v) +
                               " (input is not positive semidefinite)");
    out[k] = std::sqrt(std::max(0.0, v));
  }
  return out;
}

double concurrence(const DensityMatrix& rho) {
  const auto l = wootters_spectrum(rho);
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

Mat4 partial_transpose(const Mat4& m, Subsystem which) {
  // Product index = 2 * (atom 1 bit) + (atom 2 bit).
  const std::size_t mask = which == Subsystem::atom1 ? 2 : 1;
  Mat4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t r2 = (r & ~mask) | (c & mask);
      const std::size_t c2 = (c & ~mask) | (r & mask);
      out(r2, c2) = m(r, c);
    }
  return out;
}

Mat4 partial_transpose(const DensityMatrix& rho, Subsystem which) {
  if (rho.basis() != Basis::product)
    throw BasisMismatch("partial_transpose: density matrix must be in the product basis");
  return partial_transpose(rho.matrix(), which);
}

double negativity(const DensityMatrix& rho) {
  const auto mu = hermitian_eigenvalues(partial_transpose(basis_change(rho, Basis::product).matrix()));
  double negative = 0.0;
  for (double v : mu)
    if (v < 0.0) negative += v;
  return std::clamp(-2.0 * negative, 0.0, 1.0);
}

MeasureResult measure(const DensityMatrix& rho) {
  const DensityMatrix p = basis_change(rho, Basis::product);
  MeasureResult out{};
  out.wootters_spectrum = wootters_spectrum(p);
  const auto& l = out.wootters_spectrum;
  out.concurrence = std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
  out.pt_spectrum = hermitian_eigenvalues(partial_transpose(p.matrix()));
  double negative = 0.0;
  for (double v : out.pt_spectrum)
    if (v < 0.0) negative += v;
  out.negativity = std::clamp(-2.0 * negative, 0.0, 1.0);
  return out;
}

double x_state_concurrence(const DensityMatrix& input) {
  const Mat4 m = basis_change(input, Basis::product).matrix();
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c && r + c != 3 && std::abs(m(r, c)) > kPatternTolerance)
        throw std::invalid_argument("x_state_concurrence: matrix is not an X state");
  const double p11 = std::max(0.0, m(0, 0).real());
  const double p22 = std::max(0.0, m(1, 1).real());
  const double p33 = std::max(0.0, m(2, 2).real());
  const double p44 = std::max(0.0, m(3, 3).real());
  const double a = std::abs(m(1, 2)) - std::sqrt(p11 * p44);
  const double b = std::abs(m(0, 3)) - std::sqrt(p22 * p33);
  return 2.0 * std::max({0.0, a, b});
}

OneExcitedElements one_excited_elements(const DensityMatrix& input) {
  using namespace collective_index;
  const DensityMatrix rho = basis_change(input, Basis::collective);
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(rho(e, k)) > kPatternTolerance)
      throw std::invalid_argument("one-excited pattern: state has weight on |e>");
  if (std::abs(rho(g, s)) > kPatternTolerance || std::abs(rho(g, a)) > kPatternTolerance)
    throw std::invalid_argument("one-excited pattern: coherence between |g> and |s>,|a>");
  return {rho(s, s).real(), rho(a, a).real(), rho(a, s), rho(g, g).real()};
}

std::array<double, 4> pt_spectrum_one_excited(const OneExcitedElements& el) {
  if (el.ss < -kPatternTolerance || el.aa < -kPatternTolerance || el.gg < -kPatternTolerance)
    throw std::invalid_argument("pt_spectrum_one_excited: negative population");
  if (std::abs(el.ss + el.aa + el.gg - 1.0) > 1e-8)
    throw std::invalid_argument("pt_spectrum_one_excited: populations do not sum to 1");
  const Complex sa = std::conj(el.as);
  const double coherence_sum = (el.as + sa).real();
  // (rho_as - rho_sa) is purely imaginary, so its square is -4 (Im rho_as)^2.
  const double diff_sq = ((el.as - sa) * (el.as - sa)).real();
  const double pop = el.ss - el.aa;
  const double root = std::sqrt(el.gg * el.gg + pop * pop - diff_sq);
  return {0.5 * (el.ss + el.aa - coherence_sum), 0.5 * (el.ss + el.aa + coherence_sum),
          0.5 * (el.gg + root), 0.5 * (el.gg - root)};
}

bool one_excited_entangled(const OneExcitedElements& el) {
  const Complex diff = el.as - std::conj(el.as);
  const double pop = el.ss - el.aa;
  return pop * pop > (diff * diff).real();
}

CriterionResult diagonal_criterion(double ee, double ss, double aa, double gg) {
  for (double p : {ee, ss, aa, gg})
    if (p < 0.0 || !std::isfinite(p)) throw std::invalid_argument("diagonal_criterion: negative population");
  if (std::abs(ee + ss + aa + gg - 1.0) > 1e-8)
    throw std::invalid_argument("diagonal_criterion: populations do not sum to 1");
  const double margin = std::abs(ss - aa) - 2.0 * std::sqrt(ee * gg);
  return {margin > 0.0, margin};
}

}  // namespace twoatom
