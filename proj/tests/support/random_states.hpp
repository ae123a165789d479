#pragma once

// Seeded generators of valid two-qubit states for property tests.

#include <cmath>
#include <numbers>
#include <random>

#include "twoatom/hilbert.hpp"

namespace twoatom::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline double random_phase(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
}

// G G^dagger / tr for a 4 x rank complex Ginibre matrix G.
inline DensityMatrix random_density(Rng& rng, int rank = 4, Basis basis = Basis::product) {
  Mat4 g;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < static_cast<std::size_t>(rank); ++c) g(r, c) = random_complex(rng);
  Mat4 m = g * g.adjoint();
  m *= Complex{1.0 / m.trace().real()};
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(m, basis);
}

// Four non-negative weights summing to one.
inline std::array<double, 4> random_simplex(Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::array<double, 4> w{e(rng), e(rng), e(rng), e(rng)};
  const double s = w[0] + w[1] + w[2] + w[3];
  for (auto& x : w) x /= s;
  return w;
}

// Product-basis X state with coherences inside the positivity bounds.
inline DensityMatrix random_x_state(Rng& rng) {
  const auto p = random_simplex(rng);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Mat4 m = Mat4::diagonal(p);
  const Complex c23 = u(rng) * std::sqrt(p[1] * p[2]) * std::polar(1.0, random_phase(rng));
  const Complex c14 = u(rng) * std::sqrt(p[0] * p[3]) * std::polar(1.0, random_phase(rng));
  m(1, 2) = c23;
  m(2, 1) = std::conj(c23);
  m(0, 3) = c14;
  m(3, 0) = std::conj(c14);
  return DensityMatrix(m, Basis::product);
}

// Collective-basis state supported on {|s>, |a>, |g>} with |rho_as|^2 <= rho_ss rho_aa.
inline DensityMatrix random_one_excited(Rng& rng) {
  using namespace collective_index;
  std::exponential_distribution<double> ex(1.0);
  double w[3] = {ex(rng), ex(rng), ex(rng)};
  const double sum = w[0] + w[1] + w[2];
  const double ss = w[0] / sum, aa = w[1] / sum, gg = w[2] / sum;
  const double mag = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * std::sqrt(ss * aa);
  const Complex as = std::polar(mag, random_phase(rng));
  Mat4 m;
  m(s, s) = ss;
  m(a, a) = aa;
  m(g, g) = gg;
  m(a, s) = as;
  m(s, a) = std::conj(as);
  return DensityMatrix(m, Basis::collective);
}

}  // namespace twoatom::testing
