#pragma once

#include <array>

#include "twoatom/dynamics.hpp"
#include "twoatom/hilbert.hpp"

namespace twoatom {

/// Closed-form evolution of identical atoms (delta = 0) started in |e1 g2>.
/// Returns the collective-basis density matrix at time t:
///   rho_ss = e^{-(G+G12)t}/2, rho_aa = e^{-(G-G12)t}/2,
///   rho_gg = 1 - e^{-Gt} cosh(G12 t), <a|rho|s> = e^{-(G-2i W12)t}/2.
/// Throws std::domain_error for delta != 0.
DensityMatrix one_excited_solution(double t, const SystemParams& params);

/// Eigen-decomposition of a one-excitation state supported on {|s>,|a>,|g>}.
/// `states` are collective-basis vectors Psi_1..Psi_4 where Psi_1/Psi_2 span
/// {|s>,|a>} (Psi_1 the larger population), Psi_3 = |g>, Psi_4 = |e>.
struct DiagonalDecomposition {
  std::array<Vec4, 4> states;
  std::array<double, 4> populations;

  Mat4 reconstruct() const;
};

/// Throws std::invalid_argument when rho has weight or coherence involving |e>,
/// or coherence between |g> and the one-excitation block.
DiagonalDecomposition diagonal_decomposition(const DensityMatrix& rho);

struct Populations {
  double ee, ss, aa, gg;
};

/// Populations for identical atoms started in |e1 e2>. Requires delta = 0 and
/// gamma12 < gamma; within 1e-6*gamma of the Dicke limit it switches to
/// dicke_both_excited_populations. Throws std::domain_error otherwise.
Populations both_excited_populations(double t, const SystemParams& params);

/// Small-sample limit gamma12 = gamma: rho_ss = 2Gt e^{-2Gt}, rho_aa = 0.
Populations dicke_both_excited_populations(double t, double gamma = 1.0);

}  // namespace twoatom
