#pragma once

#include <array>

#include "twoatom/eigen.hpp"
#include "twoatom/hilbert.hpp"

namespace twoatom {

struct MeasureResult {
  double concurrence;
  double negativity;
  std::array<double, 4> pt_spectrum;        // ascending
  std::array<double, 4> wootters_spectrum;  // sqrt(lambda_i), descending
};

// Square roots of the eigenvalues of rho * rho~ with rho~ the spin-flipped
// state, sorted descending. Computed through the Hermitian matrix
// sqrt(rho) rho~ sqrt(rho), which has the same spectrum. Values in
// [-1e-8, 0) are clamped to zero; anything lower throws InvariantViolation.
std::array<double, 4> wootters_spectrum(const DensityMatrix& rho);

double concurrence(const DensityMatrix& rho);
double negativity(const DensityMatrix& rho);
MeasureResult measure(const DensityMatrix& rho);

// Closed-form concurrence for product-basis X states (nonzero entries only on
// the diagonal and anti-diagonal). Throws std::invalid_argument otherwise.
double x_state_concurrence(const DensityMatrix& rho);

enum class Subsystem { atom1, atom2 };

// Transposes the indices of one atom. Product basis only (BasisMismatch).
Mat4 partial_transpose(const DensityMatrix& rho, Subsystem which = Subsystem::atom2);
Mat4 partial_transpose(const Mat4& product_matrix, Subsystem which = Subsystem::atom2);

// Closed-form partial-transpose eigenvalues of a state supported on
// {|s>, |a>, |g>} (no |e> weight, no |g> coherences):
//   mu1, mu2 = (rho_ss + rho_aa -/+ (rho_as + rho_sa)) / 2
//   mu3, mu4 = (rho_gg +/- sqrt(rho_gg^2 + (rho_ss - rho_aa)^2 - (rho_as - rho_sa)^2)) / 2
// mu4 is the only one that can turn negative. Order is as listed, not sorted.
struct OneExcitedElements {
  double ss;
  double aa;
  Complex as;  // <a|rho|s>
  double gg;
};
std::array<double, 4> pt_spectrum_one_excited(const OneExcitedElements& el);
OneExcitedElements one_excited_elements(const DensityMatrix& rho);  // throws on pattern violation

// Entangled iff (rho_ss - rho_aa)^2 > (rho_as - rho_sa)^2, with the right side
// the complex square. For real rho_as this is |rho_ss - rho_aa| > |rho_as - rho_sa|;
// an imaginary part makes the right side negative and only strengthens the
// entanglement, matching mu4 < 0.
bool one_excited_entangled(const OneExcitedElements& el);

struct CriterionResult {
  bool entangled;
  double margin;  // |rho_ss - rho_aa| - 2 sqrt(rho_ee rho_gg)
};

// Peres-Horodecki test for a state diagonal in the collective basis.
// Throws std::invalid_argument for negative populations or a sum off 1 by more than 1e-8.
CriterionResult diagonal_criterion(double ee, double ss, double aa, double gg);

}  // namespace twoatom
