#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "twoatom/matrix.hpp"

namespace twoatom {

// Fixed orderings; serialized matrices and the partial transpose rely on them.
//   product:    |e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>
//   collective: |e>,     |s>,     |a>,     |g>
enum class Basis { product, collective };

namespace product_index {
inline constexpr std::size_t ee = 0, eg = 1, ge = 2, gg = 3;
}
namespace collective_index {
inline constexpr std::size_t e = 0, s = 1, a = 2, g = 3;
}

std::string to_string(Basis b);
Basis basis_from_string(const std::string& s);

struct StateTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-10;
  double positivity = 1e-8;
};

// 4x4 unit-trace Hermitian positive semidefinite matrix tagged with its basis.
// Construction validates every invariant and throws InvariantViolation.
class DensityMatrix {
 public:
  DensityMatrix(const Mat4& entries, Basis basis, const StateTolerances& tol = {});

  const Mat4& matrix() const { return entries_; }
  Basis basis() const { return basis_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  // Smallest eigenvalue, computed on demand.
  double min_eigenvalue() const;

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  Mat4 entries_;
  Basis basis_;
};

// Columns are |e>, |s>, |a>, |g> expressed in the product basis.
const Mat4& collective_to_product_unitary();

DensityMatrix basis_change(const DensityMatrix& rho, Basis target);

// Raw-matrix variant used inside integrators, where intermediate states are
// not yet valid density matrices.
Mat4 to_basis(const Mat4& m, Basis from, Basis to);

// Rank-1 projector of the (renormalized) amplitude vector. Throws
// std::invalid_argument when the norm is below 1e-6.
DensityMatrix pure_state_density(std::span<const Complex, 4> amplitudes, Basis basis);

struct MixingCoefficients {
  double alpha;
  double beta;
  double d;
};

// Eigenstate mixing of two atoms with detuning delta = (omega2 - omega1)/2
// coupled by omega12. Throws std::domain_error when the mixing is undefined.
MixingCoefficients nonidentical_mixing(double delta, double omega12);

// |s'> and |a'> built from the mixing, as collective-basis vectors.
struct MixedStates {
  Vec4 symmetric;
  Vec4 antisymmetric;
};
MixedStates mixed_states(const MixingCoefficients& m);

// S^2 = 2 - 2 rho_aa.
double total_spin_squared(const DensityMatrix& rho);

// Plain-text form: "basis: <tag>" line, then four rows of four `a+bi` entries.
void write_density(std::ostream& os, const DensityMatrix& rho);
DensityMatrix read_density(std::istream& is);
std::string format_complex(Complex z);
Complex parse_complex(const std::string& token);

}  // namespace twoatom
