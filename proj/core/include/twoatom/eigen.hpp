#pragma once

#include <array>

#include "twoatom/matrix.hpp"

namespace twoatom {

struct HermitianEigensystem {
  std::array<double, 4> values;  // ascending
  Mat4 vectors;                  // column k is the eigenvector of values[k]
};

// Cyclic complex Jacobi diagonalization. Each rotation first removes the
// phase of the pivot a_pq with a diagonal unitary, then applies a real
// Givens rotation; sweeps run in fixed (p, q) order so results are
// bit-for-bit reproducible. Throws std::invalid_argument when the input is
// not Hermitian to 1e-10 (scaled by the largest entry when that exceeds 1).
HermitianEigensystem hermitian_eigensystem(const Mat4& m);

// Eigenvalues only, ascending.
std::array<double, 4> hermitian_eigenvalues(const Mat4& m);

// Principal square root of a Hermitian positive semidefinite matrix.
// Eigenvalues in [-clamp, 0) are treated as zero; anything below -clamp
// throws InvariantViolation.
Mat4 psd_sqrt(const Mat4& m, double clamp = 1e-8);

}  // namespace twoatom
