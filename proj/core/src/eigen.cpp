#include "twoatom/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "twoatom/errors.hpp"

namespace twoatom {
namespace {

constexpr int kMaxSweeps = 64;
constexpr double kHermitianTolerance = 1e-10;

double off_diagonal_norm2(const Mat4& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c) s += std::norm(a(r, c));
  return s;
}

double frobenius2(const Mat4& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s += std::norm(a(r, c));
  return s;
}

// A <- U^dagger A U and V <- V U for the plane rotation that zeroes a(p, q).
void rotate(Mat4& a, Mat4& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  const Complex phase = std::conj(apq) / b;  // e^{-i phi}
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * b);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex upp = c;
  const Complex upq = s;
  const Complex uqp = -s * phase;
  const Complex uqq = c * phase;

  for (std::size_t r = 0; r < 4; ++r) {
    const Complex arp = a(r, p);
    const Complex arq = a(r, q);
    a(r, p) = arp * upp + arq * uqp;
    a(r, q) = arp * upq + arq * uqq;
    const Complex vrp = v(r, p);
    const Complex vrq = v(r, q);
    v(r, p) = vrp * upp + vrq * uqp;
    v(r, q) = vrp * upq + vrq * uqq;
  }
  for (std::size_t c2 = 0; c2 < 4; ++c2) {
    const Complex apc = a(p, c2);
    const Complex aqc = a(q, c2);
    a(p, c2) = std::conj(upp) * apc + std::conj(uqp) * aqc;
    a(q, c2) = std::conj(upq) * apc + std::conj(uqq) * aqc;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const Mat4& m) {
  double scale = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) scale = std::max(scale, std::abs(m(r, c)));
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTolerance * std::max(1.0, scale)) {
    throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }

  // Symmetrize so the rotations act on an exactly Hermitian matrix.
  Mat4 a = 0.5 * (m + m.adjoint());
  Mat4 v = Mat4::identity();

  const double total = frobenius2(a);
  if (total > 0.0) {
    const double target = total * 1e-34;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm2(a) > target; ++sweep) {
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = p + 1; q < 4; ++q)
          if (std::norm(a(p, q)) > target * 1e-4) rotate(a, v, p, q);
    }
  }

  std::array<std::size_t, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigensystem out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < 4; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const Mat4& m) { return hermitian_eigensystem(m).values; }

Mat4 psd_sqrt(const Mat4& m, double clamp) {
  const auto eig = hermitian_eigensystem(m);
  if (eig.values[0] < -clamp) {
    throw InvariantViolation("psd_sqrt: matrix has eigenvalue " + std::to_string(eig.values[0]) +
                             " below -" + std::to_string(clamp));
  }
  Mat4 out;
  for (std::size_t k = 0; k < 4; ++k) {
    const double root = std::sqrt(std::max(0.0, eig.values[k]));
    if (root == 0.0) continue;
    Vec4 col{};
    for (std::size_t r = 0; r < 4; ++r) col[r] = eig.vectors(r, k);
    out += Mat4::outer(col, col) * Complex{root};
  }
  return out;
}

}  // namespace twoatom
