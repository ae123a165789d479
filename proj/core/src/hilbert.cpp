#include "twoatom/hilbert.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "twoatom/eigen.hpp"
#include "twoatom/errors.hpp"

namespace twoatom {

std::string to_string(Basis b) { return b == Basis::product ? "product" : "collective"; }

Basis basis_from_string(const std::string& s) {
  if (s == "product") return Basis::product;
  if (s == "collective") return Basis::collective;
  throw std::invalid_argument("unknown basis tag '" + s + "'");
}

DensityMatrix::DensityMatrix(const Mat4& entries, Basis basis, const StateTolerances& tol)
    : entries_(entries), basis_(basis) {
  const double herm = hermiticity_defect(entries_);
  if (herm > tol.hermiticity)
    throw InvariantViolation("density matrix: Hermiticity defect " + std::to_string(herm));
  const double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > tol.trace)
    throw InvariantViolation("density matrix: trace " + std::to_string(tr) + " differs from 1");
  const double lo = hermitian_eigenvalues(entries_)[0];
  if (lo < -tol.positivity)
    throw InvariantViolation("density matrix: negative eigenvalue " + std::to_string(lo));
}

double DensityMatrix::min_eigenvalue() const { return hermitian_eigenvalues(entries_)[0]; }

const Mat4& collective_to_product_unitary() {
  static const Mat4 u = [] {
    const double h = 1.0 / std::sqrt(2.0);
    Mat4 m;
    m(product_index::ee, collective_index::e) = 1.0;
    m(product_index::eg, collective_index::s) = h;
    m(product_index::ge, collective_index::s) = h;
    m(product_index::eg, collective_index::a) = h;
    m(product_index::ge, collective_index::a) = -h;
    m(product_index::gg, collective_index::g) = 1.0;
    return m;
  }();
  return u;
}

Mat4 to_basis(const Mat4& m, Basis from, Basis to) {
  if (from == to) return m;
  const Mat4& u = collective_to_product_unitary();
  if (to == Basis::collective) return u.adjoint() * m * u;
  return u * m * u.adjoint();
}

DensityMatrix basis_change(const DensityMatrix& rho, Basis target) {
  if (rho.basis() == target) return rho;
  Mat4 m = to_basis(rho.matrix(), rho.basis(), target);
  // The unitary has real entries; re-Hermitize to drop last-bit asymmetry.
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(m, target);
}

DensityMatrix pure_state_density(std::span<const Complex, 4> amplitudes, Basis basis) {
  Vec4 v{};
  std::copy(amplitudes.begin(), amplitudes.end(), v.begin());
  const double n = norm(v);
  if (!(n >= 1e-6)) throw std::invalid_argument("pure state: amplitude vector is (nearly) zero");
  for (auto& x : v) x /= n;
  Mat4 m = Mat4::outer(v, v);
  return DensityMatrix(0.5 * (m + m.adjoint()), basis);
}

MixingCoefficients nonidentical_mixing(double delta, double omega12) {
  const double root = std::hypot(omega12, delta);
  if (root == 0.0) throw std::domain_error("mixing: undefined for delta = omega12 = 0");
  // delta + root cancels for negative delta; use the conjugate form there.
  const double d = delta >= 0.0 ? delta + root : omega12 * omega12 / (root - delta);
  const double denom = std::hypot(d, omega12);
  if (denom == 0.0) throw std::domain_error("mixing: undefined for omega12 = 0 with delta < 0");
  return {d / denom, omega12 / denom, d};
}

MixedStates mixed_states(const MixingCoefficients& m) {
  using namespace collective_index;
  const double h = 1.0 / std::sqrt(2.0);
  MixedStates out{};
  out.symmetric[s] = h * (m.alpha + m.beta);
  out.symmetric[a] = h * (m.beta - m.alpha);
  out.antisymmetric[s] = h * (m.alpha - m.beta);
  out.antisymmetric[a] = h * (m.alpha + m.beta);
  return out;
}

double total_spin_squared(const DensityMatrix& rho) {
  const auto c = basis_change(rho, Basis::collective);
  return 2.0 - 2.0 * c(collective_index::a, collective_index::a).real();
}

std::string format_complex(Complex z) {
  char buf[64];
  const double im = z.imag();
  std::snprintf(buf, sizeof buf, "%.17g%c%.17gi", z.real(), std::signbit(im) ? '-' : '+',
                std::abs(im));
  return buf;
}

Complex parse_complex(const std::string& token) {
  if (token.empty() || token.back() != 'i')
    throw std::invalid_argument("complex entry '" + token + "' must end in 'i'");
  // Split at the last sign that is not part of an exponent and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = token.size() - 1; k > 0; --k) {
    const char ch = token[k];
    if ((ch == '+' || ch == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos)
    throw std::invalid_argument("complex entry '" + token + "' has no imaginary part");
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty())
      throw std::invalid_argument("complex entry '" + token + "' is malformed");
    return v;
  };
  const double re = to_double(token.substr(0, split));
  std::string im_part = token.substr(split, token.size() - split - 1);
  if (im_part == "+" || im_part == "-") im_part += "1";
  return {re, to_double(im_part)};
}

void write_density(std::ostream& os, const DensityMatrix& rho) {
  os << "basis: " << to_string(rho.basis()) << '\n';
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) os << (c ? " " : "") << format_complex(rho(r, c));
    os << '\n';
  }
}

DensityMatrix read_density(std::istream& is) {
  std::string line;
  while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  const std::string prefix = "basis:";
  if (line.rfind(prefix, 0) != 0) throw std::invalid_argument("density file: missing 'basis:' header");
  std::istringstream tag(line.substr(prefix.size()));
  std::string name;
  tag >> name;
  const Basis basis = basis_from_string(name);

  Mat4 m;
  for (std::size_t r = 0; r < 4; ++r) {
    if (!std::getline(is, line)) throw std::invalid_argument("density file: expected 4 matrix rows");
    std::istringstream row(line);
    std::string tok;
    std::size_t c = 0;
    while (row >> tok) {
      if (c == 4) throw std::invalid_argument("density file: row " + std::to_string(r) + " has more than 4 entries");
      m(r, c++) = parse_complex(tok);
    }
    if (c != 4) throw std::invalid_argument("density file: row " + std::to_string(r) + " has fewer than 4 entries");
  }
  return DensityMatrix(m, basis);
}

}  // namespace twoatom
