#include "twoatom/couplings.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace twoatom {
namespace {

void validate(const AtomPairConfig& cfg) {
  if (!(cfg.gamma > 0.0) || !std::isfinite(cfg.gamma))
    throw std::domain_error("atom pair: gamma must be positive, got " + std::to_string(cfg.gamma));
  if (!(cfg.separation_over_lambda > 0.0) || !std::isfinite(cfg.separation_over_lambda))
    throw std::domain_error("atom pair: separation r12/lambda must be positive, got " +
                            std::to_string(cfg.separation_over_lambda));
  if (!std::isfinite(cfg.dipole_angle))
    throw std::domain_error("atom pair: dipole angle must be finite");
}

// cos x/x^2 - sin x/x^3
double damping_bracket(double x) {
  if (x < kSmallArgument) {
    const double x2 = x * x;
    return -1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 * (-1.0 / 840.0 + x2 / 45360.0));
  }
  return std::cos(x) / (x * x) - std::sin(x) / (x * x * x);
}

double sinc(double x) {
  if (x < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

double cos_squared(const AtomPairConfig& cfg) {
  const double c = std::cos(cfg.dipole_angle);
  return c * c;
}

double kr(const AtomPairConfig& cfg) { return 2.0 * std::numbers::pi * cfg.separation_over_lambda; }

}  // namespace

double normalize_dipole_angle(double angle) {
  double a = std::fmod(std::abs(angle), std::numbers::pi);
  if (a > std::numbers::pi / 2) a = std::numbers::pi - a;
  return a;
}

double collective_damping(const AtomPairConfig& cfg) {
  validate(cfg);
  const double c2 = cos_squared(cfg);
  const double x = kr(cfg);
  return 1.5 * cfg.gamma * ((1.0 - c2) * sinc(x) + (1.0 - 3.0 * c2) * damping_bracket(x));
}

double dipole_dipole_shift(const AtomPairConfig& cfg) {
  validate(cfg);
  const double c2 = cos_squared(cfg);
  const double x = kr(cfg);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  return 0.75 * cfg.gamma *
         (-(1.0 - c2) * cx / x + (1.0 - 3.0 * c2) * (sx / (x * x) + cx / (x * x * x)));
}

CouplingParams compute_couplings(const AtomPairConfig& cfg) {
  return {collective_damping(cfg), dipole_dipole_shift(cfg), CouplingSource::computed};
}

CouplingParams override_couplings(double gamma12, double omega12, double gamma) {
  if (!std::isfinite(gamma12) || !std::isfinite(omega12))
    throw std::domain_error("coupling override: values must be finite");
  if (std::abs(gamma12) > gamma)
    throw std::domain_error("coupling override: |gamma12| must not exceed gamma");
  return {gamma12, omega12, CouplingSource::override};
}

CouplingParams caption_couplings() { return override_couplings(kCaptionGamma12, kCaptionOmega12); }

}  // namespace twoatom
