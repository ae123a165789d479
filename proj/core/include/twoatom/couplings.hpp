#pragma once

namespace twoatom {

// Geometry and atomic parameters of the pair. Rates and frequencies are in
// units of the single-atom decay rate unless gamma is set otherwise.
struct AtomPairConfig {
  double gamma = 1.0;
  double separation_over_lambda = 1.0 / 6.0;  // r12 / lambda
  double dipole_angle = 1.5707963267948966;   // angle(mu, r12) in radians
  double delta = 0.0;                         // (omega2 - omega1) / 2
  double omega0 = 0.0;                        // mean transition frequency (rotating frame: 0)
};

enum class CouplingSource { computed, override };

struct CouplingParams {
  double gamma12 = 0.0;
  double omega12 = 0.0;
  CouplingSource source = CouplingSource::computed;
};

// Values stated in the figure captions for r12 = lambda/6, mu perpendicular to r12.
inline constexpr double kCaptionGamma12 = 0.79;
inline constexpr double kCaptionOmega12 = 1.12;

// Below this value of k0*r12 the bracket cos x/x^2 - sin x/x^3 is evaluated
// from its Taylor series.
inline constexpr double kSmallArgument = 0.1;

// Collective damping Gamma_12. Throws std::domain_error on invalid config.
double collective_damping(const AtomPairConfig& cfg);

// Dipole-dipole shift Omega_12, with the 3/4 prefactor.
double dipole_dipole_shift(const AtomPairConfig& cfg);

CouplingParams compute_couplings(const AtomPairConfig& cfg);

// Pins the couplings by hand. |gamma12| may reach gamma (Dicke limit) only here.
CouplingParams override_couplings(double gamma12, double omega12, double gamma = 1.0);

CouplingParams caption_couplings();

// Reduces an arbitrary angle to [0, pi/2]; only cos^2 of it matters.
double normalize_dipole_angle(double angle);

}  // namespace twoatom
