#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace schwinger::classical {

/// Commuting amplitudes standing in for the ladder operators
/// (the epsilon = 0 side). No matrices anywhere in this backend.
struct ClassicalState {
  std::complex<double> alpha1;
  std::complex<double> alpha2;
  double hbar = 1.0;
};

/// Real-valued angular-momentum components, in the same units as hbar.
struct ClassicalJ {
  double jx = 0.0;
  double jy = 0.0;
  double jz = 0.0;
  double jtot = 0.0;
};

/// Magnitude and polar direction of a ClassicalJ.
struct Direction {
  double j = 0.0; ///< jtot / hbar
  double theta = 0.0;
  double phi = 0.0; ///< in (-pi, pi]
};

/// Throws std::invalid_argument for non-finite amplitudes or hbar.
ClassicalJ classical_components(const ClassicalState &state);

/// alpha1 = sqrt(2j) cos(theta/2), alpha2 = sqrt(2j) sin(theta/2) e^{i phi}.
/// Any real j >= 0 is accepted; throws std::invalid_argument for j < 0.
ClassicalState state_with_j(double j, double theta, double phi,
                            double hbar = 1.0);

/// Inverse of state_with_j up to the global phase of the amplitudes.
Direction direction_of(const ClassicalJ &components, double hbar = 1.0);

/// |jx^2 + jy^2 + jz^2 - jtot^2| / jtot^2 (absolute when jtot = 0).
double relative_identity_residual(const ClassicalJ &components);

/**
 * Reproducible amplitude sampler.
 *
 * Engine: std::mt19937_64 (the standard's fixed 64-bit Mersenne Twister:
 * w=64, n=312, m=156, r=31, a=0xB5026F5AA96619E9, u=29, d=0x5555555555555555,
 * s=17, b=0x71D67FFFEDA60000, t=37, c=0xFFF7EEE000000000, l=43,
 * f=6364136223846793005) seeded with the given seed. Each 64-bit draw maps to
 * a double in [0, 1) as (x >> 11) * 2^-53. Per amplitude two draws (u, v)
 * give radius bound * sqrt(u) and angle 2 pi v: uniform in the disc of
 * radius `bound`. Amplitudes are drawn in order alpha1, alpha2.
 */
class AmplitudeSampler {
public:
  explicit AmplitudeSampler(std::uint64_t seed);
  std::complex<double> next_amplitude(double bound);
  double next_unit();

private:
  std::mt19937_64 engine_;
};

/// Throws std::invalid_argument for count < 1 or bound <= 0.
std::vector<ClassicalState> sample_states(int count, double amplitude_bound,
                                          std::uint64_t seed,
                                          double hbar = 1.0);

} // namespace schwinger::classical
