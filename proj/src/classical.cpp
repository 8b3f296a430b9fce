#include "schwinger/classical.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace schwinger::classical {

namespace {

bool finite(std::complex<double> z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace

ClassicalJ classical_components(const ClassicalState &state) {
  if (!finite(state.alpha1) || !finite(state.alpha2))
    throw std::invalid_argument("classical_components: non-finite amplitude");
  if (!std::isfinite(state.hbar))
    throw std::invalid_argument("classical_components: non-finite hbar");
  // conj(a1) a2 carries both transverse components:
  // jx = hbar Re(conj(a1) a2), jy = hbar Im(conj(a1) a2).
  const auto cross = std::conj(state.alpha1) * state.alpha2;
  const double p1 = std::norm(state.alpha1);
  const double p2 = std::norm(state.alpha2);
  const double half = 0.5 * state.hbar;
  return {.jx = state.hbar * cross.real(),
          .jy = state.hbar * cross.imag(),
          .jz = half * (p1 - p2),
          .jtot = half * (p1 + p2)};
}

ClassicalState state_with_j(double j, double theta, double phi, double hbar) {
  if (!(j >= 0.0))
    throw std::invalid_argument("state_with_j: j must be non-negative, got " +
                                std::to_string(j));
  const double r = std::sqrt(2.0 * j);
  return {.alpha1 = r * std::cos(0.5 * theta),
          .alpha2 = r * std::sin(0.5 * theta) *
                            std::exp(std::complex<double>{0.0, phi}),
          .hbar = hbar};
}

Direction direction_of(const ClassicalJ &c, double hbar) {
  const double transverse = std::hypot(c.jx, c.jy);
  return {.j = c.jtot / hbar,
          .theta = std::atan2(transverse, c.jz),
          .phi = std::atan2(c.jy, c.jx)};
}

double relative_identity_residual(const ClassicalJ &c) {
  const double lhs = c.jx * c.jx + c.jy * c.jy + c.jz * c.jz;
  const double rhs = c.jtot * c.jtot;
  const double diff = std::abs(lhs - rhs);
  return rhs > 0.0 ? diff / rhs : diff;
}

AmplitudeSampler::AmplitudeSampler(std::uint64_t seed) : engine_(seed) {}

double AmplitudeSampler::next_unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::complex<double> AmplitudeSampler::next_amplitude(double bound) {
  const double u = next_unit();
  const double v = next_unit();
  return std::polar(bound * std::sqrt(u), 2.0 * std::numbers::pi * v);
}

std::vector<ClassicalState> sample_states(int count, double amplitude_bound,
                                          std::uint64_t seed, double hbar) {
  if (count < 1)
    throw std::invalid_argument("sample_states: count must be >= 1");
  if (!(amplitude_bound > 0.0) || !std::isfinite(amplitude_bound))
    throw std::invalid_argument("sample_states: bound must be positive");
  AmplitudeSampler sampler(seed);
  std::vector<ClassicalState> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto a1 = sampler.next_amplitude(amplitude_bound);
    const auto a2 = sampler.next_amplitude(amplitude_bound);
    out.push_back({a1, a2, hbar});
  }
  return out;
}

} // namespace schwinger::classical
