#include "wwsim/mzi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "wwsim/errors.hpp"

namespace wwsim {

std::string_view to_string(MziMode m) {
  switch (m) {
    case MziMode::Open: return "open";
    case MziMode::BlockedB: return "blocked";
    case MziMode::Marker: return "marker";
    case MziMode::KnockoutB_EmptyWave: return "knockout";
  }
  return "unknown";
}

std::optional<MziMode> mzi_mode_from_string(std::string_view name) {
  for (MziMode m : {MziMode::Open, MziMode::BlockedB, MziMode::Marker,
                    MziMode::KnockoutB_EmptyWave})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

void MziConfig::validate() const {
  if (!(arm_amplitude_a >= 0.0) || !(arm_amplitude_b >= 0.0))
    throw DomainError("arm amplitudes must be nonnegative");
  if (arm_amplitude_a * arm_amplitude_a + arm_amplitude_b * arm_amplitude_b > 1.0 + 1e-12)
    throw DomainError("arm amplitudes exceed a normalized split (a^2 + b^2 > 1)");
}

MziConfig MziConfig::symmetric(MziMode mode) {
  return {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0, 0.0, mode};
}

PortIntensities open_ports(double a, double b, double phase_rad) {
  const std::complex<double> arm_b = std::polar(b, phase_rad);
  return {0.5 * std::norm(a + arm_b), 0.5 * std::norm(a - arm_b)};
}

double detected_rate(const MziConfig& cfg) {
  const double a2 = cfg.arm_amplitude_a * cfg.arm_amplitude_a;
  const double b2 = cfg.arm_amplitude_b * cfg.arm_amplitude_b;
  switch (cfg.mode) {
    case MziMode::Open:
    case MziMode::Marker:
      return 1.0;
    case MziMode::BlockedB:
    case MziMode::KnockoutB_EmptyWave:
      return a2 + b2 > 0.0 ? a2 / (a2 + b2) : 0.0;
  }
  return 1.0;
}

double output_intensity(const MziConfig& cfg, double phase_rad) {
  cfg.validate();
  const double a = cfg.arm_amplitude_a;
  const double b = cfg.arm_amplitude_b;
  const double phase = cfg.relative_phase_rad + phase_rad;
  switch (cfg.mode) {
    case MziMode::Open:
      return open_ports(a, b, phase).constructive;
    case MziMode::BlockedB:
      return a * a;
    case MziMode::Marker:
      return 0.5 * (a * a + b * b);
    case MziMode::KnockoutB_EmptyWave:
      return detected_rate(cfg) * open_ports(a, b, phase).constructive;
  }
  return 0.0;
}

double swept_visibility(const MziConfig& cfg) {
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kMziPhaseSamples; ++i) {
    const double phase = 2.0 * std::numbers::pi * i / kMziPhaseSamples;
    const double v = output_intensity(cfg, phase);
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  return hi + lo > 0.0 ? (hi - lo) / (hi + lo) : 0.0;
}

DualityReport mzi_duality(const MziConfig& cfg) {
  cfg.validate();
  const double a2 = cfg.arm_amplitude_a * cfg.arm_amplitude_a;
  const double b2 = cfg.arm_amplitude_b * cfg.arm_amplitude_b;
  const double total = a2 + b2;
  const double fringe = total > 0.0 ? 2.0 * cfg.arm_amplitude_a * cfg.arm_amplitude_b / total : 0.0;
  switch (cfg.mode) {
    case MziMode::Open:
      return duality_report(WhichWayKind::Predictability,
                            total > 0.0 ? predictability(a2 / total, b2 / total) : 0.0, fringe);
    case MziMode::BlockedB:
      return duality_report(WhichWayKind::Predictability, predictability(1.0, 0.0), 0.0);
    case MziMode::Marker:
      return duality_report(WhichWayKind::Distinguishability, 1.0, 0.0);
    case MziMode::KnockoutB_EmptyWave:
      // Every detected particle went through arm A; the fringe shape is the open one.
      return duality_report(WhichWayKind::Predictability, predictability(1.0, 0.0), fringe);
  }
  throw DomainError("unknown MZI mode");
}

DualityReport asymmetric_duality(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) throw DomainError("arm amplitudes must be nonnegative");
  const double a2 = a * a;
  const double b2 = b * b;
  const double total = a2 + b2;
  if (!(total > 0.0)) throw DomainError("at least one arm amplitude must be positive");
  return duality_report(WhichWayKind::Predictability, std::abs(a2 - b2) / total,
                        2.0 * a * b / total);
}

}  // namespace wwsim
