#pragma once

#include <optional>
#include <string_view>

#include "wwsim/metrics.hpp"

namespace wwsim {

/// Per-particle two-path Mach-Zehnder model. Perfect coherence between the
/// arms is assumed.
enum class MziMode {
  Open,
  BlockedB,  // absorber in arm B: no particle, no wave
  Marker,    // orthogonal which-way tag: cross term vanishes
  KnockoutB_EmptyWave,  // particles removed from arm B, its empty wave kept
};

std::string_view to_string(MziMode m);

struct MziConfig {
  double arm_amplitude_a;
  double arm_amplitude_b;
  double relative_phase_rad = 0.0;
  MziMode mode = MziMode::Open;

  /// Throws DomainError on negative amplitudes or a^2 + b^2 > 1.
  void validate() const;
  static MziConfig symmetric(MziMode mode);
};

inline constexpr int kMziPhaseSamples = 720;

struct PortIntensities {
  double constructive;  // |a + b e^{i phi}|^2 / 2
  double destructive;   // |a - b e^{i phi}|^2 / 2
};

/// Both output ports of the open interferometer.
PortIntensities open_ports(double a, double b, double phase_rad);

/// Fraction of particles that still reach the detectors.
double detected_rate(const MziConfig& cfg);

/// Intensity at the monitored port for relative phase `phase_rad`
/// (added to the config's own phase).
double output_intensity(const MziConfig& cfg, double phase_rad);

/// Visibility and which-way metric of a configuration. Visibility is the
/// closed form; see `swept_visibility` for the sampled cross-check.
DualityReport mzi_duality(const MziConfig& cfg);

/// (max - min) / (max + min) of output_intensity over kMziPhaseSamples phases in [0, 2 pi).
double swept_visibility(const MziConfig& cfg);

/// Open interferometer with unequal arms: P = |a^2 - b^2| / (a^2 + b^2),
/// V = 2ab / (a^2 + b^2). Throws DomainError on negative or all-zero amplitudes.
DualityReport asymmetric_duality(double a, double b);

std::optional<MziMode> mzi_mode_from_string(std::string_view name);

}  // namespace wwsim
