#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wwsim/analytic.hpp"
#include "wwsim/beam.hpp"
#include "wwsim/geometry.hpp"
#include "wwsim/metrics.hpp"
#include "wwsim/oracle.hpp"
#include "wwsim/pattern.hpp"

namespace wwsim {

inline constexpr std::string_view kToolVersion = "0.3.0";

enum class Alignment { CoverBoth, FocusA, FocusB };
enum class BeamKind { Plane, Gaussian, Bessel };

std::string_view to_string(Alignment a);
std::string_view to_string(BeamKind k);

struct BeamConfig {
  BeamKind kind = BeamKind::Plane;
  double tilt_rad = 0.0;
  std::optional<double> waist_m;
  std::optional<double> radial_wavenumber_per_m;
  std::optional<double> center_m;
  bool ring_phase_flips = true;
  /// pi/2 on the dark-ring slit when a Bessel core is focused on the other one.
  bool dark_ring_phase = true;
  Alignment alignment = Alignment::CoverBoth;
};

struct WashoutConfig {
  double theta_rad;
  int n_tilts = kDefaultWashoutTilts;
};

/// Everything one `simulate` run needs. Lengths in meters, angles in radians.
struct ScenarioConfig {
  std::string name = "scenario";
  SlitGeometry geometry{632.8e-9, 2e-6, 12.6e-6, 0.1};
  BeamConfig beam;
  std::vector<ModelKind> models{ModelKind::StandardTwoSlit};
  ModelParameters model_params;
  bool oracle = false;
  QuadratureSpec quadrature;
  std::optional<WashoutConfig> washout;
  std::optional<double> focusing_angle_rad;
  std::optional<double> spot_width_m;
  std::optional<double> grid_min_m;
  std::optional<double> grid_max_m;
  Eigen::Index grid_points = 4001;
  Normalization normalization = Normalization::PeakSingleSlit;
  std::filesystem::path output_dir = ".";

  /// Throws ConfigError on a violated invariant.
  void validate() const;
  void validate_beam() const;

  /// Slit-plane center of the focused beam, or 0 when both slits are lit.
  double beam_center_m() const;
  BeamProfile beam_profile() const;
  ApertureSet apertures() const;
  GridSpec grid() const;
  double focusing_angle() const;
  double spot_width() const;
  /// Path probabilities fixed by the alignment.
  std::pair<double, double> path_probabilities() const;
};

/// Parses flat `key = value` text with `#` comments. Throws ConfigError naming
/// the key and line on unknown keys, bad values or units, or violated invariants.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// "632.8nm", "12.6 um", "0.1" (meters).
double parse_length(std::string_view text);
/// "25mrad", "1e-3", "1.5 deg".
double parse_angle(std::string_view text);

struct PatternSummary {
  std::string model;
  IntensityPattern pattern;
  double visibility_global;
  double visibility_fringe_local;
  DualityReport duality;
};

struct DivergenceSummary {
  std::string a;
  std::string b;
  PatternDivergence divergence;
};

struct ComparisonReport {
  ScenarioConfig config;
  FeasibilityReport feasibility;
  std::vector<PatternSummary> patterns;
  std::vector<DivergenceSummary> divergences;

  const PatternSummary* find(std::string_view model) const;
};

/// Evaluates models and oracle on the shared grid; no files are written.
ComparisonReport evaluate_scenario(const ScenarioConfig& cfg);

/// Evaluates and writes `<name>_<model>.csv` per pattern plus
/// `<name>_summary.json` into `out_dir`. Files already written are removed
/// if a later step fails.
ComparisonReport run_scenario(const ScenarioConfig& cfg, const std::filesystem::path& out_dir);

/// Columns `x_m,intensity`, 17 significant digits.
void emit_pattern_csv(const IntensityPattern& p, const std::filesystem::path& path);
IntensityPattern read_pattern_csv(const std::filesystem::path& path);

std::string summary_json(const ComparisonReport& report);
void emit_summary_json(const ComparisonReport& report, const std::filesystem::path& path);

inline constexpr std::string_view kSweepParameters[] = {"theta", "spot_width", "d",
                                                        "s",     "D",          "wavelength"};

struct SweepRow {
  double value;
  FeasibilityReport feasibility;
  double visibility_model;   // NaN without models
  double visibility_oracle;  // NaN without oracle
  double sup_divergence;     // first model vs oracle; NaN unless both exist
};

/// One row per value; `values` use the parameter's units (angle or length).
std::vector<SweepRow> sweep(const ScenarioConfig& cfg, std::string_view parameter,
                            const std::vector<std::string>& values);
std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string feasibility_json(const ScenarioConfig& cfg);

/// Shortest round-trip decimal with 17 significant digits.
std::string format_double(double v);

}  // namespace wwsim
