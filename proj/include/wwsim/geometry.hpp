#pragma once

#include <string>
#include <vector>

namespace wwsim {

/// Two-slit plate and screen, all lengths in meters.
///
/// The plate lies in z = 0 with slit A centered at x = -d/2 and slit B at
/// x = +d/2; the screen is a distance D behind it.
struct SlitGeometry {
  double wavelength_m;
  double slit_width_m;
  double slit_separation_m;
  double screen_distance_m;

  /// Throws DomainError unless all lengths are positive, s < d, and D > d, s.
  void validate() const;

  static SlitGeometry make(double wavelength_m, double slit_width_m,
                           double slit_separation_m, double screen_distance_m);

  double slit_a_center_m() const { return -0.5 * slit_separation_m; }
  double slit_b_center_m() const { return 0.5 * slit_separation_m; }
};

struct FeasibilityReport {
  double half_fringe_angle_rad;
  double half_fringe_angle_small_rad;  // lambda / 2d
  double focusing_angle_rad;
  double spot_width_m;
  double fraunhofer_distance_m;  // 10 (d + s)^2 / lambda
  bool collimation_ok;
  bool spot_fits_slit;
  bool fraunhofer_ok;
  std::vector<std::string> messages;

  bool ok() const { return collimation_ok && spot_fits_slit && fraunhofer_ok; }
};

/// arcsin(lambda / 2d): angular position of the first two-slit minimum.
double half_fringe_angle(const SlitGeometry& geom);

/// arcsin(lambda / s): angular position of the first single-slit zero.
double single_slit_first_min_angle(const SlitGeometry& geom);

/// lambda D / d, distance between adjacent fringe maxima on the screen.
double fringe_period(const SlitGeometry& geom);

struct ZeroPair {
  double lower_m;
  double upper_m;
};

/// First zeros of the sinc^2 envelope centered at `center_m`.
ZeroPair envelope_zeros(const SlitGeometry& geom, double center_m);

/// Diagnostic only; never throws. An infinite spot width (plane wave) fails
/// the spot check.
FeasibilityReport check_feasibility(const SlitGeometry& geom, double focusing_angle_rad,
                                    double spot_width_m);

}  // namespace wwsim
