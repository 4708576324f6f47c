#pragma once

#include <Eigen/Core>
#include <string>
#include <string_view>

#include "wwsim/geometry.hpp"

namespace wwsim {

enum class Normalization { PeakSingleSlit, UnitIntegral };

std::string_view to_string(Normalization n);

struct GridSpec {
  double min_m;
  double max_m;
  Eigen::Index points;

  /// Throws DomainError unless min < max and points >= 2.
  void validate() const;
  Eigen::ArrayXd coordinates() const;
  double spacing() const { return (max_m - min_m) / static_cast<double>(points - 1); }
};

struct PatternMeta {
  std::string model;
  SlitGeometry geometry;
  /// Multiply stored intensity by this to express it in units of I0,single.
  double scale_to_single_slit = 1.0;
  /// Largest quadrature refinement difference over the grid (oracle patterns only).
  double quadrature_error = 0.0;
};

/// Screen intensity sampled on a uniform grid.
struct IntensityPattern {
  Eigen::ArrayXd x_m;
  Eigen::ArrayXd intensity;
  Normalization normalization = Normalization::PeakSingleSlit;
  PatternMeta meta;

  Eigen::Index size() const { return x_m.size(); }
  double spacing() const { return x_m.size() > 1 ? x_m(1) - x_m(0) : 0.0; }
  Eigen::ArrayXd in_single_slit_units() const { return intensity * meta.scale_to_single_slit; }
};

/// Composite trapezoidal rule on uniformly spaced samples.
double trapezoid(const Eigen::ArrayXd& y, double dx);

/// Trapezoidal integral of the linear interpolant of p between lo and hi.
double trapezoid_between(const IntensityPattern& p, double lo_m, double hi_m);

/// Rescale so the trapezoidal integral is one; the meta scale follows.
void normalize_unit_integral(IntensityPattern& p);

/// Rescale so the largest sample is one; the meta scale follows.
void normalize_peak(IntensityPattern& p);

}  // namespace wwsim
