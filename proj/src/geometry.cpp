#include "wwsim/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wwsim/errors.hpp"

namespace wwsim {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void SlitGeometry::validate() const {
  if (!positive_finite(wavelength_m)) throw DomainError("wavelength must be positive");
  if (!positive_finite(slit_width_m)) throw DomainError("slit width must be positive");
  if (!positive_finite(slit_separation_m)) throw DomainError("slit separation must be positive");
  if (!positive_finite(screen_distance_m)) throw DomainError("screen distance must be positive");
  if (!(slit_width_m < slit_separation_m))
    throw DomainError("slit width must be smaller than slit separation (slits overlap)");
  if (!(screen_distance_m > slit_separation_m) || !(screen_distance_m > slit_width_m))
    throw DomainError("screen distance must exceed slit separation and slit width");
}

SlitGeometry SlitGeometry::make(double wavelength_m, double slit_width_m,
                                double slit_separation_m, double screen_distance_m) {
  SlitGeometry g{wavelength_m, slit_width_m, slit_separation_m, screen_distance_m};
  g.validate();
  return g;
}

double half_fringe_angle(const SlitGeometry& geom) {
  const double ratio = geom.wavelength_m / (2.0 * geom.slit_separation_m);
  if (ratio > 1.0) throw DomainError("lambda/2d > 1: no two-slit minimum exists");
  return std::asin(ratio);
}

double single_slit_first_min_angle(const SlitGeometry& geom) {
  const double ratio = geom.wavelength_m / geom.slit_width_m;
  if (ratio > 1.0) throw DomainError("lambda > s: no single-slit zero exists");
  return std::asin(ratio);
}

double fringe_period(const SlitGeometry& geom) {
  return geom.wavelength_m * geom.screen_distance_m / geom.slit_separation_m;
}

ZeroPair envelope_zeros(const SlitGeometry& geom, double center_m) {
  const double half = geom.wavelength_m * geom.screen_distance_m / geom.slit_width_m;
  return {center_m - half, center_m + half};
}

FeasibilityReport check_feasibility(const SlitGeometry& geom, double focusing_angle_rad,
                                    double spot_width_m) {
  FeasibilityReport r{};
  r.focusing_angle_rad = focusing_angle_rad;
  r.spot_width_m = spot_width_m;
  r.half_fringe_angle_small_rad = geom.wavelength_m / (2.0 * geom.slit_separation_m);

  const double ratio = r.half_fringe_angle_small_rad;
  r.half_fringe_angle_rad =
      ratio <= 1.0 ? std::asin(ratio) : std::numeric_limits<double>::quiet_NaN();

  std::ostringstream msg;
  if (ratio > 1.0) {
    r.collimation_ok = false;
    r.messages.push_back("lambda/2d > 1: no two-slit fringe minimum exists");
  } else {
    r.collimation_ok = focusing_angle_rad <= r.half_fringe_angle_rad / 10.0;
    if (!r.collimation_ok) {
      msg << "focusing angle " << focusing_angle_rad << " rad exceeds phi/10 = "
          << r.half_fringe_angle_rad / 10.0 << " rad; fringes wash out";
      r.messages.push_back(msg.str());
      msg.str("");
    }
  }

  r.spot_fits_slit = spot_width_m <= geom.slit_separation_m;
  if (!r.spot_fits_slit) {
    if (std::isinf(spot_width_m)) {
      r.messages.push_back("unfocused illumination covers both slits");
    } else {
      msg << "spot width " << spot_width_m << " m exceeds slit separation "
          << geom.slit_separation_m << " m";
      r.messages.push_back(msg.str());
      msg.str("");
    }
  }

  const double aperture = geom.slit_separation_m + geom.slit_width_m;
  r.fraunhofer_distance_m = 10.0 * aperture * aperture / geom.wavelength_m;
  r.fraunhofer_ok = geom.screen_distance_m >= r.fraunhofer_distance_m;
  if (!r.fraunhofer_ok) {
    msg << "screen distance " << geom.screen_distance_m << " m is below the far-field length "
        << r.fraunhofer_distance_m << " m";
    r.messages.push_back(msg.str());
  }
  return r;
}

}  // namespace wwsim
