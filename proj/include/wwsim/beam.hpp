#pragma once

#include <complex>
#include <numbers>
#include <variant>

#include "wwsim/bessel.hpp"
#include "wwsim/geometry.hpp"

namespace wwsim {

struct PlaneWave {
  double tilt_rad = 0.0;
};

/// Field amplitude exp(-(xi - c)^2 / w0^2): intensity reaches 1/e^2 at |xi - c| = w0.
struct GaussianBeam {
  double waist_m;
  double center_m = 0.0;
};

/// Field amplitude J0(k_r (xi - c)). With ring_phase_flips the natural sign of
/// J0 is kept, i.e. a pi flip from each ring to the next; without it |J0|.
struct BesselBeam {
  double radial_wavenumber_per_m;
  double center_m = 0.0;
  bool ring_phase_flips = true;
};

using BeamProfile = std::variant<PlaneWave, GaussianBeam, BesselBeam>;

/// Throws DomainError on a non-positive waist or k_r or |tilt| >= pi/2.
void validate(const BeamProfile& beam);

/// Relative phase applied to slit B when a Bessel core sits on A and its
/// first dark ring on B.
inline constexpr double kBesselDarkRingPhase = std::numbers::pi / 2.0;

double rayleigh_range(double waist_m, double wavelength_m);

/// arctan(displacement / distance).
double skew_angle(double displacement_m, double distance_m);

/// Radius of the central core (first zero of J0).
double bessel_core_radius(double radial_wavenumber_per_m);

/// Radial wavenumber that puts the first zero of J0 at `radius_m`.
double bessel_wavenumber_for_core_radius(double radius_m);

/// (lambda / 4) / d: the tilt equivalent of a pi/2 phase step between slits.
double bessel_tilt_shift_angle(const SlitGeometry& geom);

/// Full spot width compared against d: 2 w0 (Gaussian), 2 core radius
/// (Bessel), infinity for a plane wave.
double spot_width(const BeamProfile& beam);

/// Complex incident amplitude at slit-plane coordinate xi. Unit peak for all profiles.
std::complex<double> amplitude_at(const BeamProfile& beam, double xi_m, double wavelength_m);

}  // namespace wwsim
