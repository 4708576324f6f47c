#include "wwsim/beam.hpp"

#include <cmath>
#include <limits>

#include "wwsim/errors.hpp"

namespace wwsim {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

void validate(const BeamProfile& beam) {
  std::visit(overloaded{
                 [](const PlaneWave& p) {
                   if (!(std::abs(p.tilt_rad) < std::numbers::pi / 2.0))
                     throw DomainError("plane-wave tilt must satisfy |tilt| < pi/2");
                 },
                 [](const GaussianBeam& g) {
                   if (!(g.waist_m > 0.0) || !std::isfinite(g.waist_m))
                     throw DomainError("Gaussian waist must be positive");
                 },
                 [](const BesselBeam& b) {
                   if (!(b.radial_wavenumber_per_m > 0.0) ||
                       !std::isfinite(b.radial_wavenumber_per_m))
                     throw DomainError("Bessel radial wavenumber must be positive");
                 },
             },
             beam);
}

double rayleigh_range(double waist_m, double wavelength_m) {
  return std::numbers::pi * waist_m * waist_m / wavelength_m;
}

double skew_angle(double displacement_m, double distance_m) {
  return std::atan(displacement_m / distance_m);
}

double bessel_core_radius(double radial_wavenumber_per_m) {
  return kBesselJ0FirstZero / radial_wavenumber_per_m;
}

double bessel_wavenumber_for_core_radius(double radius_m) {
  return kBesselJ0FirstZero / radius_m;
}

double bessel_tilt_shift_angle(const SlitGeometry& geom) {
  return 0.25 * geom.wavelength_m / geom.slit_separation_m;
}

double spot_width(const BeamProfile& beam) {
  return std::visit(overloaded{
                        [](const PlaneWave&) { return std::numeric_limits<double>::infinity(); },
                        [](const GaussianBeam& g) { return 2.0 * g.waist_m; },
                        [](const BesselBeam& b) {
                          return 2.0 * bessel_core_radius(b.radial_wavenumber_per_m);
                        },
                    },
                    beam);
}

std::complex<double> amplitude_at(const BeamProfile& beam, double xi_m, double wavelength_m) {
  return std::visit(
      overloaded{
          [&](const PlaneWave& p) {
            const double k = 2.0 * std::numbers::pi / wavelength_m;
            return std::polar(1.0, k * std::sin(p.tilt_rad) * xi_m);
          },
          [&](const GaussianBeam& g) {
            const double u = (xi_m - g.center_m) / g.waist_m;
            return std::complex<double>(std::exp(-u * u), 0.0);
          },
          [&](const BesselBeam& b) {
            const double j = bessel_j0(b.radial_wavenumber_per_m * (xi_m - b.center_m));
            return std::complex<double>(b.ring_phase_flips ? j : std::abs(j), 0.0);
          },
      },
      beam);
}

}  // namespace wwsim
