#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "wwsim/analytic.hpp"
#include "wwsim/beam.hpp"
#include "wwsim/geometry.hpp"
#include "wwsim/pattern.hpp"
#include "wwsim/quadrature.hpp"

namespace wwsim {

/// Scalar Fraunhofer diffraction of an arbitrary incident field through a set
/// of slit-plane apertures, evaluated by brute-force quadrature. Constant
/// prefactors (obliquity, 1/(lambda D)) are dropped.

struct Aperture {
  double lo_m;
  double hi_m;
  double extra_phase_rad = 0.0;
};

struct ApertureSet {
  std::vector<Aperture> intervals;

  /// Throws DomainError on empty, inverted or overlapping intervals.
  void validate() const;

  /// [-d/2 - s/2, -d/2 + s/2] and [d/2 - s/2, d/2 + s/2], slit B carrying `phase_b_rad`.
  static ApertureSet two_slit(const SlitGeometry& g, double phase_b_rad = 0.0);
  static ApertureSet slit_a(const SlitGeometry& g);
  static ApertureSet slit_b(const SlitGeometry& g);
};

struct QuadratureSpec {
  int nodes_per_interval = 16;
  double relative_tolerance = 1e-12;
  int max_refinements = 8;

  void validate() const;
};

/// Sum over apertures of exp(i phase) * integral of a(xi) exp(-2 pi i x xi / (lambda D)).
///
/// The node count starts at the larger of `nodes_per_interval` and a count
/// resolving the integrand's oscillations, then doubles until successive
/// estimates agree to `relative_tolerance` of the integral of |a|. An incident
/// tilt multiplies the beam by exp(i k sin(tilt) xi).
std::complex<double> fraunhofer_amplitude(const BeamProfile& beam, const ApertureSet& apertures,
                                          const SlitGeometry& g, double x_m,
                                          const QuadratureSpec& quad, double tilt_rad = 0.0);

/// Same, with a caller-owned rule cache.
std::complex<double> fraunhofer_amplitude(const BeamProfile& beam, const ApertureSet& apertures,
                                          const SlitGeometry& g, double x_m,
                                          const QuadratureSpec& quad, double tilt_rad,
                                          GaussLegendreCache& cache);

/// |amplitude|^2 on the grid, normalized to its own peak. The meta scale
/// records the peak relative to a uniformly lit single slit (|s|^2).
/// Grid points are evaluated in parallel; results do not depend on the thread count.
IntensityPattern oracle_pattern(const BeamProfile& beam, const ApertureSet& apertures,
                                const SlitGeometry& g, const GridSpec& grid,
                                const QuadratureSpec& quad = {}, double tilt_rad = 0.0);

/// Pattern produced under an incidence tilt.
using TiltedPatternFn = std::function<IntensityPattern(double tilt_rad)>;

/// Closed-form model shifted on the screen by D * tilt.
TiltedPatternFn analytic_under_tilt(ModelKind m, const SlitGeometry& g, const GridSpec& grid,
                                    const ModelParameters& params = {});

/// Oracle pattern with the incident field tilted by exp(i k sin(tilt) xi).
TiltedPatternFn oracle_under_tilt(BeamProfile beam, ApertureSet apertures, const SlitGeometry& g,
                                  const GridSpec& grid, const QuadratureSpec& quad = {});

inline constexpr int kDefaultWashoutTilts = 101;

/// Incoherent average over `n_tilts` tilts uniformly covering [-theta, theta]
/// (midpoint sampling, odd count so tilt 0 is included). Averaging happens in
/// I0,single units; the result keeps the untilted pattern's scale.
IntensityPattern washout_pattern(const TiltedPatternFn& base, double theta_rad,
                                 int n_tilts = kDefaultWashoutTilts);

}  // namespace wwsim
