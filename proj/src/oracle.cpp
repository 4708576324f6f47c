#include "wwsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "wwsim/errors.hpp"

namespace wwsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Spatial bandwidth of the incident field, in cycles per meter, plus the
// inverse of its smallest feature length.
double beam_bandwidth(const BeamProfile& beam) {
  if (const auto* g = std::get_if<GaussianBeam>(&beam)) return 1.0 / g->waist_m;
  if (const auto* b = std::get_if<BesselBeam>(&beam)) return b->radial_wavenumber_per_m / kTwoPi;
  return 0.0;
}

struct IntervalResult {
  std::complex<double> value;
  double magnitude;  // integral of |a|
};

struct AmplitudeResult {
  std::complex<double> value;
  double error;  // worst relative refinement difference
};

AmplitudeResult integrate_apertures(const BeamProfile& beam, const ApertureSet& apertures,
                                    const SlitGeometry& g, double x_m, const QuadratureSpec& quad,
                                    double tilt_rad, GaussLegendreCache& cache) {
  const double lambda = g.wavelength_m;
  const double q = kTwoPi * x_m / (lambda * g.screen_distance_m);
  const double k_tilt = kTwoPi * std::sin(tilt_rad) / lambda;
  const double bandwidth =
      std::abs(x_m) / (lambda * g.screen_distance_m) + std::abs(k_tilt) / kTwoPi +
      beam_bandwidth(beam);

  auto integrate = [&](const Aperture& ap, Eigen::Index n) {
    const GaussLegendreRule& rule = cache.rule(n);
    const double half = 0.5 * (ap.hi_m - ap.lo_m);
    const double mid = 0.5 * (ap.hi_m + ap.lo_m);
    std::complex<double> sum{0.0, 0.0};
    double mag = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double xi = mid + half * rule.nodes(i);
      std::complex<double> a = amplitude_at(beam, xi, lambda);
      if (k_tilt != 0.0) a *= std::polar(1.0, k_tilt * xi);
      sum += rule.weights(i) * a * std::polar(1.0, -q * xi);
      mag += rule.weights(i) * std::abs(a);
    }
    return IntervalResult{half * sum, half * mag};
  };

  AmplitudeResult total{{0.0, 0.0}, 0.0};
  for (const Aperture& ap : apertures.intervals) {
    const double length = ap.hi_m - ap.lo_m;
    auto n = static_cast<Eigen::Index>(std::ceil(10.0 + 4.0 * length * bandwidth));
    n = std::max<Eigen::Index>(n, quad.nodes_per_interval);

    IntervalResult prev = integrate(ap, n);
    for (int r = 1;; ++r) {
      n *= 2;
      const IntervalResult cur = integrate(ap, n);
      const double scale = std::max(cur.magnitude, std::abs(cur.value));
      const double diff = std::abs(cur.value - prev.value);
      if (diff <= quad.relative_tolerance * scale) {
        total.error = std::max(total.error, scale > 0.0 ? diff / scale : 0.0);
        prev = cur;
        break;
      }
      if (r >= quad.max_refinements) {
        throw ConvergenceError("oracle quadrature did not converge at x = " +
                                   std::to_string(x_m) + " m",
                               x_m, std::abs(prev.value), std::abs(cur.value));
      }
      prev = cur;
    }
    total.value += std::polar(1.0, ap.extra_phase_rad) * prev.value;
  }
  return total;
}

}  // namespace

void ApertureSet::validate() const {
  if (intervals.empty()) throw DomainError("aperture set is empty");
  std::vector<Aperture> sorted = intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const Aperture& a, const Aperture& b) { return a.lo_m < b.lo_m; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!(sorted[i].lo_m < sorted[i].hi_m)) throw DomainError("aperture requires lo < hi");
    if (i > 0 && sorted[i].lo_m < sorted[i - 1].hi_m)
      throw DomainError("apertures overlap");
  }
}

ApertureSet ApertureSet::two_slit(const SlitGeometry& g, double phase_b_rad) {
  const double hs = 0.5 * g.slit_width_m;
  return {{{g.slit_a_center_m() - hs, g.slit_a_center_m() + hs, 0.0},
           {g.slit_b_center_m() - hs, g.slit_b_center_m() + hs, phase_b_rad}}};
}

ApertureSet ApertureSet::slit_a(const SlitGeometry& g) {
  const double hs = 0.5 * g.slit_width_m;
  return {{{g.slit_a_center_m() - hs, g.slit_a_center_m() + hs, 0.0}}};
}

ApertureSet ApertureSet::slit_b(const SlitGeometry& g) {
  const double hs = 0.5 * g.slit_width_m;
  return {{{g.slit_b_center_m() - hs, g.slit_b_center_m() + hs, 0.0}}};
}

void QuadratureSpec::validate() const {
  if (nodes_per_interval < 8) throw DomainError("quadrature needs at least 8 nodes per interval");
  if (!(relative_tolerance > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (max_refinements < 1) throw DomainError("quadrature needs at least one refinement");
}

std::complex<double> fraunhofer_amplitude(const BeamProfile& beam, const ApertureSet& apertures,
                                          const SlitGeometry& g, double x_m,
                                          const QuadratureSpec& quad, double tilt_rad,
                                          GaussLegendreCache& cache) {
  return integrate_apertures(beam, apertures, g, x_m, quad, tilt_rad, cache).value;
}

std::complex<double> fraunhofer_amplitude(const BeamProfile& beam, const ApertureSet& apertures,
                                          const SlitGeometry& g, double x_m,
                                          const QuadratureSpec& quad, double tilt_rad) {
  GaussLegendreCache cache;
  return fraunhofer_amplitude(beam, apertures, g, x_m, quad, tilt_rad, cache);
}

IntensityPattern oracle_pattern(const BeamProfile& beam, const ApertureSet& apertures,
                                const SlitGeometry& g, const GridSpec& grid,
                                const QuadratureSpec& quad, double tilt_rad) {
  g.validate();
  validate(beam);
  apertures.validate();
  quad.validate();

  IntensityPattern p;
  p.x_m = grid.coordinates();
  const Eigen::Index n = p.size();
  p.intensity.resize(n);
  Eigen::ArrayXd errors = Eigen::ArrayXd::Zero(n);

  const auto workers = static_cast<Eigen::Index>(
      std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, 16u));
  const Eigen::Index chunk = (n + workers - 1) / workers;
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  std::vector<std::thread> threads;
  for (Eigen::Index w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      GaussLegendreCache cache;
      try {
        for (Eigen::Index i = w * chunk; i < std::min(n, (w + 1) * chunk); ++i) {
          const AmplitudeResult r =
              integrate_apertures(beam, apertures, g, p.x_m(i), quad, tilt_rad, cache);
          p.intensity(i) = std::norm(r.value);
          errors(i) = r.error;
        }
      } catch (...) {
        failures[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  p.meta.model = "oracle";
  p.meta.geometry = g;
  p.meta.scale_to_single_slit = 1.0 / (g.slit_width_m * g.slit_width_m);
  p.meta.quadrature_error = errors.maxCoeff();
  normalize_peak(p);
  return p;
}

TiltedPatternFn analytic_under_tilt(ModelKind m, const SlitGeometry& g, const GridSpec& grid,
                                    const ModelParameters& params) {
  return [m, g, grid, params](double tilt_rad) {
    IntensityPattern p = sample_pattern(m, g, grid, Normalization::PeakSingleSlit, params);
    if (tilt_rad != 0.0) {
      const double shift = g.screen_distance_m * tilt_rad;
      p.intensity =
          p.x_m.unaryExpr([&](double x) { return evaluate_model(m, g, x - shift, params); });
    }
    return p;
  };
}

TiltedPatternFn oracle_under_tilt(BeamProfile beam, ApertureSet apertures, const SlitGeometry& g,
                                  const GridSpec& grid, const QuadratureSpec& quad) {
  return [beam = std::move(beam), apertures = std::move(apertures), g, grid,
          quad](double tilt_rad) { return oracle_pattern(beam, apertures, g, grid, quad, tilt_rad); };
}

IntensityPattern washout_pattern(const TiltedPatternFn& base, double theta_rad, int n_tilts) {
  if (!(theta_rad >= 0.0)) throw DomainError("washout angle must be nonnegative");
  if (n_tilts < 1 || n_tilts % 2 == 0) throw DomainError("washout needs an odd tilt count >= 1");

  IntensityPattern result = base(0.0);
  if (theta_rad == 0.0 || n_tilts == 1) return result;

  const double ref_scale = result.meta.scale_to_single_slit;
  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(result.size());
  for (int j = 0; j < n_tilts; ++j) {
    const double tilt = -theta_rad + theta_rad * (2.0 * j + 1.0) / n_tilts;
    if (2 * j + 1 == n_tilts) {
      sum += result.intensity * ref_scale;
      continue;
    }
    const IntensityPattern tilted = base(tilt);
    if (tilted.size() != result.size()) throw DomainError("tilted pattern grid mismatch");
    sum += tilted.intensity * tilted.meta.scale_to_single_slit;
  }
  result.intensity = sum / (static_cast<double>(n_tilts) * ref_scale);
  result.meta.model += "+washout";
  return result;
}

}  // namespace wwsim
