#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>

#include "wwsim/geometry.hpp"
#include "wwsim/pattern.hpp"

namespace wwsim {

/// Closed-form screen patterns. All arguments are in the Fraunhofer
/// small-angle form, linear in x / D.
enum class ModelKind {
  SingleSlitA,
  EmptyWaveA,
  EmptyWaveB,
  EmptyWaveSum,
  StandardTwoSlit,
  SqtFocusedA,
  PureFringe,
  GeneralAlphaBeta,
};

inline constexpr ModelKind kAllModels[] = {
    ModelKind::SingleSlitA,     ModelKind::EmptyWaveA,   ModelKind::EmptyWaveB,
    ModelKind::EmptyWaveSum,     ModelKind::StandardTwoSlit, ModelKind::SqtFocusedA,
    ModelKind::PureFringe,      ModelKind::GeneralAlphaBeta,
};

std::string_view to_string(ModelKind m);
std::optional<ModelKind> model_from_string(std::string_view name);

/// Units of each model's natural normalization, in I0,single.
/// Single-slit curves: 1; Eqs. with one envelope (I0): 2; standard two-slit (I'0): 4.
double single_slit_units(ModelKind m);

/// sin(u)/u, with a series branch near zero.
template <typename Scalar>
Scalar sinc(Scalar u) {
  using std::abs;
  using std::sin;
  if (abs(u) < Scalar(1e-4)) {
    const Scalar u2 = u * u;
    return Scalar(1) - u2 / Scalar(6) + u2 * u2 / Scalar(120);
  }
  return sin(u) / u;
}

/// [sin(u)/u]^2 with u = pi s (x - center) / (lambda D).
template <typename Scalar>
Scalar single_slit_intensity(const SlitGeometry& g, Scalar x_m, Scalar center_m) {
  const Scalar u = std::numbers::pi_v<Scalar> * Scalar(g.slit_width_m) * (x_m - center_m) /
                   (Scalar(g.wavelength_m) * Scalar(g.screen_distance_m));
  const Scalar s = sinc(u);
  return s * s;
}

/// cos^2(pi x d / (lambda D)).
template <typename Scalar>
Scalar fringe_factor(const SlitGeometry& g, Scalar x_m) {
  using std::cos;
  const Scalar c = cos(std::numbers::pi_v<Scalar> * x_m * Scalar(g.slit_separation_m) /
                       (Scalar(g.wavelength_m) * Scalar(g.screen_distance_m)));
  return c * c;
}

/// [alpha^2 + beta^2 + 2 alpha beta cos(2 pi x d / lambda D)] / (alpha + beta)^2.
template <typename Scalar>
Scalar two_slit_interference_term(const SlitGeometry& g, Scalar x_m, Scalar alpha, Scalar beta) {
  using std::cos;
  const Scalar phase = Scalar(2) * std::numbers::pi_v<Scalar> * x_m * Scalar(g.slit_separation_m) /
                       (Scalar(g.wavelength_m) * Scalar(g.screen_distance_m));
  const Scalar sum = alpha + beta;
  return (alpha * alpha + beta * beta + Scalar(2) * alpha * beta * cos(phase)) / (sum * sum);
}

/// Slit-A envelope times the alpha/beta interference term. Throws DomainError
/// on negative weights or alpha = beta = 0.
double general_two_slit_intensity(const SlitGeometry& g, double x_m, double alpha, double beta);

/// Particle through A, empty wave through B: A-centered envelope times cos^2. Units of I0.
template <typename Scalar>
Scalar empty_wave_a(const SlitGeometry& g, Scalar x_m) {
  return single_slit_intensity(g, x_m, Scalar(g.slit_a_center_m())) * fringe_factor(g, x_m);
}

/// Mirror of empty_wave_a with the envelope on slit B.
template <typename Scalar>
Scalar empty_wave_b(const SlitGeometry& g, Scalar x_m) {
  return single_slit_intensity(g, x_m, Scalar(g.slit_b_center_m())) * fringe_factor(g, x_m);
}

/// Incoherent sum of the A and B patterns. Units of I0.
template <typename Scalar>
Scalar empty_wave_sum(const SlitGeometry& g, Scalar x_m) {
  return empty_wave_a(g, x_m) + empty_wave_b(g, x_m);
}

/// The textbook two-slit pattern, envelope centered at 0. Units of I'0.
template <typename Scalar>
Scalar standard_two_slit(const SlitGeometry& g, Scalar x_m) {
  return single_slit_intensity(g, x_m, Scalar(0)) * fringe_factor(g, x_m);
}

/// Standard-theory prediction when only slit A is illuminated: the bare envelope.
template <typename Scalar>
Scalar sqt_focused_a(const SlitGeometry& g, Scalar x_m) {
  return single_slit_intensity(g, x_m, Scalar(g.slit_a_center_m()));
}

struct ModelParameters {
  double alpha = 1.0;
  double beta = 1.0;
};

double evaluate_model(ModelKind m, const SlitGeometry& g, double x_m,
                      const ModelParameters& params = {});

/// 4001 points over the central envelope lobe plus its first zeros, centered
/// on slit A for A-centered models and on 0 otherwise.
GridSpec default_grid(ModelKind m, const SlitGeometry& g);

/// Grid of `points` samples spanning center +- 1.2 lambda D / s.
GridSpec central_lobe_grid(const SlitGeometry& g, double center_m, Eigen::Index points = 4001);

IntensityPattern sample_pattern(ModelKind m, const SlitGeometry& g, const GridSpec& grid,
                                Normalization norm = Normalization::PeakSingleSlit,
                                const ModelParameters& params = {});

}  // namespace wwsim
