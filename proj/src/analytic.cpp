#include "wwsim/analytic.hpp"

#include <array>
#include <utility>

#include "wwsim/errors.hpp"

namespace wwsim {

namespace {

constexpr std::array<std::pair<ModelKind, std::string_view>, 8> kModelNames{{
    {ModelKind::SingleSlitA, "single_slit_a"},
    {ModelKind::EmptyWaveA, "empty_wave_a"},
    {ModelKind::EmptyWaveB, "empty_wave_b"},
    {ModelKind::EmptyWaveSum, "empty_wave_sum"},
    {ModelKind::StandardTwoSlit, "standard_two_slit"},
    {ModelKind::SqtFocusedA, "sqt_focused_a"},
    {ModelKind::PureFringe, "pure_fringe"},
    {ModelKind::GeneralAlphaBeta, "general_alpha_beta"},
}};

bool centered_on_slit_a(ModelKind m) {
  switch (m) {
    case ModelKind::SingleSlitA:
    case ModelKind::EmptyWaveA:
    case ModelKind::SqtFocusedA:
    case ModelKind::GeneralAlphaBeta:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string_view to_string(ModelKind m) {
  for (const auto& [kind, name] : kModelNames)
    if (kind == m) return name;
  return "unknown";
}

std::optional<ModelKind> model_from_string(std::string_view name) {
  for (const auto& [kind, n] : kModelNames)
    if (n == name) return kind;
  return std::nullopt;
}

double single_slit_units(ModelKind m) {
  switch (m) {
    case ModelKind::SingleSlitA:
    case ModelKind::SqtFocusedA:
      return 1.0;
    case ModelKind::EmptyWaveA:
    case ModelKind::EmptyWaveB:
    case ModelKind::EmptyWaveSum:
    case ModelKind::PureFringe:
    case ModelKind::GeneralAlphaBeta:
      return 2.0;
    case ModelKind::StandardTwoSlit:
      return 4.0;
  }
  return 1.0;
}

double general_two_slit_intensity(const SlitGeometry& g, double x_m, double alpha, double beta) {
  if (!(alpha >= 0.0) || !(beta >= 0.0)) throw DomainError("alpha and beta must be nonnegative");
  if (alpha == 0.0 && beta == 0.0) throw DomainError("alpha and beta cannot both be zero");
  return single_slit_intensity(g, x_m, g.slit_a_center_m()) *
         two_slit_interference_term(g, x_m, alpha, beta);
}

double evaluate_model(ModelKind m, const SlitGeometry& g, double x_m,
                      const ModelParameters& params) {
  switch (m) {
    case ModelKind::SingleSlitA: return single_slit_intensity(g, x_m, g.slit_a_center_m());
    case ModelKind::EmptyWaveA: return empty_wave_a(g, x_m);
    case ModelKind::EmptyWaveB: return empty_wave_b(g, x_m);
    case ModelKind::EmptyWaveSum: return empty_wave_sum(g, x_m);
    case ModelKind::StandardTwoSlit: return standard_two_slit(g, x_m);
    case ModelKind::SqtFocusedA: return sqt_focused_a(g, x_m);
    case ModelKind::PureFringe: return fringe_factor(g, x_m);
    case ModelKind::GeneralAlphaBeta:
      return general_two_slit_intensity(g, x_m, params.alpha, params.beta);
  }
  throw DomainError("unknown model");
}

GridSpec central_lobe_grid(const SlitGeometry& g, double center_m, Eigen::Index points) {
  const double half = 1.2 * g.wavelength_m * g.screen_distance_m / g.slit_width_m;
  return {center_m - half, center_m + half, points};
}

GridSpec default_grid(ModelKind m, const SlitGeometry& g) {
  return central_lobe_grid(g, centered_on_slit_a(m) ? g.slit_a_center_m()
                              : m == ModelKind::EmptyWaveB ? g.slit_b_center_m()
                                                          : 0.0);
}

IntensityPattern sample_pattern(ModelKind m, const SlitGeometry& g, const GridSpec& grid,
                                Normalization norm, const ModelParameters& params) {
  g.validate();
  IntensityPattern p;
  p.x_m = grid.coordinates();
  p.intensity = p.x_m.unaryExpr([&](double x) { return evaluate_model(m, g, x, params); });
  p.meta = {std::string(to_string(m)), g, single_slit_units(m)};
  if (norm == Normalization::UnitIntegral) normalize_unit_integral(p);
  return p;
}

}  // namespace wwsim
