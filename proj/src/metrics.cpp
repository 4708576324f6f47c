#include "wwsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

#include "wwsim/errors.hpp"

namespace wwsim {

namespace {

double contrast(double hi, double lo) {
  lo = std::max(lo, 0.0);
  if (hi + lo <= 0.0) return 0.0;
  return std::clamp((hi - lo) / (hi + lo), 0.0, 1.0);
}

struct Extremum {
  double x;
  double value;
};

// Vertex of the parabola through samples i-1, i, i+1.
Extremum refine(const IntensityPattern& p, Eigen::Index i) {
  const double ym = p.intensity(i - 1);
  const double y0 = p.intensity(i);
  const double yp = p.intensity(i + 1);
  const double denom = ym - 2.0 * y0 + yp;
  if (denom == 0.0) return {p.x_m(i), y0};
  const double offset = std::clamp(0.5 * (ym - yp) / denom, -1.0, 1.0);
  return {p.x_m(i) + offset * p.spacing(), y0 - 0.25 * (ym - yp) * offset};
}

}  // namespace

std::string_view to_string(WhichWayKind k) {
  switch (k) {
    case WhichWayKind::Predictability: return "P";
    case WhichWayKind::Knowledge: return "K";
    case WhichWayKind::Distinguishability: return "D";
  }
  return "?";
}

double visibility_global(const IntensityPattern& p) {
  if (p.size() == 0) throw DomainError("visibility of an empty pattern");
  return contrast(p.intensity.maxCoeff(), p.intensity.minCoeff());
}

double visibility_fringe_local(const IntensityPattern& p, const SlitGeometry& g) {
  if (p.size() < 3) throw DomainError("visibility of a pattern with fewer than 3 samples");
  const double period = fringe_period(g);
  const double dx = p.spacing();
  if (dx > period / 8.0) {
    std::ostringstream msg;
    msg << "grid under-resolves the fringes: spacing " << dx << " m, need <= " << period / 8.0
        << " m (8 samples per period)";
    throw DomainError(msg.str());
  }

  Eigen::Index peak = 0;
  p.intensity.maxCoeff(&peak);
  const Eigen::Index n = p.size();
  const auto reach = static_cast<Eigen::Index>(std::floor(1.5 * period / dx));
  const Eigen::Index lo = std::max<Eigen::Index>(1, peak - reach);
  const Eigen::Index hi = std::min<Eigen::Index>(n - 2, peak + reach);

  // Interior extrema in x order; +1 marks a maximum, -1 a minimum.
  std::vector<std::pair<Eigen::Index, int>> extrema;
  const auto& y = p.intensity;
  for (Eigen::Index i = lo; i <= hi; ++i) {
    if (y(i - 1) < y(i) && y(i) >= y(i + 1)) extrema.emplace_back(i, +1);
    else if (y(i - 1) > y(i) && y(i) <= y(i + 1)) extrema.emplace_back(i, -1);
  }

  // A fringe is a consecutive max/min pair roughly half a period apart.
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  auto rank = [peak](Eigen::Index imax, Eigen::Index imin) {
    return std::make_pair(std::abs(imax - peak), std::abs(imin - peak));
  };
  for (std::size_t k = 0; k + 1 < extrema.size(); ++k) {
    const auto [i0, t0] = extrema[k];
    const auto [i1, t1] = extrema[k + 1];
    if (t0 == t1) continue;
    const double separation = static_cast<double>(i1 - i0) * dx;
    if (separation < 0.25 * period || separation > 0.75 * period) continue;
    const Eigen::Index imax = t0 > 0 ? i0 : i1;
    const Eigen::Index imin = t0 > 0 ? i1 : i0;
    if (!best || rank(imax, imin) < rank(best->first, best->second)) best = {{imax, imin}};
  }

  if (!best) {
    const auto quarter = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(period / (4.0 * dx)));
    const Eigen::Index a = std::max<Eigen::Index>(0, peak - quarter);
    const Eigen::Index b = std::min<Eigen::Index>(n - 1, peak + quarter);
    const auto window = y.segment(a, b - a + 1);
    return contrast(window.maxCoeff(), window.minCoeff());
  }
  return contrast(refine(p, best->first).value, refine(p, best->second).value);
}

double predictability(double p_slit_a, double p_slit_b) {
  if (!(p_slit_a >= 0.0) || !(p_slit_b >= 0.0))
    throw DomainError("path probabilities must be nonnegative");
  if (std::abs(p_slit_a + p_slit_b - 1.0) > 1e-12)
    throw DomainError("path probabilities must sum to 1");
  return std::abs(p_slit_a - p_slit_b);
}

DualityReport duality_report(WhichWayKind kind, double which_way_value, double visibility) {
  if (!(which_way_value >= 0.0 && which_way_value <= 1.0))
    throw DomainError("which-way value must lie in [0, 1]");
  if (!(visibility >= 0.0 && visibility <= 1.0))
    throw DomainError("visibility must lie in [0, 1]");
  const double sum = which_way_value * which_way_value + visibility * visibility;
  return {kind, which_way_value, visibility, sum, sum <= 1.0 + kDualityEpsilon};
}

double spread_fraction(const IntensityPattern& p, double lo_m, double hi_m) {
  if (p.size() < 2) throw DomainError("spread of a pattern with fewer than 2 samples");
  if (lo_m > hi_m) throw DomainError("spread interval requires lo <= hi");
  if (lo_m < p.x_m(0) || hi_m > p.x_m(p.size() - 1))
    throw DomainError("spread interval lies outside the grid");
  const double total = trapezoid(p.intensity, p.spacing());
  if (!(total > 0.0)) throw DomainError("spread of a pattern with zero integral");
  return trapezoid_between(p, lo_m, hi_m) / total;
}

PatternDivergence pattern_divergence(const IntensityPattern& a, const IntensityPattern& b) {
  if (a.size() != b.size() || a.size() == 0) throw DomainError("pattern grids differ in size");
  const double span = std::abs(a.x_m(a.size() - 1) - a.x_m(0));
  if ((a.x_m - b.x_m).abs().maxCoeff() > 1e-12 * span)
    throw DomainError("pattern grids differ in coordinates");

  const Eigen::ArrayXd ua = a.in_single_slit_units();
  const Eigen::ArrayXd ub = b.in_single_slit_units();
  const Eigen::ArrayXd diff = ua - ub;
  const double peak = std::max(ua.abs().maxCoeff(), ub.abs().maxCoeff());
  const double norm = std::max(ua.matrix().norm(), ub.matrix().norm());

  PatternDivergence d{};
  d.l2_relative = norm > 0.0 ? diff.matrix().norm() / norm : 0.0;
  d.sup_relative = peak > 0.0 ? diff.abs().maxCoeff() / peak : 0.0;
  d.visibility_gap = std::abs(visibility_fringe_local(a, a.meta.geometry) -
                              visibility_fringe_local(b, b.meta.geometry));
  return d;
}

}  // namespace wwsim
