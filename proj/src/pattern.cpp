#include "wwsim/pattern.hpp"

#include <algorithm>
#include <cmath>

#include "wwsim/errors.hpp"

namespace wwsim {

std::string_view to_string(Normalization n) {
  switch (n) {
    case Normalization::PeakSingleSlit: return "peak_single_slit";
    case Normalization::UnitIntegral: return "unit_integral";
  }
  return "unknown";
}

void GridSpec::validate() const {
  if (!std::isfinite(min_m) || !std::isfinite(max_m) || !(min_m < max_m))
    throw DomainError("grid requires min < max");
  if (points < 2) throw DomainError("grid requires at least 2 points");
}

Eigen::ArrayXd GridSpec::coordinates() const {
  validate();
  return Eigen::ArrayXd::LinSpaced(points, min_m, max_m);
}

double trapezoid(const Eigen::ArrayXd& y, double dx) {
  const Eigen::Index n = y.size();
  if (n < 2) return 0.0;
  return dx * (y.segment(1, n - 2).sum() + 0.5 * (y(0) + y(n - 1)));
}

double trapezoid_between(const IntensityPattern& p, double lo_m, double hi_m) {
  const Eigen::Index n = p.size();
  if (n < 2 || hi_m <= lo_m) return 0.0;
  const double x0 = p.x_m(0);
  const double dx = p.spacing();
  auto value_at = [&](double x) {
    const double t = (x - x0) / dx;
    const auto i = std::clamp<Eigen::Index>(static_cast<Eigen::Index>(std::floor(t)), 0, n - 2);
    const double f = t - static_cast<double>(i);
    return (1.0 - f) * p.intensity(i) + f * p.intensity(i + 1);
  };
  // Nodes strictly inside (lo, hi).
  const auto first = std::clamp<Eigen::Index>(
      static_cast<Eigen::Index>(std::floor((lo_m - x0) / dx)) + 1, 0, n);
  const auto last = std::clamp<Eigen::Index>(
      static_cast<Eigen::Index>(std::ceil((hi_m - x0) / dx)) - 1, -1, n - 1);
  if (first > last) return 0.5 * (value_at(lo_m) + value_at(hi_m)) * (hi_m - lo_m);

  double total = 0.5 * (value_at(lo_m) + p.intensity(first)) * (p.x_m(first) - lo_m);
  for (Eigen::Index i = first; i < last; ++i)
    total += 0.5 * (p.intensity(i) + p.intensity(i + 1)) * dx;
  total += 0.5 * (p.intensity(last) + value_at(hi_m)) * (hi_m - p.x_m(last));
  return total;
}

void normalize_unit_integral(IntensityPattern& p) {
  const double area = trapezoid(p.intensity, p.spacing());
  if (!(area > 0.0)) throw DomainError("cannot normalize a pattern with zero integral");
  p.intensity /= area;
  p.meta.scale_to_single_slit *= area;
  p.normalization = Normalization::UnitIntegral;
}

void normalize_peak(IntensityPattern& p) {
  const double peak = p.intensity.maxCoeff();
  if (!(peak > 0.0)) throw DomainError("cannot normalize an all-zero pattern");
  p.intensity /= peak;
  p.meta.scale_to_single_slit *= peak;
}

}  // namespace wwsim
