#include <doctest.h>

#include <cmath>

#include "wwsim/analytic.hpp"
#include "wwsim/errors.hpp"
#include "wwsim/metrics.hpp"

using namespace wwsim;

namespace {

const SlitGeometry kHeNe{632.8e-9, 2e-6, 12.6e-6, 0.1};

IntensityPattern make_pattern(Eigen::ArrayXd x, Eigen::ArrayXd y) {
  IntensityPattern p;
  p.x_m = std::move(x);
  p.intensity = std::move(y);
  return p;
}

}  // namespace

TEST_CASE("visibility of the closed forms") {
  const auto& g = kHeNe;
  const GridSpec grid = default_grid(ModelKind::StandardTwoSlit, g);
  CHECK(visibility_fringe_local(sample_pattern(ModelKind::StandardTwoSlit, g, grid), g) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(visibility_fringe_local(sample_pattern(ModelKind::PureFringe, g, grid), g) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(visibility_fringe_local(sample_pattern(ModelKind::GeneralAlphaBeta, g,
                                               default_grid(ModelKind::GeneralAlphaBeta, g),
                                               Normalization::PeakSingleSlit, {1.0, 0.5}),
                                g) == doctest::Approx(0.8).epsilon(1e-2));

  const GridSpec a_grid = default_grid(ModelKind::EmptyWaveA, g);
  CHECK(visibility_fringe_local(sample_pattern(ModelKind::EmptyWaveA, g, a_grid), g) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(visibility_fringe_local(sample_pattern(ModelKind::SqtFocusedA, g, a_grid), g) <= 0.01);
  CHECK(visibility_fringe_local(sample_pattern(ModelKind::SingleSlitA, g, a_grid), g) <= 0.01);
}

TEST_CASE("visibility tracks the amplitude ratio") {
  // Near-point slits keep the envelope flat over the fringes examined.
  const SlitGeometry g{632.8e-9, 1e-9, 12.6e-6, 0.1};
  const GridSpec grid{-2 * fringe_period(g), 2 * fringe_period(g), 2001};
  for (double alpha = 0.25; alpha <= 1.0 + 1e-12; alpha += 0.25) {
    for (double beta = 0.25; beta <= 1.0 + 1e-12; beta += 0.25) {
      const auto p = sample_pattern(ModelKind::GeneralAlphaBeta, g, grid, Normalization::PeakSingleSlit,
                                    {alpha, beta});
      const double expected = 2 * alpha * beta / (alpha * alpha + beta * beta);
      CHECK(visibility_fringe_local(p, g) == doctest::Approx(expected).epsilon(1e-4));
      CHECK(visibility_global(p) == doctest::Approx(expected).epsilon(1e-4));
    }
  }
}

TEST_CASE("visibility input checks") {
  const auto& g = kHeNe;
  CHECK_THROWS_AS(visibility_global(IntensityPattern{}), DomainError);
  // 3 samples per fringe period
  const GridSpec coarse{-5 * fringe_period(g), 5 * fringe_period(g), 31};
  CHECK_THROWS_AS(visibility_fringe_local(sample_pattern(ModelKind::StandardTwoSlit, g, coarse), g),
                  DomainError);
  const auto flat = make_pattern(Eigen::ArrayXd::LinSpaced(5, 0, 1), Eigen::ArrayXd::Constant(5, 3.0));
  CHECK(visibility_global(flat) == 0.0);
}

TEST_CASE("predictability and duality") {
  CHECK(predictability(0.5, 0.5) == 0.0);
  CHECK(predictability(1.0, 0.0) == 1.0);
  CHECK(predictability(0.2, 0.8) == doctest::Approx(0.6));
  CHECK_THROWS_AS(predictability(0.6, 0.6), DomainError);
  CHECK_THROWS_AS(predictability(-0.1, 1.1), DomainError);

  const auto ok = duality_report(WhichWayKind::Predictability, 0.6, 0.8);
  CHECK(ok.duality_sum == doctest::Approx(1.0));
  CHECK(ok.inequality_satisfied);
  const auto bad = duality_report(WhichWayKind::Predictability, 1.0, 1.0);
  CHECK(bad.duality_sum == 2.0);
  CHECK_FALSE(bad.inequality_satisfied);
  CHECK_THROWS_AS(duality_report(WhichWayKind::Knowledge, 1.5, 0.0), DomainError);
  CHECK_THROWS_AS(duality_report(WhichWayKind::Knowledge, 0.5, -0.1), DomainError);
  CHECK(to_string(WhichWayKind::Distinguishability) == "D");
}

TEST_CASE("spread of the central lobe") {
  const auto& g = kHeNe;
  const double lobe = g.wavelength_m * g.screen_distance_m / g.slit_width_m;
  const GridSpec wide{-20 * lobe, 20 * lobe, 40001};
  const auto p = sample_pattern(ModelKind::StandardTwoSlit, g, wide);
  const double central = spread_fraction(p, -lobe, lobe);
  CHECK(central >= 0.90);
  double previous = 0.0;
  for (int k = 1; k <= 10; ++k) {
    const double f = spread_fraction(p, -k * lobe / 5, k * lobe / 5);
    CHECK(f >= previous);
    previous = f;
  }
  CHECK(spread_fraction(p, wide.min_m, wide.max_m) == doctest::Approx(1.0));
  CHECK_THROWS_AS(spread_fraction(p, lobe, -lobe), DomainError);
  CHECK_THROWS_AS(spread_fraction(p, -40 * lobe, lobe), DomainError);
}

TEST_CASE("pattern divergence") {
  const auto& g = kHeNe;
  const GridSpec a_grid = default_grid(ModelKind::EmptyWaveA, g);
  const auto wa = sample_pattern(ModelKind::EmptyWaveA, g, a_grid);
  const auto sqt = sample_pattern(ModelKind::SqtFocusedA, g, a_grid);
  const auto d = pattern_divergence(wa, sqt);
  CHECK(d.visibility_gap == doctest::Approx(1.0).epsilon(0.01));
  CHECK(d.sup_relative > 0.1);

  const auto self = pattern_divergence(wa, wa);
  CHECK(self.l2_relative == 0.0);
  CHECK(self.sup_relative == 0.0);
  CHECK(self.visibility_gap == 0.0);

  // normalization does not matter once both are in single-slit units
  const GridSpec grid = default_grid(ModelKind::StandardTwoSlit, g);
  const auto peak = sample_pattern(ModelKind::StandardTwoSlit, g, grid);
  const auto unit = sample_pattern(ModelKind::StandardTwoSlit, g, grid, Normalization::UnitIntegral);
  CHECK(pattern_divergence(peak, unit).sup_relative <= 1e-12);

  CHECK_THROWS_AS(pattern_divergence(wa, peak), DomainError);
}
