#include <doctest.h>

#include <cmath>
#include <random>

#include "wwsim/errors.hpp"
#include "wwsim/mzi.hpp"

using namespace wwsim;

namespace {
const double kHalf = 1.0 / std::sqrt(2.0);
}

TEST_CASE("output intensities") {
  CHECK(output_intensity(MziConfig::symmetric(MziMode::Open), 0.0) == doctest::Approx(1.0));
  CHECK(output_intensity(MziConfig::symmetric(MziMode::Open), M_PI) == doctest::Approx(0.0).scale(1.0));
  for (double phi : {0.0, 0.7, M_PI, 4.0}) {
    CHECK(output_intensity(MziConfig::symmetric(MziMode::BlockedB), phi) == doctest::Approx(0.5));
    CHECK(output_intensity(MziConfig::symmetric(MziMode::Marker), phi) == doctest::Approx(0.5));
  }
  const auto knockout = MziConfig::symmetric(MziMode::KnockoutB_EmptyWave);
  CHECK(detected_rate(knockout) == doctest::Approx(0.5));
  CHECK(output_intensity(knockout, M_PI) == doctest::Approx(0.0).scale(1.0));
  CHECK(output_intensity(knockout, 0.0) == doctest::Approx(0.5));
  CHECK(detected_rate(MziConfig::symmetric(MziMode::Open)) == doctest::Approx(1.0));
}

TEST_CASE("duality per mode") {
  const auto open = mzi_duality(MziConfig::symmetric(MziMode::Open));
  CHECK(open.which_way_value == doctest::Approx(0.0).scale(1.0));
  CHECK(open.visibility == doctest::Approx(1.0));
  CHECK(open.duality_sum == doctest::Approx(1.0));
  CHECK(open.inequality_satisfied);

  const auto blocked = mzi_duality(MziConfig::symmetric(MziMode::BlockedB));
  CHECK(blocked.which_way_value == doctest::Approx(1.0));
  CHECK(blocked.visibility == 0.0);
  CHECK(blocked.duality_sum == doctest::Approx(1.0));

  const auto marker = mzi_duality(MziConfig::symmetric(MziMode::Marker));
  CHECK(marker.which_way_kind == WhichWayKind::Distinguishability);
  CHECK(marker.which_way_value == 1.0);
  CHECK(marker.visibility == 0.0);

  const auto knockout = mzi_duality(MziConfig::symmetric(MziMode::KnockoutB_EmptyWave));
  CHECK(knockout.which_way_value == doctest::Approx(1.0));
  CHECK(knockout.visibility == doctest::Approx(1.0));
  CHECK(knockout.duality_sum == doctest::Approx(2.0));
  CHECK_FALSE(knockout.inequality_satisfied);

  for (auto mode : {MziMode::Open, MziMode::BlockedB, MziMode::Marker, MziMode::KnockoutB_EmptyWave})
    CHECK(swept_visibility(MziConfig::symmetric(mode)) ==
          doctest::Approx(mzi_duality(MziConfig::symmetric(mode)).visibility).epsilon(1e-9).scale(1.0));
}

TEST_CASE("asymmetric splitting") {
  const auto even = asymmetric_duality(kHalf, kHalf);
  CHECK(even.which_way_value == doctest::Approx(0.0).scale(1.0));
  CHECK(even.visibility == doctest::Approx(1.0));
  const auto one = asymmetric_duality(1.0, 0.0);
  CHECK(one.which_way_value == 1.0);
  CHECK(one.visibility == 0.0);
  const auto lop = asymmetric_duality(std::sqrt(0.9), std::sqrt(0.1));
  CHECK(lop.which_way_value == doctest::Approx(0.8));
  CHECK(lop.visibility == doctest::Approx(0.6));
  CHECK(lop.duality_sum == doctest::Approx(1.0));
  CHECK_THROWS_AS(asymmetric_duality(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(asymmetric_duality(-0.1, 0.5), DomainError);
}

TEST_CASE("properties over random amplitudes") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double r = std::sqrt(u(rng));
    const double t = u(rng) * M_PI / 2;
    const double a = r * std::cos(t);
    const double b = r * std::sin(t);
    if (a * a + b * b == 0.0) continue;
    CHECK(std::abs(asymmetric_duality(a, b).duality_sum - 1.0) <= 1e-12);

    const double phi = 2 * M_PI * u(rng);
    const auto ports = open_ports(a, b, phi);
    CHECK(ports.constructive + ports.destructive == doctest::Approx(a * a + b * b).epsilon(1e-12));

    MziConfig open{a, b, 0.0, MziMode::Open};
    MziConfig knock{a, b, 0.0, MziMode::KnockoutB_EmptyWave};
    CHECK(mzi_duality(knock).visibility == mzi_duality(open).visibility);

    MziConfig blocked{a, b, 0.0, MziMode::BlockedB};
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < kMziPhaseSamples; ++k) {
      const double y = output_intensity(blocked, 2 * M_PI * k / kMziPhaseSamples);
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
    CHECK(hi - lo == 0.0);
  }
}

TEST_CASE("config validation and names") {
  CHECK_THROWS_AS((MziConfig{0.9, 0.9}.validate()), DomainError);
  CHECK_THROWS_AS((MziConfig{-0.1, 0.5}.validate()), DomainError);
  CHECK_NOTHROW(MziConfig::symmetric(MziMode::Open).validate());
  CHECK(mzi_mode_from_string("knockout") == MziMode::KnockoutB_EmptyWave);
  CHECK(mzi_mode_from_string("blocked") == MziMode::BlockedB);
  CHECK_FALSE(mzi_mode_from_string("nope").has_value());
  CHECK(to_string(MziMode::Marker) == "marker");
}
