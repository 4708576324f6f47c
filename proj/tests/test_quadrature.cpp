#include <doctest.h>

#include <cmath>
#include <complex>

#include "wwsim/errors.hpp"
#include "wwsim/quadrature.hpp"

using namespace wwsim;

TEST_CASE("Gauss-Legendre rules") {
  for (Eigen::Index n : {1, 2, 5, 8, 16, 33, 64, 128, 256}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule.size() == n);
    CHECK(rule.weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK((rule.weights > 0).all());
    for (Eigen::Index i = 0; i < n; ++i)
      CHECK(rule.nodes(i) == doctest::Approx(-rule.nodes(n - 1 - i)).epsilon(1e-13).scale(1e-15));
    // exact for x^(2n-2) (and odd powers vanish)
    const int k = static_cast<int>(2 * n - 2);
    const double exact = 2.0 / (k + 1);
    const double approx = (rule.weights * rule.nodes.pow(k)).sum();
    CHECK(approx == doctest::Approx(exact).epsilon(1e-13));
  }
  CHECK(gauss_legendre(3).nodes(2) == doctest::Approx(std::sqrt(3.0 / 5.0)).epsilon(1e-15));
  CHECK(gauss_legendre(3).weights(1) == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("oscillatory kernel is exact above the node threshold") {
  const double lambda = 632.8e-9;
  const double dist = 0.1;
  const double lo = -7.3e-6;
  const double hi = -5.3e-6;
  GaussLegendreCache cache;
  for (double x : {0.0, 1e-3, 0.01, 0.04, 0.1, 0.3}) {
    const double q = 2 * M_PI * x / (lambda * dist);
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> exact =
        q == 0.0 ? std::complex<double>(hi - lo, 0.0)
                 : (std::exp(-i * q * lo) - std::exp(-i * q * hi)) / (i * q);
    const auto n = static_cast<Eigen::Index>(std::ceil(10 + 4 * (hi - lo) * std::abs(x) / (lambda * dist)));
    const auto& rule = cache.rule(n);
    std::complex<double> sum = 0.0;
    const double half = (hi - lo) / 2;
    const double mid = (hi + lo) / 2;
    for (Eigen::Index k = 0; k < n; ++k)
      sum += rule.weights(k) * std::exp(-i * q * (mid + half * rule.nodes(k)));
    sum *= half;
    CHECK(std::abs(sum - exact) <= 1e-12 * std::abs(exact));
  }
}
