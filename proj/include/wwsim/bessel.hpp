#pragma once

#include <cmath>
#include <numbers>

#include "wwsim/errors.hpp"

namespace wwsim {

namespace detail {

// Ascending-power rational p(y)/q(y).
template <typename T, std::size_t N, std::size_t M>
T evaluate_rational(const T (&p)[N], const T (&q)[M], T y) {
  T num = p[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) num = num * y + p[i];
  T den = q[M - 1];
  for (std::size_t i = M - 1; i-- > 0;) den = den * y + q[i];
  return num / den;
}

}  // namespace detail

/// Bessel function of the first kind, order zero.
///
/// |x| <= 8: minimax rationals factored through the first two zeros;
/// |x| > 8: Hankel asymptotic form with rational P, Q (Hart, Computer
/// Approximations, 1968). Absolute error well below 1e-12 in double.
template <typename T>
T bessel_j0(T x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j0: non-finite argument");

  static constexpr T P1[] = {T(-4.1298668500990866786e+11L), T(2.7282507878605942706e+10L),
                             T(-6.2140700423540120665e+08L), T(6.6302997904833794242e+06L),
                             T(-3.6629814655107086448e+04L), T(1.0344222815443188943e+02L),
                             T(-1.2117036164593528341e-01L)};
  static constexpr T Q1[] = {T(2.3883787996332290397e+12L), T(2.6328198300859648632e+10L),
                             T(1.3985097372263433271e+08L), T(4.5612696224219938200e+05L),
                             T(9.3614022392337710626e+02L), T(1.0L),
                             T(0.0L)};
  static constexpr T P2[] = {T(-1.8319397969392084011e+03L), T(-1.2254078161378989535e+04L),
                             T(-7.2879702464464618998e+03L), T(1.0341910641583726701e+04L),
                             T(1.1725046279757103576e+04L),  T(4.4176707025325087628e+03L),
                             T(7.4321196680624245801e+02L),  T(4.8591703355916499363e+01L)};
  static constexpr T Q2[] = {T(-3.5783478026152301072e+05L), T(2.4599102262586308984e+05L),
                             T(-8.4055062591169562211e+04L), T(1.8680990008359188352e+04L),
                             T(-2.9458766545509337327e+03L), T(3.3307310774649071172e+02L),
                             T(-2.5258076240801555057e+01L), T(1.0L)};
  static constexpr T PC[] = {T(2.2779090197304684302e+04L), T(4.1345386639580765797e+04L),
                             T(2.1170523380864944322e+04L), T(3.4806486443249270347e+03L),
                             T(1.5376201909008354296e+02L), T(8.8961548424210455236e-01L)};
  static constexpr T QC[] = {T(2.2779090197304684318e+04L), T(4.1370412495510416640e+04L),
                             T(2.1215350561880115730e+04L), T(3.5028735138235608207e+03L),
                             T(1.5711159858080893649e+02L), T(1.0L)};
  static constexpr T PS[] = {T(-8.9226600200800094098e+01L), T(-1.8591953644342993800e+02L),
                             T(-1.1183429920482737611e+02L), T(-2.2300261666214198472e+01L),
                             T(-1.2441026745835638459e+00L), T(-8.8033303048680751817e-03L)};
  static constexpr T QS[] = {T(5.7105024128512061905e+03L), T(1.1951131543434613647e+04L),
                             T(7.2642780169211018836e+03L), T(1.4887231232283756582e+03L),
                             T(9.0593769594993125859e+01L), T(1.0L)};
  // Zeros split as x1 = x11/256 + x12 so the factor (x - x1) keeps full precision.
  constexpr T x1 = T(2.4048255576957727686e+00L);
  constexpr T x2 = T(5.5200781102863106496e+00L);
  constexpr T x11 = T(6.160e+02L);
  constexpr T x12 = T(-1.42444230422723137837e-03L);
  constexpr T x21 = T(1.4130e+03L);
  constexpr T x22 = T(5.46860286310649596604e-04L);

  using std::abs;
  x = abs(x);
  if (x == T(0)) return T(1);
  if (x <= T(4)) {
    const T r = detail::evaluate_rational(P1, Q1, x * x);
    return (x + x1) * ((x - x11 / 256) - x12) * r;
  }
  if (x <= T(8)) {
    const T r = detail::evaluate_rational(P2, Q2, T(1) - x * x / 64);
    return (x + x2) * ((x - x21 / 256) - x22) * r;
  }
  const T y = T(8) / x;
  const T y2 = y * y;
  const T z = x - std::numbers::pi_v<T> / 4;
  const T rc = detail::evaluate_rational(PC, QC, y2);
  const T rs = detail::evaluate_rational(PS, QS, y2);
  using std::cos;
  using std::sin;
  using std::sqrt;
  return sqrt(T(2) / (x * std::numbers::pi_v<T>)) * (rc * cos(z) - y * rs * sin(z));
}

/// First positive zero of J0.
inline constexpr double kBesselJ0FirstZero = 2.4048255576957727686;

}  // namespace wwsim
