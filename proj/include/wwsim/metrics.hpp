#pragma once

#include <string_view>

#include "wwsim/geometry.hpp"
#include "wwsim/pattern.hpp"

namespace wwsim {

enum class WhichWayKind { Predictability, Knowledge, Distinguishability };

std::string_view to_string(WhichWayKind k);

/// Which-way metric and visibility with their squared sum.
struct DualityReport {
  WhichWayKind which_way_kind;
  double which_way_value;
  double visibility;
  double duality_sum;  // which_way_value^2 + visibility^2
  bool inequality_satisfied;
};

inline constexpr double kDualityEpsilon = 1e-9;

/// (max - min) / (max + min) over every sample. Throws DomainError if empty.
double visibility_global(const IntensityPattern& p);

/// Contrast of the adjacent local max/min pair nearest the global peak.
///
/// Extrema are searched within +-1.5 fringe periods of the peak and refined by
/// parabolic interpolation; only consecutive max/min pairs between 1/4 and 3/4
/// of a fringe period apart count as fringes. Without such a pair the pattern
/// has no fringes and the result is the contrast of max/min within +-1/4
/// fringe period of the peak. Throws DomainError when the grid has fewer
/// than 8 samples per fringe period.
double visibility_fringe_local(const IntensityPattern& p, const SlitGeometry& g);

/// |p_a - p_b|. Throws DomainError unless both are nonnegative and sum to 1.
double predictability(double p_slit_a, double p_slit_b);

/// Throws DomainError unless both values lie in [0, 1].
DualityReport duality_report(WhichWayKind kind, double which_way_value, double visibility);

/// Fraction of the pattern's integral that falls within [lo, hi].
double spread_fraction(const IntensityPattern& p, double lo_m, double hi_m);

struct PatternDivergence {
  double l2_relative;
  double sup_relative;
  double visibility_gap;
};

/// Compares two patterns on an identical grid after converting both to I0,single units.
PatternDivergence pattern_divergence(const IntensityPattern& a, const IntensityPattern& b);

}  // namespace wwsim
