#pragma once

#include <Eigen/Core>
#include <map>

namespace wwsim {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;

  Eigen::Index size() const { return nodes.size(); }
};

/// Golub-Welsch: eigen-decomposition of the Jacobi matrix of the Legendre recurrence.
GaussLegendreRule gauss_legendre(Eigen::Index n);

/// Memoizes rules by order. Not thread-safe; give each worker its own cache.
class GaussLegendreCache {
 public:
  const GaussLegendreRule& rule(Eigen::Index n);

 private:
  std::map<Eigen::Index, GaussLegendreRule> rules_;
};

}  // namespace wwsim
