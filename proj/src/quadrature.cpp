#include "wwsim/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "wwsim/errors.hpp"

namespace wwsim {

GaussLegendreRule gauss_legendre(Eigen::Index n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be positive");
  GaussLegendreRule rule;
  if (n == 1) {
    rule.nodes = Eigen::ArrayXd::Zero(1);
    rule.weights = Eigen::ArrayXd::Constant(1, 2.0);
    return rule;
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (Eigen::Index k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    sub(k - 1) = kk / std::sqrt(4.0 * kk * kk - 1.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  rule.nodes = solver.eigenvalues().array();
  rule.weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();

  // Polish nodes with Newton steps on P_n and rebuild weights from P_n'.
  for (Eigen::Index i = 0; i < n; ++i) {
    double x = rule.nodes(i);
    double dp = 1.0;
    for (int iter = 0; iter < 3; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (Eigen::Index k = 2; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      x -= p1 / dp;
    }
    rule.nodes(i) = x;
    rule.weights(i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendreRule& GaussLegendreCache::rule(Eigen::Index n) {
  auto it = rules_.find(n);
  if (it == rules_.end()) it = rules_.emplace(n, gauss_legendre(n)).first;
  return it->second;
}

}  // namespace wwsim
