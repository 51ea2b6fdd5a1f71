#include "core/centrality.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace duopoly {

CentralityProfile centrality(const Network& net, const ModelParams& params) {
  params.validate();
  const int n = net.size();
  const Eigen::MatrixXd discounted =
      params.delta * params.network_factor() * net.weights().transpose();
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - discounted;
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd v = system.partialPivLu().solve(ones);
  const double residual = (system * v - ones).lpNorm<Eigen::Infinity>();
  if (!(residual <= 1e-10)) {
    throw SolveError("centrality solve residual " + std::to_string(residual));
  }
  CentralityProfile profile{std::move(v), 0.0, 0.0};
  profile.v_bar = profile.v.mean();
  profile.v_max = profile.v.maxCoeff();
  return profile;
}

Eigen::VectorXd centrality_series(const Network& net, const ModelParams& params,
                                  double tol) {
  params.validate();
  if (!(tol > 0.0)) throw ValidationError("tol must be positive");
  const int n = net.size();
  // Row sums of W are (1-alpha)/(2*alpha) <= 1/2, so the k-th term of the
  // series is bounded by n * r^k with r = delta * (1-alpha)/(2*alpha) < 1/2.
  const double r = params.delta * params.network_factor();
  const Eigen::MatrixXd wt =
      params.network_factor() * net.weights().transpose();
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd term = Eigen::VectorXd::Ones(n);
  double tail = (r > 0.0) ? r * n / (1.0 - r) : 0.0;
  while (tail >= tol) {
    term = params.delta * (wt * term);
    v += term;
    tail *= r;
  }
  return v;
}

double balanced_centrality(const ModelParams& params) {
  params.validate();
  return 2.0 * params.alpha /
         (2.0 * params.alpha - params.delta * (1.0 - params.alpha));
}

StarCentralities star_centralities(int n, const ModelParams& params) {
  params.validate();
  if (n < 2) {
    throw SizeError("star centralities need n >= 2, got " + std::to_string(n));
  }
  const double r = params.delta * params.network_factor();
  const double denom = 1.0 - r * r;
  return StarCentralities{(1.0 + r * (n - 1)) / denom,
                          (1.0 + r / (n - 1)) / denom};
}

double centrality_sum_identity(const ModelParams& params, int n) {
  return 2.0 * params.alpha * n /
         (2.0 * params.alpha - params.delta * (1.0 - params.alpha));
}

}  // namespace duopoly
