#pragma once

#include <Eigen/Dense>

namespace duopoly {

// Immutable influence network: a row-stochastic weight matrix with zero
// diagonal. weights()(i, j) is the influence of agent j on agent i.
// Agents are 0-based internally; file formats and CLI output are 1-based.
class Network {
 public:
  // Row-stochastic tolerance, absolute per row.
  static constexpr double kRowSumTol = 1e-12;

  // Validates and wraps a weight matrix. Throws SizeError, RowSumError,
  // DiagonalError or NegativeWeightError.
  static Network from_weights(Eigen::MatrixXd weights);

  // Star graph: agent 0 is the center with weight 1/(n-1) to each leaf;
  // every leaf puts weight 1 on the center. Requires n >= 2.
  static Network star(int n);

  // Circulant ring where each agent spreads weight 1/d over its next d
  // ring neighbors. Doubly stochastic. Requires n >= 2 and 1 <= d <= n-1.
  static Network balanced_ring(int n, int d);

  // k central agents with equal centrality and n-k leaves of centrality 1:
  // each leaf spreads weight 1/k over the centers; each center spreads
  // weight 1/(k-1) over the other centers so that no weight reaches the
  // leaves. k = 1 degenerates to star(n). Requires k >= 1 and k + 1 <= n.
  static Network k_star(int n, int k);

  int size() const { return static_cast<int>(weights_.rows()); }
  const Eigen::MatrixXd& weights() const { return weights_; }

 private:
  explicit Network(Eigen::MatrixXd weights) : weights_(std::move(weights)) {}

  Eigen::MatrixXd weights_;
};

// Rescales every row to sum to 1. Throws RowSumError on a nonpositive or
// non-finite row sum. Used by file loading when normalization is requested;
// never applied silently.
Eigen::MatrixXd normalize_rows(Eigen::MatrixXd weights);

}  // namespace duopoly
