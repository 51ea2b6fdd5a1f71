#include "core/network.hpp"

#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace duopoly {

Network Network::from_weights(Eigen::MatrixXd weights) {
  const auto rows = weights.rows();
  const auto cols = weights.cols();
  if (rows != cols || rows < 1) {
    throw SizeError("weight matrix must be square with n >= 1, got " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
  const int n = static_cast<int>(rows);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double w = weights(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw NegativeWeightError("weight (" + std::to_string(i + 1) + "," +
                                  std::to_string(j + 1) +
                                  ") must be finite and nonnegative");
      }
      sum += w;
    }
    if (weights(i, i) != 0.0) {
      throw DiagonalError("agent " + std::to_string(i + 1) +
                          " has a nonzero self-loop");
    }
    if (std::abs(sum - 1.0) > kRowSumTol) {
      throw RowSumError("row " + std::to_string(i + 1) + " sums to " +
                        std::to_string(sum) + ", expected 1");
    }
  }
  return Network(std::move(weights));
}

Network Network::star(int n) {
  if (n < 2) {
    throw SizeError("star graph needs n >= 2, got " + std::to_string(n));
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  const double leaf_weight = 1.0 / static_cast<double>(n - 1);
  for (int j = 1; j < n; ++j) {
    w(0, j) = leaf_weight;
    w(j, 0) = 1.0;
  }
  return Network(std::move(w));
}

Network Network::balanced_ring(int n, int d) {
  if (n < 2 || d < 1 || d > n - 1) {
    throw SizeError("balanced ring needs n >= 2 and 1 <= d <= n-1, got n=" +
                    std::to_string(n) + " d=" + std::to_string(d));
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  const double share = 1.0 / static_cast<double>(d);
  for (int i = 0; i < n; ++i) {
    for (int step = 1; step <= d; ++step) {
      w(i, (i + step) % n) = share;
    }
  }
  return Network(std::move(w));
}

Network Network::k_star(int n, int k) {
  if (k < 1 || k + 1 > n) {
    throw SizeError("k-star needs k >= 1 and at least one leaf, got n=" +
                    std::to_string(n) + " k=" + std::to_string(k));
  }
  if (k == 1) return star(n);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  const double center_share = 1.0 / static_cast<double>(k - 1);
  const double leaf_share = 1.0 / static_cast<double>(k);
  for (int c = 0; c < k; ++c) {
    for (int c2 = 0; c2 < k; ++c2) {
      if (c2 != c) w(c, c2) = center_share;
    }
  }
  for (int l = k; l < n; ++l) {
    for (int c = 0; c < k; ++c) {
      w(l, c) = leaf_share;
    }
  }
  return Network(std::move(w));
}

Eigen::MatrixXd normalize_rows(Eigen::MatrixXd weights) {
  for (Eigen::Index i = 0; i < weights.rows(); ++i) {
    const double sum = weights.row(i).sum();
    if (!std::isfinite(sum) || sum <= 0.0) {
      throw RowSumError("row " + std::to_string(i + 1) +
                        " cannot be normalized, sum is " +
                        std::to_string(sum));
    }
    weights.row(i) /= sum;
  }
  return weights;
}

}  // namespace duopoly
