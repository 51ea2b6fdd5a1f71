#pragma once

#include <Eigen/Dense>

#include "core/network.hpp"
#include "core/params.hpp"

namespace duopoly {

struct CentralityProfile {
  Eigen::VectorXd v;
  double v_bar = 0.0;
  double v_max = 0.0;
};

// Discounted walk centrality v = (I - delta W^T)^-1 * ones, solved directly.
// Throws SolveError if the residual exceeds 1e-10 (unreachable for valid
// inputs: the spectral radius of delta W^T is at most delta/2).
CentralityProfile centrality(const Network& net, const ModelParams& params);

// Independent cross-check: truncated series sum_k (delta W^T)^k * ones,
// stopped once the geometric tail bound drops below tol.
Eigen::VectorXd centrality_series(const Network& net, const ModelParams& params,
                                  double tol);

// Common centrality of every agent in a balanced graph,
// 2*alpha / (2*alpha - delta*(1-alpha)).
double balanced_centrality(const ModelParams& params);

struct StarCentralities {
  double hub = 0.0;
  double leaf = 0.0;
};

// Closed-form hub and leaf centralities of star(n). The hub value is also
// the maximum centrality attainable by any n-agent graph.
StarCentralities star_centralities(int n, const ModelParams& params);

// sum_i v_i = 2*alpha*n / (2*alpha - delta*(1-alpha)), independent of the
// graph.
double centrality_sum_identity(const ModelParams& params, int n);

}  // namespace duopoly
