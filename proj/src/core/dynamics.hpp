#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/network.hpp"
#include "core/params.hpp"

namespace duopoly {

// Linear update operator of the myopic best-response dynamics,
// y(t+1) = weight * y(t) + drift, with weight = ((1-alpha)/(2*alpha)) G and
// drift = ((1-alpha)(qa-qb)/(4*alpha*(qa+qb))) * ones.
struct DynamicsOperator {
  Eigen::MatrixXd weight;
  Eigen::VectorXd drift;
};

// Centered consumption profile at one time step: x_i = 1/2 + y_i.
struct ConsumptionState {
  Eigen::VectorXd y;
  int t = 0;
};

DynamicsOperator build_operator(const Network& net, const ModelParams& params);

// One synchronous best-response update. Throws BoundsError if any output
// component exceeds 1/2 in magnitude beyond 1e-9, which can only happen when
// the operator violates the alpha >= 1/2 assumption.
Eigen::VectorXd step(const DynamicsOperator& op, const Eigen::VectorXd& y);

// States for t = 0..horizon by repeated stepping. y0 must be within
// [-1/2, 1/2] componentwise.
std::vector<ConsumptionState> trajectory(const DynamicsOperator& op,
                                         const Eigen::VectorXd& y0,
                                         int horizon);

// Fixed point (I - W)^-1 drift of the update; the limit of every trajectory.
Eigen::VectorXd steady_state(const DynamicsOperator& op);

// Throws BoundsError unless |y_i| <= 1/2 + tol for all i.
void check_state_bounds(const Eigen::VectorXd& y, double tol = 1e-9);

}  // namespace duopoly
