#include "core/dynamics.hpp"

#include <string>

#include "core/errors.hpp"

namespace duopoly {

void check_state_bounds(const Eigen::VectorXd& y, double tol) {
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (!(std::abs(y(i)) <= 0.5 + tol)) {
      throw BoundsError("consumption state component " + std::to_string(i + 1) +
                        " = " + std::to_string(y(i)) +
                        " leaves [-1/2, 1/2]");
    }
  }
}

DynamicsOperator build_operator(const Network& net, const ModelParams& params) {
  params.validate();
  const int n = net.size();
  const double factor = params.network_factor();
  const double shift = (1.0 - params.alpha) * (params.qa - params.qb) /
                       (4.0 * params.alpha * (params.qa + params.qb));
  return DynamicsOperator{factor * net.weights(),
                          Eigen::VectorXd::Constant(n, shift)};
}

Eigen::VectorXd step(const DynamicsOperator& op, const Eigen::VectorXd& y) {
  if (y.size() != op.weight.rows()) {
    throw ValidationError("state size " + std::to_string(y.size()) +
                          " does not match operator size " +
                          std::to_string(op.weight.rows()));
  }
  Eigen::VectorXd next = op.weight * y + op.drift;
  check_state_bounds(next);
  return next;
}

std::vector<ConsumptionState> trajectory(const DynamicsOperator& op,
                                         const Eigen::VectorXd& y0,
                                         int horizon) {
  if (horizon < 0) throw ValidationError("horizon must be nonnegative");
  check_state_bounds(y0);
  std::vector<ConsumptionState> states;
  states.reserve(static_cast<std::size_t>(horizon) + 1);
  states.push_back({y0, 0});
  for (int t = 1; t <= horizon; ++t) {
    states.push_back({step(op, states.back().y), t});
  }
  return states;
}

Eigen::VectorXd steady_state(const DynamicsOperator& op) {
  const Eigen::Index n = op.weight.rows();
  const Eigen::MatrixXd system =
      Eigen::MatrixXd::Identity(n, n) - op.weight;
  Eigen::VectorXd fixed = system.partialPivLu().solve(op.drift);
  const double residual =
      (op.weight * fixed + op.drift - fixed).lpNorm<Eigen::Infinity>();
  if (!(residual <= 1e-10)) {
    throw SolveError("steady state residual " + std::to_string(residual));
  }
  return fixed;
}

}  // namespace duopoly
