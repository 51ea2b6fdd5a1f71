#pragma once

namespace duopoly {

// Model parameters shared by every computation: the isolation weight alpha,
// the discount factor delta, the preset product qualities, unit costs of
// seeding and quality improvement, and the per-firm budgets.
struct ModelParams {
  double alpha = 0.5;     // weight on the isolation payoff, in [1/2, 1]
  double delta = 0.0;     // discount factor, in [0, 1)
  double qa = 1.0;        // quality of product a, > 0
  double qb = 1.0;        // quality of product b, > 0
  double cs = 1.0;        // cost per unit of seeding, > 0
  double cq = 1.0;        // cost per unit of quality improvement, > 0
  double budget_a = 0.0;  // firm a budget, >= 0
  double budget_b = 0.0;  // firm b budget, >= 0

  // Throws ValidationError on the first violated constraint.
  void validate() const;

  // (1-alpha)/(2*alpha), the common row sum of the update operator W.
  double network_factor() const { return (1.0 - alpha) / (2.0 * alpha); }
};

}  // namespace duopoly
