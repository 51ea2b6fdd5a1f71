#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "core/network.hpp"
#include "core/params.hpp"

namespace duopoly {

enum class Firm { a, b };

enum class Regime { none_seedable, all_seedable, graph_dependent };

struct Thresholds {
  double firm_a = 0.0;
  double firm_b = 0.0;
};

// Budget split of one firm: per-agent seeding amounts plus the quality
// increment funded by the remainder. spend_seeding + spend_quality equals
// the firm budget exactly whenever the budget is positive.
struct Allocation {
  Eigen::VectorXd seeds;
  double dq = 0.0;
  double spend_seeding = 0.0;
  double spend_quality = 0.0;
};

// Total seedable amount when the budget is unlimited, together with the
// agents whose centrality clears the threshold (0-based, ascending).
struct SeedingCapacityReport {
  double capacity = 0.0;
  std::vector<int> seeded_agents;
};

struct Equilibrium {
  Allocation firm_a;
  Allocation firm_b;
  Eigen::VectorXd joint_y0;  // y0 + S_a - S_b, clamped to [-1/2, 1/2]
  int clamped = 0;           // components that needed clamping
};

struct SeedCount {
  int k = 0;
  Regime regime = Regime::graph_dependent;
};

// Discounted network-effect coefficient
// lambda = delta (1-alpha) n / (2 (1-delta) (2 alpha - delta (1-alpha))).
double lambda_coefficient(const ModelParams& params, int n);

// Closed-form firm utilities from the initial state:
// U_a = n/(2(1-delta)) + v^T y0 + lambda (qa-qb)/(qa+qb), U_b the
// complement of the fixed sum n/(1-delta).
std::pair<double, double> firm_utilities(const Network& net,
                                         const ModelParams& params,
                                         const Eigen::VectorXd& y0);

// First-order payoff changes from seeding vectors and quality increments.
// The second component is always the negative of the first.
std::pair<double, double> marginal_utilities(const ModelParams& params, int n,
                                             const Eigen::VectorXd& seeds_a,
                                             const Eigen::VectorXd& seeds_b,
                                             double dq_a, double dq_b,
                                             const Eigen::VectorXd& v);

// Centrality levels above which seeding an agent beats marginal quality
// improvement: v_c^a = 2 lambda (cs/cq) qb/(qa+qb)^2 and symmetrically for
// firm b. Their ratio is qb/qa.
Thresholds thresholds(const ModelParams& params, int n);

// Marginal utility of one unit of quality improvement, the quality side of
// the threshold comparison.
double quality_gain(const ModelParams& params, int n, Firm firm);

// Per-agent seeding headroom: 1/2 - y0 for firm a, 1/2 + y0 for firm b.
// Throws CapacityError when y0 leaves [-1/2, 1/2].
Eigen::VectorXd demand_capacity(const Eigen::VectorXd& y0, Firm firm);

// Greedy kernel of the optimal allocation: seed agents in descending
// centrality order (ties by ascending index) while v_i > v_c strictly and
// budget remains, each up to its capacity; the remainder buys quality.
// An exact tie v_i == v_c goes to quality.
Allocation water_fill(const Eigen::VectorXd& v, const Eigen::VectorXd& caps,
                      double v_c, double budget, double cs, double cq);

Allocation optimal_allocation(const Network& net, const ModelParams& params,
                              const Eigen::VectorXd& y0, Firm firm);

// Pair of decoupled optima; also verifies the separability of the marginal
// payoffs and reports the (clamped) joint initial state.
Equilibrium nash_equilibrium(const Network& net, const ModelParams& params,
                             const Eigen::VectorXd& y0);

SeedingCapacityReport seeding_capacity(const Network& net,
                                       const ModelParams& params,
                                       const Eigen::VectorXd& y0, Firm firm);

// Largest number of agents any n-agent graph can hold above the firm-a
// threshold: k = min(floor(n delta (1-alpha) / ((v_c-1)(2 alpha -
// delta (1-alpha)))), n) when 1 < v_c <= v_h, n when v_c <= 1 (every agent
// qualifies) and 0 when v_c > v_h (no graph can be seeded).
SeedCount max_seed_count(const ModelParams& params, int n,
                         Firm firm = Firm::a);

// Pure comparison on precomputed values; boundaries count as
// graph_dependent.
Regime classify_regime_value(double v_c, double v_h);

Regime classify_regime(const ModelParams& params, int n, Firm firm = Firm::a);

const char* regime_name(Regime regime);

}  // namespace duopoly
