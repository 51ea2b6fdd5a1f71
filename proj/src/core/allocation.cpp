#include "core/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "core/centrality.hpp"
#include "core/dynamics.hpp"
#include "core/errors.hpp"

namespace duopoly {

double lambda_coefficient(const ModelParams& params, int n) {
  params.validate();
  return params.delta * (1.0 - params.alpha) * n /
         (2.0 * (1.0 - params.delta) *
          (2.0 * params.alpha - params.delta * (1.0 - params.alpha)));
}

std::pair<double, double> firm_utilities(const Network& net,
                                         const ModelParams& params,
                                         const Eigen::VectorXd& y0) {
  params.validate();
  check_state_bounds(y0);
  const int n = net.size();
  const Eigen::VectorXd v = centrality(net, params).v;
  const double fixed_sum = n / (1.0 - params.delta);
  const double ua = 0.5 * fixed_sum + v.dot(y0) +
                    lambda_coefficient(params, n) * (params.qa - params.qb) /
                        (params.qa + params.qb);
  return {ua, fixed_sum - ua};
}

std::pair<double, double> marginal_utilities(const ModelParams& params, int n,
                                             const Eigen::VectorXd& seeds_a,
                                             const Eigen::VectorXd& seeds_b,
                                             double dq_a, double dq_b,
                                             const Eigen::VectorXd& v) {
  params.validate();
  if (seeds_a.size() != n || seeds_b.size() != n || v.size() != n) {
    throw ValidationError("marginal utility vectors must have length n");
  }
  const double lam = lambda_coefficient(params, n);
  const double qsum2 = (params.qa + params.qb) * (params.qa + params.qb);
  const double dua = v.dot(seeds_a) - v.dot(seeds_b) +
                     2.0 * lam * params.qb * dq_a / qsum2 -
                     2.0 * lam * params.qa * dq_b / qsum2;
  return {dua, -dua};
}

double quality_gain(const ModelParams& params, int n, Firm firm) {
  const double lam = lambda_coefficient(params, n);
  const double qsum2 = (params.qa + params.qb) * (params.qa + params.qb);
  const double rival_q = (firm == Firm::a) ? params.qb : params.qa;
  return 2.0 * lam * rival_q / qsum2;
}

Thresholds thresholds(const ModelParams& params, int n) {
  const double price_ratio = params.cs / params.cq;
  return Thresholds{price_ratio * quality_gain(params, n, Firm::a),
                    price_ratio * quality_gain(params, n, Firm::b)};
}

Eigen::VectorXd demand_capacity(const Eigen::VectorXd& y0, Firm firm) {
  for (Eigen::Index i = 0; i < y0.size(); ++i) {
    if (!(std::abs(y0(i)) <= 0.5)) {
      throw CapacityError("initial state component " + std::to_string(i + 1) +
                          " = " + std::to_string(y0(i)) +
                          " leaves [-1/2, 1/2]");
    }
  }
  return (firm == Firm::a) ? (0.5 - y0.array()).matrix().eval()
                           : (0.5 + y0.array()).matrix().eval();
}

namespace {

// Agents in descending centrality order, ties broken by ascending index.
std::vector<int> seeding_order(const Eigen::VectorXd& v) {
  std::vector<int> order(static_cast<std::size_t>(v.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int lhs, int rhs) { return v(lhs) > v(rhs); });
  return order;
}

}  // namespace

Allocation water_fill(const Eigen::VectorXd& v, const Eigen::VectorXd& caps,
                      double v_c, double budget, double cs, double cq) {
  if (v.size() != caps.size()) {
    throw ValidationError("centrality and capacity vectors differ in length");
  }
  if (!(cs > 0.0) || !(cq > 0.0)) {
    throw ValidationError("unit costs must be positive");
  }
  if (!(budget >= 0.0)) {
    throw ValidationError("budget must be nonnegative");
  }
  for (Eigen::Index i = 0; i < caps.size(); ++i) {
    if (!(caps(i) >= 0.0)) {
      throw CapacityError("capacity of agent " + std::to_string(i + 1) +
                          " is negative");
    }
  }
  Allocation alloc;
  alloc.seeds = Eigen::VectorXd::Zero(v.size());
  double remaining = budget;
  for (int agent : seeding_order(v)) {
    if (!(v(agent) > v_c)) break;  // ties go to quality improvement
    if (remaining <= 0.0) break;
    const double affordable = remaining / cs;
    if (caps(agent) < affordable) {
      alloc.seeds(agent) = caps(agent);
      remaining -= cs * caps(agent);
      if (remaining < 0.0) remaining = 0.0;
    } else {
      alloc.seeds(agent) = affordable;
      remaining = 0.0;
    }
  }
  alloc.spend_quality = remaining;
  alloc.spend_seeding = budget - remaining;
  alloc.dq = remaining / cq;
  return alloc;
}

Allocation optimal_allocation(const Network& net, const ModelParams& params,
                              const Eigen::VectorXd& y0, Firm firm) {
  params.validate();
  const int n = net.size();
  const Eigen::VectorXd caps = demand_capacity(y0, firm);
  const CentralityProfile prof = centrality(net, params);
  const Thresholds vc = thresholds(params, n);
  const double threshold = (firm == Firm::a) ? vc.firm_a : vc.firm_b;
  const double budget = (firm == Firm::a) ? params.budget_a : params.budget_b;
  return water_fill(prof.v, caps, threshold, budget, params.cs, params.cq);
}

Equilibrium nash_equilibrium(const Network& net, const ModelParams& params,
                             const Eigen::VectorXd& y0) {
  Equilibrium eq{optimal_allocation(net, params, y0, Firm::a),
                 optimal_allocation(net, params, y0, Firm::b),
                 Eigen::VectorXd(), 0};

  // Decoupling check: the marginal payoff of firm a must split into its own
  // objective minus firm b's, so neither optimum depends on the rival.
  const int n = net.size();
  const Eigen::VectorXd v = centrality(net, params).v;
  const auto [dua, dub] =
      marginal_utilities(params, n, eq.firm_a.seeds, eq.firm_b.seeds,
                         eq.firm_a.dq, eq.firm_b.dq, v);
  const double own_a =
      v.dot(eq.firm_a.seeds) + quality_gain(params, n, Firm::a) * eq.firm_a.dq;
  const double own_b =
      v.dot(eq.firm_b.seeds) + quality_gain(params, n, Firm::b) * eq.firm_b.dq;
  const double scale = std::max(1.0, std::abs(own_a) + std::abs(own_b));
  if (std::abs(dua - (own_a - own_b)) > 1e-9 * scale ||
      std::abs(dua + dub) > 1e-9 * scale) {
    throw SolveError("equilibrium decoupling check failed");
  }

  eq.joint_y0 = y0 + eq.firm_a.seeds - eq.firm_b.seeds;
  for (Eigen::Index i = 0; i < eq.joint_y0.size(); ++i) {
    if (std::abs(eq.joint_y0(i)) > 0.5 + 1e-12) ++eq.clamped;
    eq.joint_y0(i) = std::clamp(eq.joint_y0(i), -0.5, 0.5);
  }
  return eq;
}

SeedingCapacityReport seeding_capacity(const Network& net,
                                       const ModelParams& params,
                                       const Eigen::VectorXd& y0, Firm firm) {
  params.validate();
  const Eigen::VectorXd caps = demand_capacity(y0, firm);
  const CentralityProfile prof = centrality(net, params);
  const Thresholds vc = thresholds(params, net.size());
  const double threshold = (firm == Firm::a) ? vc.firm_a : vc.firm_b;
  SeedingCapacityReport report;
  for (int i = 0; i < net.size(); ++i) {
    if (prof.v(i) > threshold) {
      report.capacity += caps(i);
      report.seeded_agents.push_back(i);
    }
  }
  return report;
}

SeedCount max_seed_count(const ModelParams& params, int n, Firm firm) {
  params.validate();
  const Thresholds vc = thresholds(params, n);
  const double threshold = (firm == Firm::a) ? vc.firm_a : vc.firm_b;
  const Regime regime = classify_regime(params, n, firm);
  if (threshold <= 1.0) return SeedCount{n, regime};
  const double v_h = star_centralities(n, params).hub;
  if (threshold > v_h) return SeedCount{0, regime};
  const double raw =
      n * params.delta * (1.0 - params.alpha) /
      ((threshold - 1.0) *
       (2.0 * params.alpha - params.delta * (1.0 - params.alpha)));
  const int k = (raw >= static_cast<double>(n))
                    ? n
                    : static_cast<int>(std::floor(raw));
  return SeedCount{std::min(k, n), regime};
}

Regime classify_regime_value(double v_c, double v_h) {
  if (v_c < 1.0) return Regime::all_seedable;
  if (v_c > v_h) return Regime::none_seedable;
  return Regime::graph_dependent;
}

Regime classify_regime(const ModelParams& params, int n, Firm firm) {
  params.validate();
  const Thresholds vc = thresholds(params, n);
  const double threshold = (firm == Firm::a) ? vc.firm_a : vc.firm_b;
  return classify_regime_value(threshold, star_centralities(n, params).hub);
}

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::none_seedable:
      return "none_seedable";
    case Regime::all_seedable:
      return "all_seedable";
    case Regime::graph_dependent:
      return "graph_dependent";
  }
  return "unknown";
}

}  // namespace duopoly
