#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

#include "core/allocation.hpp"
#include "core/network.hpp"
#include "core/params.hpp"

namespace duopoly {

enum class SweepParam { qa, qb, alpha, delta, cs, cq };

enum class Monotonicity { increasing, decreasing, constant, non_monotone };

// Firm-a optimal allocation evaluated along a one-parameter grid.
// seed_spend carries cs * |S|_1 per point and seed_amount the raw |S|_1;
// the verdict is computed on seed_amount for cs sweeps and on seed_spend
// otherwise.
struct SweepResult {
  SweepParam parameter;
  std::vector<double> grid;
  std::vector<double> seed_amount;
  std::vector<double> seed_spend;
  std::vector<double> dq;
  Monotonicity verdict = Monotonicity::constant;
};

// Adjacent-pair slack used by every monotonicity classification.
inline constexpr double kMonotonicityTol = 1e-12;

bool is_nondecreasing(std::span<const double> xs, double tol = kMonotonicityTol);
bool is_nonincreasing(std::span<const double> xs, double tol = kMonotonicityTol);
Monotonicity classify_monotonicity(std::span<const double> xs,
                                   double tol = kMonotonicityTol);

// Evaluates the firm-a optimal allocation at every grid value of the swept
// parameter. The grid must be strictly increasing and valid for the
// parameter. Without an explicit budget each point uses the generous
// default cs * (total firm-a capacity) + 1 so the threshold, not the
// budget, binds. jobs > 1 evaluates grid points concurrently; the result
// order is always the grid order.
SweepResult sweep(const Network& net, const ModelParams& base,
                  const Eigen::VectorXd& y0, SweepParam parameter,
                  std::vector<double> grid, int jobs = 1,
                  std::optional<double> budget = std::nullopt);

SweepResult sweep_quality_own(const Network& net, const ModelParams& base,
                              const Eigen::VectorXd& y0,
                              std::vector<double> grid);

SweepResult sweep_quality_rival(const Network& net, const ModelParams& base,
                                const Eigen::VectorXd& y0,
                                std::vector<double> grid);

SweepResult sweep_alpha_delta(const Network& net, const ModelParams& base,
                              const Eigen::VectorXd& y0, SweepParam which,
                              std::vector<double> grid);

SweepResult sweep_costs(const Network& net, const ModelParams& base,
                        const Eigen::VectorXd& y0, SweepParam which,
                        std::vector<double> grid);

// True unless qa <= qb while firm a seeds strictly more than firm b.
// Requires equal budgets.
bool check_equal_budget(const Network& net, const ModelParams& params,
                        const Eigen::VectorXd& y0);

const char* sweep_param_name(SweepParam parameter);
const char* monotonicity_name(Monotonicity verdict);

}  // namespace duopoly
