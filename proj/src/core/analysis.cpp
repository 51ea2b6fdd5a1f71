#include "core/analysis.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "core/errors.hpp"

namespace duopoly {

bool is_nondecreasing(std::span<const double> xs, double tol) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < xs[i - 1] - tol) return false;
  }
  return true;
}

bool is_nonincreasing(std::span<const double> xs, double tol) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] > xs[i - 1] + tol) return false;
  }
  return true;
}

Monotonicity classify_monotonicity(std::span<const double> xs, double tol) {
  const bool up = is_nondecreasing(xs, tol);
  const bool down = is_nonincreasing(xs, tol);
  if (up && down) return Monotonicity::constant;
  if (up) return Monotonicity::increasing;
  if (down) return Monotonicity::decreasing;
  return Monotonicity::non_monotone;
}

namespace {

ModelParams with_param(ModelParams base, SweepParam parameter, double value) {
  switch (parameter) {
    case SweepParam::qa:
      base.qa = value;
      break;
    case SweepParam::qb:
      base.qb = value;
      break;
    case SweepParam::alpha:
      base.alpha = value;
      break;
    case SweepParam::delta:
      base.delta = value;
      break;
    case SweepParam::cs:
      base.cs = value;
      break;
    case SweepParam::cq:
      base.cq = value;
      break;
  }
  return base;
}

struct SweepPoint {
  double amount = 0.0;
  double spend = 0.0;
  double dq = 0.0;
};

SweepPoint evaluate_point(const Network& net, const ModelParams& params,
                          const Eigen::VectorXd& y0,
                          std::optional<double> budget) {
  ModelParams local = params;
  if (budget) {
    local.budget_a = *budget;
  } else {
    local.budget_a = local.cs * demand_capacity(y0, Firm::a).sum() + 1.0;
  }
  const Allocation alloc = optimal_allocation(net, local, y0, Firm::a);
  return SweepPoint{alloc.seeds.sum(), alloc.spend_seeding, alloc.dq};
}

}  // namespace

SweepResult sweep(const Network& net, const ModelParams& base,
                  const Eigen::VectorXd& y0, SweepParam parameter,
                  std::vector<double> grid, int jobs,
                  std::optional<double> budget) {
  if (grid.empty()) throw ValidationError("sweep grid must be nonempty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw ValidationError("sweep grid must be strictly increasing");
    }
  }
  // Reject invalid grid values before any evaluation starts.
  for (double value : grid) with_param(base, parameter, value).validate();

  const std::size_t points = grid.size();
  std::vector<SweepPoint> results(points);
  const auto run = [&](std::size_t index) {
    results[index] =
        evaluate_point(net, with_param(base, parameter, grid[index]), y0,
                       budget);
  };

  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(points)));
  if (workers == 1) {
    for (std::size_t i = 0; i < points; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < points;
             i = next.fetch_add(1)) {
          try {
            run(i);
          } catch (...) {
            const std::scoped_lock lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& worker : pool) worker.join();
    if (failure) std::rethrow_exception(failure);
  }

  SweepResult result;
  result.parameter = parameter;
  result.grid = std::move(grid);
  result.seed_amount.reserve(points);
  result.seed_spend.reserve(points);
  result.dq.reserve(points);
  for (const SweepPoint& point : results) {
    result.seed_amount.push_back(point.amount);
    result.seed_spend.push_back(point.spend);
    result.dq.push_back(point.dq);
  }
  result.verdict = classify_monotonicity(parameter == SweepParam::cs
                                             ? result.seed_amount
                                             : result.seed_spend);
  return result;
}

SweepResult sweep_quality_own(const Network& net, const ModelParams& base,
                              const Eigen::VectorXd& y0,
                              std::vector<double> grid) {
  return sweep(net, base, y0, SweepParam::qa, std::move(grid));
}

SweepResult sweep_quality_rival(const Network& net, const ModelParams& base,
                                const Eigen::VectorXd& y0,
                                std::vector<double> grid) {
  return sweep(net, base, y0, SweepParam::qb, std::move(grid));
}

SweepResult sweep_alpha_delta(const Network& net, const ModelParams& base,
                              const Eigen::VectorXd& y0, SweepParam which,
                              std::vector<double> grid) {
  if (which != SweepParam::alpha && which != SweepParam::delta) {
    throw ValidationError("sweep_alpha_delta expects alpha or delta");
  }
  return sweep(net, base, y0, which, std::move(grid));
}

SweepResult sweep_costs(const Network& net, const ModelParams& base,
                        const Eigen::VectorXd& y0, SweepParam which,
                        std::vector<double> grid) {
  if (which != SweepParam::cs && which != SweepParam::cq) {
    throw ValidationError("sweep_costs expects cs or cq");
  }
  return sweep(net, base, y0, which, std::move(grid));
}

bool check_equal_budget(const Network& net, const ModelParams& params,
                        const Eigen::VectorXd& y0) {
  params.validate();
  if (std::abs(params.budget_a - params.budget_b) > 1e-12) {
    throw ValidationError("equal-budget check requires budget_a == budget_b");
  }
  const double seeded_a =
      optimal_allocation(net, params, y0, Firm::a).seeds.sum();
  const double seeded_b =
      optimal_allocation(net, params, y0, Firm::b).seeds.sum();
  if (params.qa <= params.qb) return seeded_a <= seeded_b + 1e-12;
  return true;
}

const char* sweep_param_name(SweepParam parameter) {
  switch (parameter) {
    case SweepParam::qa:
      return "qa";
    case SweepParam::qb:
      return "qb";
    case SweepParam::alpha:
      return "alpha";
    case SweepParam::delta:
      return "delta";
    case SweepParam::cs:
      return "cs";
    case SweepParam::cq:
      return "cq";
  }
  return "unknown";
}

const char* monotonicity_name(Monotonicity verdict) {
  switch (verdict) {
    case Monotonicity::increasing:
      return "increasing";
    case Monotonicity::decreasing:
      return "decreasing";
    case Monotonicity::constant:
      return "constant";
    case Monotonicity::non_monotone:
      return "non-monotone";
  }
  return "unknown";
}

}  // namespace duopoly
