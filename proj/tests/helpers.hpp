// Shared test utilities: random instance generators and the independent
// plain-loop oracles the expected values are computed from. Nothing here
// may call back into the solver paths under test.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <random>
#include <vector>

#include "core/network.hpp"
#include "core/params.hpp"

namespace test_support {

inline duopoly::ModelParams example1_params() {
  duopoly::ModelParams p;
  p.alpha = 0.5;
  p.delta = 0.5;
  p.qa = 1.0;
  p.qb = 1.0;
  p.cs = 1.0;
  p.cq = 1.0;
  return p;
}

// Random influence matrix: positive off-diagonal weights, zero diagonal,
// rows normalized to sum 1.
inline Eigen::MatrixXd random_row_stochastic(int n, std::mt19937& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::MatrixXd w(n, n);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      w(i, j) = (i == j) ? 0.0 : unif(rng);
      sum += w(i, j);
    }
    if (sum <= 0.0) {
      w(i, (i + 1) % n) = 1.0;
      sum = 1.0;
    }
    for (int j = 0; j < n; ++j) w(i, j) /= sum;
  }
  return w;
}

inline duopoly::Network random_network(int n, std::mt19937& rng) {
  return duopoly::Network::from_weights(random_row_stochastic(n, rng));
}

inline Eigen::VectorXd random_state(int n, std::mt19937& rng,
                                    double magnitude = 0.5) {
  std::uniform_real_distribution<double> unif(-magnitude, magnitude);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y(i) = unif(rng);
  return y;
}

/* --- plain-loop linear algebra (row-major std::vector matrices) -------- */

using NaiveMatrix = std::vector<double>;  // n*n row-major
using NaiveVector = std::vector<double>;

inline NaiveMatrix to_naive(const Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  NaiveMatrix out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] = m(i, j);
  }
  return out;
}

inline NaiveVector to_naive(const Eigen::VectorXd& v) {
  return NaiveVector(v.data(), v.data() + v.size());
}

inline NaiveVector naive_matvec(int n, const NaiveMatrix& a,
                                const NaiveVector& x) {
  NaiveVector y(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      acc += a[static_cast<std::size_t>(i) * n + j] * x[static_cast<std::size_t>(j)];
    }
    y[static_cast<std::size_t>(i)] = acc;
  }
  return y;
}

inline NaiveMatrix naive_matmul(int n, const NaiveMatrix& a,
                                const NaiveMatrix& b) {
  NaiveMatrix c(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        c[static_cast<std::size_t>(i) * n + j] +=
            aik * b[static_cast<std::size_t>(k) * n + j];
      }
    }
  }
  return c;
}

inline NaiveMatrix naive_identity(int n) {
  NaiveMatrix eye(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) eye[static_cast<std::size_t>(i) * n + i] = 1.0;
  return eye;
}

// One best-response update computed with explicit loops.
inline NaiveVector naive_step(int n, const NaiveMatrix& w,
                              const NaiveVector& y, double drift) {
  NaiveVector next = naive_matvec(n, w, y);
  for (double& value : next) value += drift;
  return next;
}

// Closed-form state W^t y0 + (sum_{k<t} W^k) u via iterated matrix products.
// Walks t from 0 upward and reports each state through `visit`.
inline void naive_closed_form(int n, const NaiveMatrix& w,
                              const NaiveVector& y0, double drift, int horizon,
                              const std::function<void(int, const NaiveVector&)>& visit) {
  NaiveMatrix power = naive_identity(n);             // W^t
  NaiveMatrix series(static_cast<std::size_t>(n) * n, 0.0);  // sum_{k<t} W^k
  for (int t = 0; t <= horizon; ++t) {
    NaiveVector state = naive_matvec(n, power, y0);
    const NaiveVector ones(static_cast<std::size_t>(n), 1.0);
    const NaiveVector series_term = naive_matvec(n, series, ones);
    for (int i = 0; i < n; ++i) state[static_cast<std::size_t>(i)] += drift * series_term[static_cast<std::size_t>(i)];
    visit(t, state);
    for (std::size_t idx = 0; idx < series.size(); ++idx) series[idx] += power[idx];
    power = naive_matmul(n, power, w);
  }
}

// Discounted total consumption of product a, truncated at T:
// sum_{t<=T} delta^t sum_i (1/2 + y_i(t)), iterating the recurrence with
// plain loops.
inline double naive_discounted_consumption(int n, const NaiveMatrix& w,
                                           NaiveVector y, double drift,
                                           double delta, int horizon) {
  double total = 0.0;
  double weight = 1.0;
  for (int t = 0; t <= horizon; ++t) {
    double slice = 0.0;
    for (int i = 0; i < n; ++i) slice += 0.5 + y[static_cast<std::size_t>(i)];
    total += weight * slice;
    weight *= delta;
    y = naive_step(n, w, y, drift);
  }
  return total;
}

// Exhaustive grid search over per-agent seed amounts (steps+1 levels per
// agent, budget-infeasible branches pruned); the remainder buys quality.
// Returns the best objective v.S + gain * dq found.
inline double grid_search_best(const NaiveVector& v, const NaiveVector& caps,
                               double budget, double cs, double cq,
                               double gain, int steps) {
  const std::size_t n = v.size();
  double best = -1e300;
  std::function<void(std::size_t, double, double)> descend =
      [&](std::size_t agent, double spent, double value) {
        if (agent == n) {
          const double dq = (budget - spent) / cq;
          best = std::max(best, value + gain * dq);
          return;
        }
        for (int level = 0; level <= steps; ++level) {
          const double amount = caps[agent] * level / steps;
          const double next_spent = spent + cs * amount;
          if (next_spent > budget + 1e-12) break;
          descend(agent + 1, next_spent, value + v[agent] * amount);
        }
      };
  descend(0, 0.0, 0.0);
  return best;
}

}  // namespace test_support
