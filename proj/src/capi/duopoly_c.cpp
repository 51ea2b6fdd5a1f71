// extern "C" surface of the duopoly library. Translates between the opaque
// handle API and the C++ core: exceptions become status codes, the message
// of the most recent failure is kept per thread.

#include "duopoly.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/allocation.hpp"
#include "core/analysis.hpp"
#include "core/centrality.hpp"
#include "core/dynamics.hpp"
#include "core/errors.hpp"
#include "core/graph_io.hpp"
#include "core/network.hpp"
#include "core/params.hpp"

struct duop_network {
  duopoly::Network net;
};

namespace {

thread_local std::string tl_last_error;

duop_status code_to_status(duopoly::ErrorCode code) {
  using duopoly::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument:
      return DUOP_ERR_INVALID_ARGUMENT;
    case ErrorCode::row_sum:
      return DUOP_ERR_ROW_SUM;
    case ErrorCode::diagonal:
      return DUOP_ERR_DIAGONAL;
    case ErrorCode::negative_weight:
      return DUOP_ERR_NEGATIVE_WEIGHT;
    case ErrorCode::size:
      return DUOP_ERR_SIZE;
    case ErrorCode::bounds:
      return DUOP_ERR_BOUNDS;
    case ErrorCode::capacity:
      return DUOP_ERR_CAPACITY;
    case ErrorCode::regime:
      return DUOP_ERR_REGIME;
    case ErrorCode::parse:
      return DUOP_ERR_PARSE;
    case ErrorCode::io:
      return DUOP_ERR_IO;
    case ErrorCode::solve:
      return DUOP_ERR_SOLVE;
  }
  return DUOP_ERR_INTERNAL;
}

duop_status fail(duop_status status, const char* message) {
  tl_last_error = message;
  return status;
}

// Runs fn, mapping core exceptions to status codes.
template <typename Fn>
duop_status guarded(Fn&& fn) {
  try {
    fn();
    tl_last_error.clear();
    return DUOP_OK;
  } catch (const duopoly::Error& err) {
    tl_last_error = err.what();
    return code_to_status(err.code());
  } catch (const std::bad_alloc&) {
    tl_last_error = "out of memory";
    return DUOP_ERR_INTERNAL;
  } catch (const std::exception& err) {
    tl_last_error = err.what();
    return DUOP_ERR_INTERNAL;
  }
}

duopoly::ModelParams to_core(const duop_params& p) {
  return duopoly::ModelParams{p.alpha, p.delta, p.qa,       p.qb,
                              p.cs,    p.cq,    p.budget_a, p.budget_b};
}

Eigen::VectorXd state_or_zero(const double* y0, int n) {
  if (y0 == nullptr) return Eigen::VectorXd::Zero(n);
  return Eigen::Map<const Eigen::VectorXd>(y0, n);
}

duopoly::Firm to_core(duop_firm firm) {
  return firm == DUOP_FIRM_A ? duopoly::Firm::a : duopoly::Firm::b;
}

duop_regime from_core(duopoly::Regime regime) {
  switch (regime) {
    case duopoly::Regime::none_seedable:
      return DUOP_REGIME_NONE_SEEDABLE;
    case duopoly::Regime::all_seedable:
      return DUOP_REGIME_ALL_SEEDABLE;
    case duopoly::Regime::graph_dependent:
      return DUOP_REGIME_GRAPH_DEPENDENT;
  }
  return DUOP_REGIME_GRAPH_DEPENDENT;
}

duop_monotonicity from_core(duopoly::Monotonicity verdict) {
  switch (verdict) {
    case duopoly::Monotonicity::increasing:
      return DUOP_MONO_INCREASING;
    case duopoly::Monotonicity::decreasing:
      return DUOP_MONO_DECREASING;
    case duopoly::Monotonicity::constant:
      return DUOP_MONO_CONSTANT;
    case duopoly::Monotonicity::non_monotone:
      return DUOP_MONO_NON_MONOTONE;
  }
  return DUOP_MONO_NON_MONOTONE;
}

duopoly::SweepParam to_core(duop_sweep_param parameter) {
  switch (parameter) {
    case DUOP_SWEEP_QA:
      return duopoly::SweepParam::qa;
    case DUOP_SWEEP_QB:
      return duopoly::SweepParam::qb;
    case DUOP_SWEEP_ALPHA:
      return duopoly::SweepParam::alpha;
    case DUOP_SWEEP_DELTA:
      return duopoly::SweepParam::delta;
    case DUOP_SWEEP_CS:
      return duopoly::SweepParam::cs;
    case DUOP_SWEEP_CQ:
      return duopoly::SweepParam::cq;
  }
  throw duopoly::ValidationError("unknown sweep parameter");
}

void fill_allocation(const duopoly::Allocation& alloc, double* seeds_out,
                     duop_allocation* out) {
  if (seeds_out != nullptr) {
    Eigen::Map<Eigen::VectorXd>(seeds_out, alloc.seeds.size()) = alloc.seeds;
  }
  if (out != nullptr) {
    out->dq = alloc.dq;
    out->spend_seeding = alloc.spend_seeding;
    out->spend_quality = alloc.spend_quality;
    out->seed_total = alloc.seeds.sum();
  }
}

constexpr const char* kNullArg = "required argument is NULL";

}  // namespace

extern "C" {

const char* duop_version(void) { return "1.0.0"; }

const char* duop_last_error(void) { return tl_last_error.c_str(); }

const char* duop_status_name(duop_status status) {
  switch (status) {
    case DUOP_OK:
      return "ok";
    case DUOP_ERR_INVALID_ARGUMENT:
      return "invalid_argument";
    case DUOP_ERR_ROW_SUM:
      return "row_sum";
    case DUOP_ERR_DIAGONAL:
      return "diagonal";
    case DUOP_ERR_NEGATIVE_WEIGHT:
      return "negative_weight";
    case DUOP_ERR_SIZE:
      return "size";
    case DUOP_ERR_BOUNDS:
      return "bounds";
    case DUOP_ERR_CAPACITY:
      return "capacity";
    case DUOP_ERR_REGIME:
      return "regime";
    case DUOP_ERR_PARSE:
      return "parse";
    case DUOP_ERR_IO:
      return "io";
    case DUOP_ERR_SOLVE:
      return "solve";
    case DUOP_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

duop_status duop_params_validate(const duop_params* params) {
  if (params == nullptr) return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  return guarded([&] { to_core(*params).validate(); });
}

duop_status duop_network_from_weights(int32_t n, const double* weights,
                                      int32_t normalize, duop_network** out) {
  if (weights == nullptr || out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  *out = nullptr;
  return guarded([&] {
    if (n < 1) throw duopoly::SizeError("agent count must be positive");
    Eigen::MatrixXd w(n, n);
    for (int32_t i = 0; i < n; ++i) {
      for (int32_t j = 0; j < n; ++j) {
        w(i, j) = weights[static_cast<std::size_t>(i) * n + j];
      }
    }
    if (normalize != 0) w = duopoly::normalize_rows(std::move(w));
    *out = new duop_network{duopoly::Network::from_weights(std::move(w))};
  });
}

duop_status duop_network_star(int32_t n, duop_network** out) {
  if (out == nullptr) return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  *out = nullptr;
  return guarded([&] { *out = new duop_network{duopoly::Network::star(n)}; });
}

duop_status duop_network_balanced_ring(int32_t n, int32_t d,
                                       duop_network** out) {
  if (out == nullptr) return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  *out = nullptr;
  return guarded(
      [&] { *out = new duop_network{duopoly::Network::balanced_ring(n, d)}; });
}

duop_status duop_network_k_star(int32_t n, int32_t k, duop_network** out) {
  if (out == nullptr) return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  *out = nullptr;
  return guarded(
      [&] { *out = new duop_network{duopoly::Network::k_star(n, k)}; });
}

duop_status duop_network_read(const char* path, int32_t normalize,
                              duop_network** out) {
  if (path == nullptr || out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  *out = nullptr;
  return guarded([&] {
    *out = new duop_network{duopoly::read_network(path, normalize != 0)};
  });
}

duop_status duop_network_write(const duop_network* net, const char* path) {
  if (net == nullptr || path == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] { duopoly::write_network(net->net, path); });
}

void duop_network_free(duop_network* net) { delete net; }

int32_t duop_network_size(const duop_network* net) {
  return net == nullptr ? 0 : net->net.size();
}

duop_status duop_network_weights(const duop_network* net, double* out) {
  if (net == nullptr || out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  const int n = net->net.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out[static_cast<std::size_t>(i) * n + j] = net->net.weights()(i, j);
    }
  }
  tl_last_error.clear();
  return DUOP_OK;
}

duop_status duop_read_initial_state(const char* path, int32_t n,
                                    double* y0_out) {
  if (path == nullptr || y0_out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const Eigen::VectorXd y = duopoly::read_state_vector(path, n);
    Eigen::Map<Eigen::VectorXd>(y0_out, n) = y;
  });
}

duop_status duop_simulate(const duop_network* net, const duop_params* params,
                          const double* y0, int32_t horizon,
                          double* trajectory) {
  if (net == nullptr || params == nullptr || trajectory == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const int n = net->net.size();
    const auto op = duopoly::build_operator(net->net, to_core(*params));
    const auto states =
        duopoly::trajectory(op, state_or_zero(y0, n), horizon);
    for (std::size_t t = 0; t < states.size(); ++t) {
      Eigen::Map<Eigen::VectorXd>(trajectory + t * n, n) = states[t].y;
    }
  });
}

duop_status duop_steady_state(const duop_network* net,
                              const duop_params* params, double* y_out) {
  if (net == nullptr || params == nullptr || y_out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto op = duopoly::build_operator(net->net, to_core(*params));
    const Eigen::VectorXd fixed = duopoly::steady_state(op);
    Eigen::Map<Eigen::VectorXd>(y_out, fixed.size()) = fixed;
  });
}

duop_status duop_centrality(const duop_network* net, const duop_params* params,
                            double* v_out, duop_centrality_stats* stats) {
  if (net == nullptr || params == nullptr || v_out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto core = to_core(*params);
    const auto profile = duopoly::centrality(net->net, core);
    Eigen::Map<Eigen::VectorXd>(v_out, profile.v.size()) = profile.v;
    if (stats != nullptr) {
      stats->v_bar = profile.v_bar;
      stats->v_max = profile.v_max;
      stats->sum = profile.v.sum();
      stats->sum_identity =
          duopoly::centrality_sum_identity(core, net->net.size());
    }
  });
}

duop_status duop_centrality_series(const duop_network* net,
                                   const duop_params* params, double tol,
                                   double* v_out) {
  if (net == nullptr || params == nullptr || v_out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const Eigen::VectorXd v =
        duopoly::centrality_series(net->net, to_core(*params), tol);
    Eigen::Map<Eigen::VectorXd>(v_out, v.size()) = v;
  });
}

duop_status duop_balanced_centrality(const duop_params* params, double* out) {
  if (params == nullptr || out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] { *out = duopoly::balanced_centrality(to_core(*params)); });
}

duop_status duop_star_centralities(int32_t n, const duop_params* params,
                                   double* v_hub, double* v_leaf) {
  if (params == nullptr || v_hub == nullptr || v_leaf == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto values = duopoly::star_centralities(n, to_core(*params));
    *v_hub = values.hub;
    *v_leaf = values.leaf;
  });
}

duop_status duop_lambda(const duop_params* params, int32_t n, double* out) {
  if (params == nullptr || out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded(
      [&] { *out = duopoly::lambda_coefficient(to_core(*params), n); });
}

duop_status duop_thresholds(const duop_params* params, int32_t n,
                            double* vc_a, double* vc_b) {
  if (params == nullptr || vc_a == nullptr || vc_b == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto core = to_core(*params);
    core.validate();
    const auto vc = duopoly::thresholds(core, n);
    *vc_a = vc.firm_a;
    *vc_b = vc.firm_b;
  });
}

duop_status duop_firm_utilities(const duop_network* net,
                                const duop_params* params, const double* y0,
                                double* utility_a, double* utility_b) {
  if (net == nullptr || params == nullptr || utility_a == nullptr ||
      utility_b == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto [ua, ub] = duopoly::firm_utilities(
        net->net, to_core(*params), state_or_zero(y0, net->net.size()));
    *utility_a = ua;
    *utility_b = ub;
  });
}

duop_status duop_marginal_utilities(const duop_params* params, int32_t n,
                                    const double* seeds_a,
                                    const double* seeds_b, double dq_a,
                                    double dq_b, const double* v,
                                    double* delta_a, double* delta_b) {
  if (params == nullptr || seeds_a == nullptr || seeds_b == nullptr ||
      v == nullptr || delta_a == nullptr || delta_b == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto [dua, dub] = duopoly::marginal_utilities(
        to_core(*params), n, Eigen::Map<const Eigen::VectorXd>(seeds_a, n),
        Eigen::Map<const Eigen::VectorXd>(seeds_b, n), dq_a, dq_b,
        Eigen::Map<const Eigen::VectorXd>(v, n));
    *delta_a = dua;
    *delta_b = dub;
  });
}

duop_status duop_optimal_allocation(const duop_network* net,
                                    const duop_params* params,
                                    const double* y0, duop_firm firm,
                                    double* seeds_out, duop_allocation* out) {
  if (net == nullptr || params == nullptr || seeds_out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto alloc =
        duopoly::optimal_allocation(net->net, to_core(*params),
                                    state_or_zero(y0, net->net.size()),
                                    to_core(firm));
    fill_allocation(alloc, seeds_out, out);
  });
}

duop_status duop_equilibrium(const duop_network* net,
                             const duop_params* params, const double* y0,
                             double* seeds_a, duop_allocation* alloc_a,
                             double* seeds_b, duop_allocation* alloc_b,
                             double* joint_y0, int32_t* clamped) {
  if (net == nullptr || params == nullptr || seeds_a == nullptr ||
      seeds_b == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto eq = duopoly::nash_equilibrium(
        net->net, to_core(*params), state_or_zero(y0, net->net.size()));
    fill_allocation(eq.firm_a, seeds_a, alloc_a);
    fill_allocation(eq.firm_b, seeds_b, alloc_b);
    if (joint_y0 != nullptr) {
      Eigen::Map<Eigen::VectorXd>(joint_y0, eq.joint_y0.size()) = eq.joint_y0;
    }
    if (clamped != nullptr) *clamped = eq.clamped;
  });
}

duop_status duop_seeding_capacity(const duop_network* net,
                                  const duop_params* params, const double* y0,
                                  duop_firm firm, double* capacity,
                                  int32_t* seeded_mask) {
  if (net == nullptr || params == nullptr || capacity == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto report =
        duopoly::seeding_capacity(net->net, to_core(*params),
                                  state_or_zero(y0, net->net.size()),
                                  to_core(firm));
    *capacity = report.capacity;
    if (seeded_mask != nullptr) {
      std::fill(seeded_mask, seeded_mask + net->net.size(), 0);
      for (int agent : report.seeded_agents) seeded_mask[agent] = 1;
    }
  });
}

duop_status duop_max_seed_count(const duop_params* params, int32_t n,
                                int32_t* k, duop_regime* regime) {
  if (params == nullptr || k == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    const auto count = duopoly::max_seed_count(to_core(*params), n);
    *k = count.k;
    if (regime != nullptr) *regime = from_core(count.regime);
  });
}

duop_status duop_classify_regime(const duop_params* params, int32_t n,
                                 duop_regime* out) {
  if (params == nullptr || out == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded(
      [&] { *out = from_core(duopoly::classify_regime(to_core(*params), n)); });
}

const char* duop_regime_name(duop_regime regime) {
  switch (regime) {
    case DUOP_REGIME_NONE_SEEDABLE:
      return "none_seedable";
    case DUOP_REGIME_ALL_SEEDABLE:
      return "all_seedable";
    case DUOP_REGIME_GRAPH_DEPENDENT:
      return "graph_dependent";
  }
  return "unknown";
}

duop_status duop_sweep(const duop_network* net, const duop_params* params,
                       const double* y0, duop_sweep_param parameter,
                       const double* grid, int32_t grid_len, int32_t jobs,
                       int32_t use_given_budget, double* seed_amount,
                       double* seed_spend, double* dq,
                       duop_monotonicity* verdict) {
  if (net == nullptr || params == nullptr || grid == nullptr ||
      seed_amount == nullptr || seed_spend == nullptr || dq == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    if (grid_len < 1) throw duopoly::ValidationError("grid is empty");
    const auto core = to_core(*params);
    std::optional<double> budget;
    if (use_given_budget != 0) budget = core.budget_a;
    const auto result = duopoly::sweep(
        net->net, core, state_or_zero(y0, net->net.size()),
        to_core(parameter), std::vector<double>(grid, grid + grid_len), jobs,
        budget);
    std::copy(result.seed_amount.begin(), result.seed_amount.end(),
              seed_amount);
    std::copy(result.seed_spend.begin(), result.seed_spend.end(), seed_spend);
    std::copy(result.dq.begin(), result.dq.end(), dq);
    if (verdict != nullptr) *verdict = from_core(result.verdict);
  });
}

duop_status duop_classify_monotonicity(const double* xs, int32_t len,
                                       double tol, duop_monotonicity* out) {
  if (xs == nullptr || out == nullptr || len < 0) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  *out = from_core(duopoly::classify_monotonicity(
      std::span<const double>(xs, static_cast<std::size_t>(len)), tol));
  tl_last_error.clear();
  return DUOP_OK;
}

const char* duop_monotonicity_name(duop_monotonicity verdict) {
  switch (verdict) {
    case DUOP_MONO_INCREASING:
      return "increasing";
    case DUOP_MONO_DECREASING:
      return "decreasing";
    case DUOP_MONO_CONSTANT:
      return "constant";
    case DUOP_MONO_NON_MONOTONE:
      return "non-monotone";
  }
  return "unknown";
}

duop_status duop_check_equal_budget(const duop_network* net,
                                    const duop_params* params,
                                    const double* y0, int32_t* holds) {
  if (net == nullptr || params == nullptr || holds == nullptr) {
    return fail(DUOP_ERR_INVALID_ARGUMENT, kNullArg);
  }
  return guarded([&] {
    *holds = duopoly::check_equal_budget(
                 net->net, to_core(*params),
                 state_or_zero(y0, net->net.size()))
                 ? 1
                 : 0;
  });
}

}  // extern "C"
