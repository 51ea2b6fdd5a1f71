// Exercises the extern "C" surface through the shared library only: handle
// lifecycle, error codes, buffer contracts and the thread-local message.
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "duopoly.h"

namespace {

constexpr duop_params kExample1{0.5, 0.5, 1.0, 1.0, 1.0, 1.0, 0.0, 0.0};

struct Net {
  duop_network* ptr = nullptr;
  ~Net() { duop_network_free(ptr); }
};

std::string temp_path(const char* name) {
  return std::string("capi_") + name + ".tmp";
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(duop_version() == std::string("1.0.0"));
  CHECK(duop_status_name(DUOP_OK) == std::string("ok"));
  CHECK(duop_status_name(DUOP_ERR_ROW_SUM) == std::string("row_sum"));
}

TEST_CASE("params validation and error reporting") {
  CHECK(duop_params_validate(&kExample1) == DUOP_OK);
  CHECK(duop_last_error() == std::string());

  duop_params bad = kExample1;
  bad.alpha = 0.4;
  CHECK(duop_params_validate(&bad) == DUOP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(duop_last_error()).find("alpha") != std::string::npos);

  CHECK(duop_params_validate(nullptr) == DUOP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("network construction, inspection and typed errors") {
  Net star;
  REQUIRE(duop_network_star(15, &star.ptr) == DUOP_OK);
  CHECK(duop_network_size(star.ptr) == 15);

  std::vector<double> weights(15 * 15);
  REQUIRE(duop_network_weights(star.ptr, weights.data()) == DUOP_OK);
  CHECK(weights[1] == doctest::Approx(1.0 / 14.0));
  CHECK(weights[15] == 1.0);  // leaf row points at the hub

  Net copy;
  CHECK(duop_network_from_weights(15, weights.data(), 0, &copy.ptr) ==
        DUOP_OK);

  const double bad_diag[4] = {0.5, 0.5, 1.0, 0.0};
  Net reject;
  CHECK(duop_network_from_weights(2, bad_diag, 0, &reject.ptr) ==
        DUOP_ERR_DIAGONAL);
  CHECK(reject.ptr == nullptr);

  const double bad_sum[4] = {0.0, 0.9, 1.0, 0.0};
  CHECK(duop_network_from_weights(2, bad_sum, 0, &reject.ptr) ==
        DUOP_ERR_ROW_SUM);
  // Normalization rescues the row sums but not the diagonal.
  CHECK(duop_network_from_weights(2, bad_sum, 1, &reject.ptr) == DUOP_OK);
  duop_network_free(reject.ptr);
  reject.ptr = nullptr;

  CHECK(duop_network_star(1, &reject.ptr) == DUOP_ERR_SIZE);
  CHECK(duop_network_k_star(3, 3, &reject.ptr) == DUOP_ERR_SIZE);
  CHECK(duop_network_balanced_ring(5, 5, &reject.ptr) == DUOP_ERR_SIZE);
}

TEST_CASE("network file round-trip and io errors") {
  Net ring;
  REQUIRE(duop_network_balanced_ring(7, 3, &ring.ptr) == DUOP_OK);
  const std::string path = temp_path("ring");
  REQUIRE(duop_network_write(ring.ptr, path.c_str()) == DUOP_OK);

  Net reread;
  REQUIRE(duop_network_read(path.c_str(), 0, &reread.ptr) == DUOP_OK);
  std::vector<double> original(49), copy(49);
  duop_network_weights(ring.ptr, original.data());
  duop_network_weights(reread.ptr, copy.data());
  CHECK(original == copy);
  std::remove(path.c_str());

  Net missing;
  CHECK(duop_network_read("no_such_file.graph", 0, &missing.ptr) ==
        DUOP_ERR_IO);
}

TEST_CASE("initial state reader") {
  const std::string path = temp_path("y0");
  std::FILE* f = std::fopen(path.c_str(), "w");
  REQUIRE(f != nullptr);
  std::fputs("# state\n0.25 -0.25 0\n", f);
  std::fclose(f);
  double y0[3] = {0, 0, 0};
  CHECK(duop_read_initial_state(path.c_str(), 3, y0) == DUOP_OK);
  CHECK(y0[0] == 0.25);
  CHECK(duop_read_initial_state(path.c_str(), 4, y0) == DUOP_ERR_PARSE);
  std::remove(path.c_str());
}

TEST_CASE("simulation fills the trajectory buffer") {
  Net star;
  REQUIRE(duop_network_star(3, &star.ptr) == DUOP_OK);
  const double y0[3] = {0.5, -0.5, 0.0};
  std::vector<double> traj(2 * 3);
  REQUIRE(duop_simulate(star.ptr, &kExample1, y0, 1, traj.data()) == DUOP_OK);
  CHECK(traj[0] == 0.5);
  CHECK(traj[3] == doctest::Approx(-0.125));
  CHECK(traj[4] == doctest::Approx(0.25));
  CHECK(traj[5] == doctest::Approx(0.25));

  const double bad[3] = {0.7, 0.0, 0.0};
  CHECK(duop_simulate(star.ptr, &kExample1, bad, 1, traj.data()) ==
        DUOP_ERR_BOUNDS);
}

TEST_CASE("steady state through the C surface") {
  Net ring;
  REQUIRE(duop_network_balanced_ring(9, 4, &ring.ptr) == DUOP_OK);
  duop_params params = kExample1;
  params.qa = 3.0;
  double fixed[9];
  REQUIRE(duop_steady_state(ring.ptr, &params, fixed) == DUOP_OK);
  CHECK(fixed[0] == doctest::Approx(0.25));  // (qa-qb)/(2(qa+qb))
}

TEST_CASE("centrality with stats") {
  Net star;
  REQUIRE(duop_network_star(15, &star.ptr) == DUOP_OK);
  std::vector<double> v(15);
  duop_centrality_stats stats{};
  REQUIRE(duop_centrality(star.ptr, &kExample1, v.data(), &stats) == DUOP_OK);
  CHECK(v[0] == doctest::Approx(4.8));
  CHECK(stats.v_max == doctest::Approx(4.8));
  CHECK(stats.sum == doctest::Approx(20.0));
  CHECK(stats.sum_identity == doctest::Approx(20.0));

  std::vector<double> series(15);
  REQUIRE(duop_centrality_series(star.ptr, &kExample1, 1e-12,
                                 series.data()) == DUOP_OK);
  CHECK(series[0] == doctest::Approx(4.8));

  double v_bar = 0.0, hub = 0.0, leaf = 0.0;
  CHECK(duop_balanced_centrality(&kExample1, &v_bar) == DUOP_OK);
  CHECK(v_bar == doctest::Approx(4.0 / 3.0));
  CHECK(duop_star_centralities(15, &kExample1, &hub, &leaf) == DUOP_OK);
  CHECK(hub == doctest::Approx(4.8));
}

TEST_CASE("allocation quantities through the C surface") {
  double lambda = 0.0, vc_a = 0.0, vc_b = 0.0;
  CHECK(duop_lambda(&kExample1, 15, &lambda) == DUOP_OK);
  CHECK(lambda == doctest::Approx(5.0));
  CHECK(duop_thresholds(&kExample1, 15, &vc_a, &vc_b) == DUOP_OK);
  CHECK(vc_a == doctest::Approx(2.5));

  Net star;
  REQUIRE(duop_network_star(15, &star.ptr) == DUOP_OK);
  double ua = 0.0, ub = 0.0;
  CHECK(duop_firm_utilities(star.ptr, &kExample1, nullptr, &ua, &ub) ==
        DUOP_OK);
  CHECK(ua == doctest::Approx(15.0));
  CHECK(ub == doctest::Approx(15.0));

  duop_params budget = kExample1;
  budget.budget_a = 10.0;
  std::vector<double> seeds(15);
  duop_allocation alloc{};
  REQUIRE(duop_optimal_allocation(star.ptr, &budget, nullptr, DUOP_FIRM_A,
                                  seeds.data(), &alloc) == DUOP_OK);
  CHECK(seeds[0] == doctest::Approx(0.5));
  CHECK(alloc.seed_total == doctest::Approx(0.5));
  CHECK(alloc.dq == doctest::Approx(9.5));
  CHECK(alloc.spend_seeding + alloc.spend_quality == doctest::Approx(10.0));

  double capacity = 0.0;
  std::vector<int32_t> mask(15);
  CHECK(duop_seeding_capacity(star.ptr, &kExample1, nullptr, DUOP_FIRM_A,
                              &capacity, mask.data()) == DUOP_OK);
  CHECK(capacity == doctest::Approx(0.5));
  CHECK(mask[0] == 1);
  CHECK(mask[1] == 0);

  int32_t k = 0;
  duop_regime regime = DUOP_REGIME_NONE_SEEDABLE;
  CHECK(duop_max_seed_count(&kExample1, 15, &k, &regime) == DUOP_OK);
  CHECK(k == 3);
  CHECK(regime == DUOP_REGIME_GRAPH_DEPENDENT);
  CHECK(duop_regime_name(regime) == std::string("graph_dependent"));

  const double bad_y0[15] = {0.7};
  CHECK(duop_optimal_allocation(star.ptr, &budget, bad_y0, DUOP_FIRM_A,
                                seeds.data(), &alloc) == DUOP_ERR_CAPACITY);
}

TEST_CASE("equilibrium through the C surface") {
  Net star;
  REQUIRE(duop_network_star(15, &star.ptr) == DUOP_OK);
  duop_params params = kExample1;
  params.budget_a = params.budget_b = 2.0;
  std::vector<double> seeds_a(15), seeds_b(15), joint(15);
  duop_allocation alloc_a{}, alloc_b{};
  int32_t clamped = -1;
  REQUIRE(duop_equilibrium(star.ptr, &params, nullptr, seeds_a.data(),
                           &alloc_a, seeds_b.data(), &alloc_b, joint.data(),
                           &clamped) == DUOP_OK);
  CHECK(seeds_a == seeds_b);
  CHECK(clamped == 0);
  CHECK(joint[0] == doctest::Approx(0.0));
}

TEST_CASE("marginal utilities through the C surface") {
  std::vector<double> seeds_a(15, 0.0), seeds_b(15, 0.0), v(15, 1.0);
  seeds_a[0] = 0.5;
  v[0] = 4.8;
  double dua = 0.0, dub = 0.0;
  CHECK(duop_marginal_utilities(&kExample1, 15, seeds_a.data(),
                                seeds_b.data(), 0.0, 0.0, v.data(), &dua,
                                &dub) == DUOP_OK);
  CHECK(dua == doctest::Approx(2.4));
  CHECK(dub == doctest::Approx(-2.4));
}

TEST_CASE("sweep and equal-budget check through the C surface") {
  Net star;
  REQUIRE(duop_network_star(15, &star.ptr) == DUOP_OK);
  const double grid[4] = {0.0, 0.25, 0.5, 0.75};
  double amount[4], spend[4], dq[4];
  duop_monotonicity verdict = DUOP_MONO_NON_MONOTONE;
  REQUIRE(duop_sweep(star.ptr, &kExample1, nullptr, DUOP_SWEEP_DELTA, grid, 4,
                     2, 0, amount, spend, dq, &verdict) == DUOP_OK);
  CHECK(verdict == DUOP_MONO_DECREASING);
  CHECK(spend[0] == doctest::Approx(7.5));
  CHECK(spend[3] == doctest::Approx(0.0));

  const double bad_grid[2] = {0.5, 0.25};
  CHECK(duop_sweep(star.ptr, &kExample1, nullptr, DUOP_SWEEP_DELTA, bad_grid,
                   2, 1, 0, amount, spend, dq, nullptr) ==
        DUOP_ERR_INVALID_ARGUMENT);

  duop_monotonicity classified = DUOP_MONO_INCREASING;
  CHECK(duop_classify_monotonicity(spend, 4, 1e-12, &classified) == DUOP_OK);
  CHECK(classified == DUOP_MONO_DECREASING);
  CHECK(duop_monotonicity_name(classified) == std::string("decreasing"));

  duop_params equal = kExample1;
  equal.budget_a = equal.budget_b = 3.0;
  int32_t holds = 0;
  CHECK(duop_check_equal_budget(star.ptr, &equal, nullptr, &holds) == DUOP_OK);
  CHECK(holds == 1);
}
