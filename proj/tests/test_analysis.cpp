#include "core/analysis.hpp"

#include <random>

#include "core/errors.hpp"
#include "core/network.hpp"
#include "doctest.h"
#include "helpers.hpp"

using duopoly::Firm;
using duopoly::Monotonicity;
using duopoly::Network;
using duopoly::sweep;
using duopoly::SweepParam;
using test_support::example1_params;

namespace {

const Eigen::VectorXd kZero15 = Eigen::VectorXd::Zero(15);

}  // namespace

TEST_CASE("monotonicity classification") {
  using duopoly::classify_monotonicity;
  const std::vector<double> up{0.0, 0.5, 0.5, 2.0};
  const std::vector<double> down{2.0, 0.5, 0.5, 0.0};
  const std::vector<double> flat{1.0, 1.0, 1.0};
  const std::vector<double> vee{2.0, 0.0, 2.0};
  const std::vector<double> single{3.0};
  CHECK(classify_monotonicity(up) == Monotonicity::increasing);
  CHECK(classify_monotonicity(down) == Monotonicity::decreasing);
  CHECK(classify_monotonicity(flat) == Monotonicity::constant);
  CHECK(classify_monotonicity(vee) == Monotonicity::non_monotone);
  CHECK(classify_monotonicity(single) == Monotonicity::constant);
  CHECK(duopoly::is_nondecreasing(up));
  CHECK_FALSE(duopoly::is_nonincreasing(up));
}

TEST_CASE("sweep validates its grid") {
  const Network net = Network::star(15);
  CHECK_THROWS_AS(sweep(net, example1_params(), kZero15, SweepParam::qa, {}),
                  duopoly::ValidationError);
  CHECK_THROWS_AS(
      sweep(net, example1_params(), kZero15, SweepParam::qa, {1.0, 1.0}),
      duopoly::ValidationError);
  CHECK_THROWS_AS(
      sweep(net, example1_params(), kZero15, SweepParam::alpha, {0.3, 0.6}),
      duopoly::ValidationError);
  CHECK_THROWS_AS(duopoly::sweep_alpha_delta(net, example1_params(), kZero15,
                                             SweepParam::qa, {1.0}),
                  duopoly::ValidationError);
  CHECK_THROWS_AS(duopoly::sweep_costs(net, example1_params(), kZero15,
                                       SweepParam::delta, {0.1}),
                  duopoly::ValidationError);
}

TEST_CASE("own quality sweep on the star is nondecreasing") {
  const auto result = duopoly::sweep_quality_own(
      Network::star(15), example1_params(), kZero15, {0.5, 1.0, 2.0, 4.0});
  // Threshold 10 qa-free values: 4.44, 2.5, 1.11 keep only the hub seeded;
  // at qa=4 the threshold 0.4 < 1 opens every agent.
  const std::vector<double> expected{0.5, 0.5, 0.5, 7.5};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.seed_spend[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  CHECK(duopoly::is_nondecreasing(result.seed_spend));
  CHECK(result.verdict == Monotonicity::increasing);
}

TEST_CASE("rival quality sweep is V-shaped around qa") {
  // 5-star centers sit at centrality 2 with the worked-example parameters,
  // between the extreme thresholds 1.6 (qb far) and 2.5 (qb = qa).
  const auto result = duopoly::sweep_quality_rival(
      Network::k_star(15, 5), example1_params(), kZero15,
      {0.25, 0.5, 1.0, 2.0, 4.0});
  const std::vector<double> expected{2.5, 0.0, 0.0, 0.0, 2.5};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.seed_spend[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  const std::vector<double> left(result.seed_spend.begin(),
                                 result.seed_spend.begin() + 3);
  const std::vector<double> right(result.seed_spend.begin() + 2,
                                  result.seed_spend.end());
  CHECK(duopoly::is_nonincreasing(left));
  CHECK(duopoly::is_nondecreasing(right));
  // Minimum attained at qb = qa.
  const double at_qa = result.seed_spend[2];
  for (double spend : result.seed_spend) CHECK(at_qa <= spend + 1e-12);
}

TEST_CASE("rival quality sweep is flat when nothing is ever seedable") {
  const auto result = duopoly::sweep_quality_rival(
      Network::balanced_ring(15, 2), example1_params(), kZero15,
      {0.25, 0.5, 1.0, 2.0, 4.0});
  for (double spend : result.seed_spend) CHECK(spend == 0.0);
  CHECK(result.verdict == Monotonicity::constant);
}

TEST_CASE("isolation-weight sweep is nondecreasing on the star") {
  const auto result = duopoly::sweep_alpha_delta(
      Network::star(15), example1_params(), kZero15, SweepParam::alpha,
      {0.5, 0.55, 0.6, 0.65, 0.7, 0.8, 0.9, 1.0});
  CHECK(duopoly::is_nondecreasing(result.seed_spend));
  CHECK(result.seed_spend.front() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(result.seed_spend.back() == doctest::Approx(7.5).epsilon(1e-12));
  CHECK(result.verdict == Monotonicity::increasing);
}

TEST_CASE("discount sweep is nonincreasing on the star") {
  const auto result = duopoly::sweep_alpha_delta(
      Network::star(15), example1_params(), kZero15, SweepParam::delta,
      {0.0, 0.25, 0.5, 0.75});
  const std::vector<double> expected{7.5, 7.5, 0.5, 0.0};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.seed_spend[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  CHECK(duopoly::is_nonincreasing(result.seed_spend));
  CHECK(result.verdict == Monotonicity::decreasing);
}

TEST_CASE("seeding-cost sweep shrinks the seeded amount") {
  const auto result = duopoly::sweep_costs(Network::star(15),
                                           example1_params(), kZero15,
                                           SweepParam::cs, {0.5, 1.0, 2.0, 4.0});
  const std::vector<double> expected{0.5, 0.5, 0.0, 0.0};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.seed_amount[i] ==
          doctest::Approx(expected[i]).epsilon(1e-12));
  }
  CHECK(duopoly::is_nonincreasing(result.seed_amount));
  CHECK(result.verdict == Monotonicity::decreasing);
}

TEST_CASE("quality-cost sweep grows seeding") {
  const auto result = duopoly::sweep_costs(Network::star(15),
                                           example1_params(), kZero15,
                                           SweepParam::cq, {0.5, 1.0, 2.0, 4.0});
  const std::vector<double> expected{0.0, 0.5, 0.5, 7.5};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.seed_spend[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
  CHECK(duopoly::is_nondecreasing(result.seed_spend));
}

TEST_CASE("scaling both costs together leaves the allocation unchanged") {
  auto params = example1_params();
  params.budget_a = 3.0;
  const Network net = Network::k_star(15, 3);
  const auto base = duopoly::optimal_allocation(net, params, kZero15, Firm::a);
  params.cs *= 2.0;
  params.cq *= 2.0;
  const auto scaled =
      duopoly::optimal_allocation(net, params, kZero15, Firm::a);
  CHECK((base.seeds - scaled.seeds).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("an explicit budget binds the sweep") {
  const auto result = sweep(Network::star(15), example1_params(), kZero15,
                            SweepParam::qa, {1.0, 2.0}, 1, /*budget=*/0.3);
  for (double amount : result.seed_amount) {
    CHECK(amount == doctest::Approx(0.3).epsilon(1e-12));
  }
  for (double dq : result.dq) CHECK(dq == 0.0);
}

TEST_CASE("concurrent sweep evaluation matches the serial one") {
  const std::vector<double> grid{0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  const auto serial = sweep(Network::k_star(15, 5), example1_params(), kZero15,
                            SweepParam::qb, grid, 1);
  const auto parallel = sweep(Network::k_star(15, 5), example1_params(),
                              kZero15, SweepParam::qb, grid, 4);
  CHECK(serial.seed_spend == parallel.seed_spend);
  CHECK(serial.seed_amount == parallel.seed_amount);
  CHECK(serial.dq == parallel.dq);
  CHECK(serial.verdict == parallel.verdict);
}

TEST_CASE("equal-budget comparison favors the higher quality firm") {
  auto params = example1_params();
  params.budget_a = params.budget_b = 4.0;
  CHECK(duopoly::check_equal_budget(Network::star(15), params, kZero15));

  params.qa = 1.0;
  params.qb = 2.0;
  CHECK(duopoly::check_equal_budget(Network::star(15), params, kZero15));
  CHECK(duopoly::check_equal_budget(Network::k_star(15, 5), params, kZero15));

  params.budget_a = params.budget_b = 0.0;
  CHECK(duopoly::check_equal_budget(Network::star(15), params, kZero15));

  params.budget_b = 1.0;
  CHECK_THROWS_AS(duopoly::check_equal_budget(Network::star(15), params,
                                              kZero15),
                  duopoly::ValidationError);
}

TEST_CASE("equal-budget comparison holds over random instances") {
  std::mt19937 rng(606);
  std::uniform_real_distribution<double> positive(0.3, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    duopoly::ModelParams params;
    params.alpha = 0.5 + 0.5 * std::generate_canonical<double, 53>(rng);
    params.delta = 0.9 * std::generate_canonical<double, 53>(rng);
    params.qa = positive(rng);
    params.qb = positive(rng);
    params.cs = positive(rng);
    params.cq = positive(rng);
    params.budget_a = params.budget_b =
        4.0 * std::generate_canonical<double, 53>(rng);
    const Network net = test_support::random_network(n, rng);
    CHECK(duopoly::check_equal_budget(net, params, Eigen::VectorXd::Zero(n)));
  }
}
