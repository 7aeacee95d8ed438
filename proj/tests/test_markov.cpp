#include <doctest.h>

#include <cmath>
#include <random>

#include "rankagg/adversarial.hpp"
#include "rankagg/errors.hpp"
#include "rankagg/markov.hpp"
#include "test_util.hpp"

using namespace rankagg;

namespace {

MajorityTournament three_cycle() {
  return MajorityTournament(3, {{false, false, true},
                                {true, false, false},
                                {false, true, false}});
}

void check_row(const TransitionMatrix& P, int row, const std::vector<double>& expected) {
  for (int j = 0; j < P.size(); ++j)
    CHECK(P(row, j) == doctest::Approx(expected[j]).epsilon(1e-12));
}

}  // namespace

TEST_CASE("MC1/MC2/MC3 matrices on the mc123 family at k=2") {
  const auto profile = mc123_instance(2).profile;
  SUBCASE("MC1") {
    const auto P = build_chain(profile, ChainVariant::MC1);
    check_row(P, 0, {2.0 / 3, 0, 1.0 / 3});
    check_row(P, 1, {2.0 / 5, 2.0 / 5, 1.0 / 5});
    check_row(P, 2, {1.0 / 4, 1.0 / 4, 1.0 / 2});
  }
  SUBCASE("MC2") {
    const auto P = build_chain(profile, ChainVariant::MC2);
    check_row(P, 0, {3.0 / 4, 0, 1.0 / 4});
  }
  SUBCASE("MC3") {
    const auto P = build_chain(profile, ChainVariant::MC3);
    check_row(P, 1, {1.0 / 3, 1.0 / 2, 1.0 / 6});
  }
  SUBCASE("general k matches the closed forms") {
    for (long long k : {3, 5, 10}) {
      const auto p = mc123_instance(k).profile;
      const double kd = static_cast<double>(k);
      check_row(build_chain(p, ChainVariant::MC1), 0, {kd / (kd + 1), 0, 1 / (kd + 1)});
      check_row(build_chain(p, ChainVariant::MC2), 2,
                {(kd - 1) / (3 * kd), (kd - 1) / (3 * kd), (kd + 2) / (3 * kd)});
      check_row(build_chain(p, ChainVariant::MC3), 0,
                {(3 * kd - 1) / (3 * kd), 0, 1 / (3 * kd)});
    }
  }
}

TEST_CASE("build_chain rejects MC4") {
  CHECK_THROWS_AS(build_chain(mc123_instance(2).profile, ChainVariant::MC4),
                  std::invalid_argument);
}

TEST_CASE("MC4 matrix construction") {
  SUBCASE("3-cycle at delta=0") {
    const auto P = build_mc4(three_cycle(), 0.0);
    check_row(P, 0, {2.0 / 3, 1.0 / 3, 0});
  }
  SUBCASE("transitive n=2 at delta=0") {
    const MajorityTournament t(2, {{false, true}, {false, false}});
    const auto P = build_mc4(t, 0.0);
    check_row(P, 0, {1.0, 0.0});
    check_row(P, 1, {0.5, 0.5});
  }
  SUBCASE("3-cycle stationary is uniform for any delta") {
    for (double delta : {0.0, 0.3, 0.9}) {
      const auto x = stationary_distribution(build_mc4(three_cycle(), delta));
      for (double v : x.x) CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(build_mc4(three_cycle(), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_mc4(three_cycle(), -0.1), std::invalid_argument);
}

TEST_CASE("transition matrix validation") {
  CHECK_THROWS_AS(TransitionMatrix(2, {0.5, 0.4, 0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(TransitionMatrix(2, {1.5, -0.5, 0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("stationary distribution on fixed chains") {
  SUBCASE("2-state balance") {
    const auto x = stationary_distribution(TransitionMatrix(2, {0.5, 0.5, 0.25, 0.75}));
    CHECK(x.x[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(x.x[1] == doctest::Approx(2.0 / 3).epsilon(1e-12));
  }
  SUBCASE("MC1 at k=2") {
    const auto x =
        stationary_distribution(build_chain(mc123_instance(2).profile, ChainVariant::MC1));
    CHECK(x.x[0] == doctest::Approx(15.0 / 32).epsilon(1e-10));
    CHECK(x.x[1] == doctest::Approx(5.0 / 32).epsilon(1e-10));
    CHECK(x.x[2] == doctest::Approx(12.0 / 32).epsilon(1e-10));
  }
  SUBCASE("doubly stochastic symmetric chain is uniform") {
    const auto x = stationary_distribution(
        TransitionMatrix(3, {0.5, 0.25, 0.25, 0.25, 0.5, 0.25, 0.25, 0.25, 0.5}));
    for (double v : x.x) CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-12));
  }
}

TEST_CASE("stationary solver rejects reducible chains") {
  // Two absorbing states.
  CHECK_THROWS_AS(stationary_distribution(TransitionMatrix(2, {1, 0, 0, 1})),
                  ReducibleChainError);
  // Transitive tournament: MC4 support is not strongly connected.
  const MajorityTournament t(2, {{false, true}, {false, false}});
  CHECK_THROWS_AS(stationary_distribution(build_mc4(t, 0.0)), ReducibleChainError);
}

TEST_CASE("direct solve agrees with power iteration") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto profile = testutil::random_profile(n, 1 + 2 * static_cast<int>(rng() % 3), rng);
    const auto P = build_chain(profile, ChainVariant::MC3);  // diagonal > 0, aperiodic
    try {
      const auto x = stationary_distribution(P);
      const auto y = testutil::power_iteration(P);
      for (int i = 0; i < n; ++i) CHECK(x.x[i] == doctest::Approx(y[i]).epsilon(1e-7));
    } catch (const ReducibleChainError&) {
      // fine, covered by the recursion tests
    }
  }
}

TEST_CASE("chain ranking on fixed instances") {
  CHECK(chain_ranking(mc123_instance(2).profile, ChainVariant::MC1) ==
        Permutation::from_order({0, 2, 1}));
  CHECK(chain_ranking(Profile(3, {{Permutation(3), 1}}), ChainVariant::MC4, 0.0) ==
        Permutation(3));
  CHECK_THROWS_AS(chain_ranking(mc123_instance(2).profile, ChainVariant::MC1, 0.5),
                  std::invalid_argument);
}

TEST_CASE("scc-recursive ranking on reducible MC1-3 chains") {
  // Unanimous transitive profile: every chain peels the top element first.
  const Profile p(4, {{Permutation(4), 3}});
  for (auto v : {ChainVariant::MC1, ChainVariant::MC2, ChainVariant::MC3})
    CHECK(chain_ranking(p, v) == Permutation(4));
}

TEST_CASE("mc4 position behavior on the section-5 family") {
  const auto t = build_tournament(build_graph(mc4_instance(16, 4).profile));
  const auto x = stationary_distribution(build_mc4(t, 0.0));
  CHECK(x.x[15] > x.x[10]);
  CHECK(x.x[15] > x.x[11]);
  const auto ranking = mc4_ranking(t, 0.0);
  for (int e : {12, 13, 14}) CHECK(ranking.prefers(e, 15));
}

TEST_CASE("mc4 fixed point residual") {
  SUBCASE("symmetric 3-cycle at delta=0 is exact") {
    const StationaryVector x{{1.0 / 3, 1.0 / 3, 1.0 / 3}};
    CHECK(mc4_fixed_point_residual(three_cycle(), x, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("solver output satisfies the identity") {
    const auto t = build_tournament(build_graph(mc4_instance(16, 4).profile));
    const auto x = stationary_distribution(build_mc4(t, 0.0));
    CHECK(mc4_fixed_point_residual(t, x, 0.0) <= 1e-9);
    const auto xd = stationary_distribution(build_mc4(t, 0.5));
    CHECK(mc4_fixed_point_residual(t, xd, 0.5) <= 1e-9);
  }
  SUBCASE("condorcet winner rejected at delta=0") {
    const MajorityTournament t(2, {{false, true}, {false, false}});
    const StationaryVector x{{1.0, 0.0}};
    CHECK_THROWS_AS(mc4_fixed_point_residual(t, x, 0.0), std::invalid_argument);
    CHECK(mc4_fixed_point_residual(t, stationary_distribution(build_mc4(t, 0.5)), 0.5) <= 1e-9);
  }
}

TEST_CASE("section-4 lemmas: x_2 > x_1 for MC1, MC2, MC3") {
  for (long long k : {2, 5, 10, 50}) {
    const auto profile = mc123_instance(k).profile;
    for (auto v : {ChainVariant::MC1, ChainVariant::MC2, ChainVariant::MC3}) {
      const auto x = stationary_distribution(build_chain(profile, v));
      CHECK(x.x[2] > x.x[1]);
    }
  }
}

TEST_CASE("corollary: strict P-set containment forces the MC4 order") {
  std::mt19937 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const auto t = testutil::random_tournament(n, rng);
    const auto ranking = mc4_ranking(t, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        bool superset = t.beats(i, j);  // j itself cannot be in P_j
        for (int e = 0; e < n && superset; ++e)
          if (e != i && e != j && t.beats(j, e) && !t.beats(i, e)) superset = false;
        if (superset) {
          CHECK(ranking.prefers(i, j));
          ++checked;
        }
      }
  }
  CHECK(checked > 0);
}

TEST_CASE("mc4delta stationary bounds and delta^2 dominance, randomized") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const auto t = testutil::random_tournament(n, rng);
    const auto score = copeland_scores(t);
    for (double delta : {0.2, 0.5, 0.8}) {
      const auto x = stationary_distribution(build_mc4(t, delta));
      for (double v : x.x) {
        CHECK(v >= delta / n - 1e-12);
        CHECK(v <= 1.0 / (delta * n) + 1e-12);
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && score[i] * delta * delta > score[j]) CHECK(x.x[i] > x.x[j]);
    }
  }
}

TEST_CASE("large delta makes MC4 sort by copeland score") {
  std::mt19937 rng(15);
  for (int n = 3; n <= 10; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = testutil::random_tournament(n, rng);
      const double delta = 1.0 - 1.0 / (2 * n + 2);
      const auto x = stationary_distribution(build_mc4(t, delta));
      const auto score = copeland_scores(t);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (score[i] > score[j]) CHECK(x.x[i] > x.x[j]);
    }
  }
}
