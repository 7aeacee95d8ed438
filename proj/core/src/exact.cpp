#include "rankagg/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "rankagg/errors.hpp"
#include "rankagg/preference.hpp"
#include "rankagg/tournament.hpp"

namespace rankagg {

namespace {

// penalty[u][v] = cost incurred when the output ranks u above v.
std::vector<std::vector<long long>> penalty_matrix(const Profile& profile,
                                                   Objective objective) {
  const int n = profile.size();
  std::vector<std::vector<long long>> pen(n, std::vector<long long>(n, 0));
  const PreferenceGraph g = build_graph(profile);
  if (objective == Objective::kRankings) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) pen[u][v] = g.count(v, u);
  } else {
    const MajorityTournament t = build_tournament(g);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && t.beats(v, u)) pen[u][v] = 1;
  }
  return pen;
}

}  // namespace

OptimalResult kemeny_optimal(const Profile& profile, Objective objective) {
  const int n = profile.size();
  if (n > 20) throw BudgetError("kemeny_optimal: n > 20 exceeds the subset DP budget");
  const auto pen = penalty_matrix(profile, objective);

  // best[S] = least cost of ordering the elements outside S, given that the
  // elements of S are already placed above them (that interaction is paid).
  const std::size_t full = std::size_t{1} << n;
  std::vector<long long> best(full, 0);
  for (std::size_t s = full - 1; s-- > 0;) {
    long long b = std::numeric_limits<long long>::max();
    for (int j = 0; j < n; ++j) {
      if (s & (std::size_t{1} << j)) continue;
      long long cost = best[s | (std::size_t{1} << j)];
      for (int i = 0; i < n; ++i)
        if (i != j && !(s & (std::size_t{1} << i))) cost += pen[j][i];
      b = std::min(b, cost);
    }
    best[s] = b;
  }

  // Greedy smallest-index reconstruction gives the lexicographically
  // smallest optimal order.
  std::vector<int> order;
  order.reserve(n);
  std::size_t s = 0;
  while (static_cast<int>(order.size()) < n) {
    for (int j = 0; j < n; ++j) {
      if (s & (std::size_t{1} << j)) continue;
      long long cost = best[s | (std::size_t{1} << j)];
      for (int i = 0; i < n; ++i)
        if (i != j && !(s & (std::size_t{1} << i))) cost += pen[j][i];
      if (cost == best[s]) {
        order.push_back(j);
        s |= std::size_t{1} << j;
        break;
      }
    }
  }
  return {Permutation::from_order(std::move(order)), best[0]};
}

OptimalResult brute_force_optimal(const Profile& profile, Objective objective) {
  const int n = profile.size();
  if (n > 8) throw BudgetError("brute_force_optimal: n > 8 exceeds the enumeration budget");
  const auto pen = penalty_matrix(profile, objective);
  auto cost_of = [&](const std::vector<int>& order) {
    long long c = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) c += pen[order[p]][order[q]];
    return c;
  };

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> best_order = order;
  long long best_cost = cost_of(order);
  while (std::next_permutation(order.begin(), order.end())) {
    const long long c = cost_of(order);
    if (c < best_cost) {  // lexicographic enumeration keeps the first minimizer
      best_cost = c;
      best_order = order;
    }
  }
  return {Permutation::from_order(std::move(best_order)), best_cost};
}

}  // namespace rankagg
