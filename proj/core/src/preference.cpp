#include "rankagg/preference.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace rankagg {

PreferenceGraph::PreferenceGraph(int n, long long voters,
                                 std::vector<std::vector<long long>> counts)
    : n_(n), voters_(voters), counts_(std::move(counts)) {
  if (n_ < 1) throw std::invalid_argument("preference graph requires n >= 1");
  if (voters_ < 1) throw std::invalid_argument("preference graph requires m >= 1");
  if (static_cast<int>(counts_.size()) != n_)
    throw std::invalid_argument("preference graph counts must be n x n");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(counts_[i].size()) != n_)
      throw std::invalid_argument("preference graph counts must be n x n");
    if (counts_[i][i] != 0)
      throw std::invalid_argument("preference graph diagonal must be zero");
    for (long long c : counts_[i])
      if (c < 0) throw std::invalid_argument("preference graph counts must be nonnegative");
  }
}

PreferenceGraph build_graph(const Profile& profile) {
  const int n = profile.size();
  std::vector<std::vector<long long>> counts(n, std::vector<long long>(n, 0));
  for (const auto& entry : profile.entries()) {
    const auto& order = entry.ranking.order();
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) counts[order[p]][order[q]] += entry.count;
  }
  return PreferenceGraph(n, profile.voters(), std::move(counts));
}

std::vector<ConstraintViolation> check_probability_constraints(const PreferenceGraph& g) {
  std::vector<ConstraintViolation> out;
  const int n = g.size();
  const long long m = g.voters();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.count(i, j) + g.count(j, i) != m)
        out.push_back({ConstraintViolation::Kind::kPairSum, i, j, 0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (g.count(i, j) + g.count(j, k) < g.count(i, k))
          out.push_back({ConstraintViolation::Kind::kTriangle, i, j, k});
      }
    }
  return out;
}

Rational graph_cost(const Permutation& sigma, const PreferenceGraph& g) {
  if (sigma.size() != g.size())
    throw std::invalid_argument("graph_cost: size mismatch");
  long long back = 0;
  const auto& order = sigma.order();
  for (int p = 0; p < g.size(); ++p)
    for (int q = p + 1; q < g.size(); ++q) back += g.count(order[q], order[p]);
  return Rational(back, g.voters());
}

Permutation borda_ranking(const PreferenceGraph& g) {
  const int n = g.size();
  std::vector<long long> indegree(n, 0);  // m * weighted indegree
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i) indegree[i] += g.count(j, i);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return indegree[a] < indegree[b]; });
  return Permutation::from_order(std::move(order));
}

}  // namespace rankagg
