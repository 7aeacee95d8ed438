#include "rankagg/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rankagg/detail/scc.hpp"

namespace rankagg {

MajorityTournament::MajorityTournament(int n, std::vector<std::vector<bool>> beats,
                                       std::vector<std::pair<int, int>> tie_pairs)
    : n_(n), beats_(std::move(beats)), tie_pairs_(std::move(tie_pairs)) {
  if (n_ < 1) throw std::invalid_argument("tournament requires n >= 1");
  if (static_cast<int>(beats_.size()) != n_)
    throw std::invalid_argument("tournament beats matrix must be n x n");
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(beats_[i].size()) != n_)
      throw std::invalid_argument("tournament beats matrix must be n x n");
    if (beats_[i][i]) throw std::invalid_argument("element cannot beat itself");
    for (int j = 0; j < n_; ++j)
      if (j != i && beats_[i][j] == beats_[j][i])
        throw std::invalid_argument("tournament must orient every pair exactly once");
  }
}

std::vector<int> MajorityTournament::beaten_by(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (beats_[i][j]) out.push_back(j);
  return out;
}

MajorityTournament build_tournament(const PreferenceGraph& g) {
  const int n = g.size();
  const long long m = g.voters();
  std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
  std::vector<std::pair<int, int>> ties;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const long long twice = 2 * g.count(i, j);
      if (twice > m) {
        beats[i][j] = true;
      } else if (twice < m) {
        beats[j][i] = true;
      } else {
        beats[i][j] = true;  // exact split, smaller index wins
        ties.emplace_back(i, j);
      }
    }
  return MajorityTournament(n, std::move(beats), std::move(ties));
}

std::vector<int> copeland_scores(const MajorityTournament& t) {
  std::vector<int> score(t.size(), 0);
  for (int i = 0; i < t.size(); ++i)
    for (int j = 0; j < t.size(); ++j)
      if (t.beats(i, j)) ++score[i];
  return score;
}

Permutation copeland_ranking(const MajorityTournament& t) {
  const auto score = copeland_scores(t);
  std::vector<int> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return score[a] > score[b]; });
  return Permutation::from_order(std::move(order));
}

long long tournament_cost(const Permutation& sigma, const MajorityTournament& t) {
  if (sigma.size() != t.size())
    throw std::invalid_argument("tournament_cost: size mismatch");
  long long back = 0;
  const auto& order = sigma.order();
  for (int p = 0; p < t.size(); ++p)
    for (int q = p + 1; q < t.size(); ++q)
      if (t.beats(order[q], order[p])) ++back;
  return back;
}

std::vector<std::vector<int>> scc_decomposition(const MajorityTournament& t) {
  const int n = t.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (t.beats(i, j)) adj[i].push_back(j);
  // Tarjan emits sinks of the condensation first; winners go first here.
  auto comps = detail::strongly_connected_components(n, adj);
  std::reverse(comps.begin(), comps.end());
  for (auto& comp : comps) std::sort(comp.begin(), comp.end());
  return comps;
}

MajorityTournament restrict_tournament(const MajorityTournament& t,
                                       const std::vector<int>& elements) {
  const int k = static_cast<int>(elements.size());
  if (k < 1) throw std::invalid_argument("restrict_tournament: empty element set");
  std::vector<int> local(t.size(), -1);
  for (int p = 0; p < k; ++p) {
    const int e = elements[p];
    if (e < 0 || e >= t.size())
      throw std::invalid_argument("restrict_tournament: element out of range");
    if (local[e] != -1) throw std::invalid_argument("restrict_tournament: repeated element");
    local[e] = p;
  }
  std::vector<std::vector<bool>> beats(k, std::vector<bool>(k, false));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (p != q) beats[p][q] = t.beats(elements[p], elements[q]);
  std::vector<std::pair<int, int>> ties;
  for (const auto& [a, b] : t.tie_pairs())
    if (local[a] != -1 && local[b] != -1)
      ties.emplace_back(std::min(local[a], local[b]), std::max(local[a], local[b]));
  return MajorityTournament(k, std::move(beats), std::move(ties));
}

}  // namespace rankagg
