#pragma once

#include <utility>
#include <vector>

#include "rankagg/preference.hpp"

namespace rankagg {

// Orientation of each element pair toward the majority winner. Exactly one of
// beats(i,j), beats(j,i) holds for every pair. tie_pairs records the pairs
// whose majority count was exactly m/2 and was resolved by the index rule.
class MajorityTournament {
 public:
  MajorityTournament(int n, std::vector<std::vector<bool>> beats,
                     std::vector<std::pair<int, int>> tie_pairs = {});

  int size() const { return n_; }
  bool beats(int i, int j) const { return beats_[i][j]; }
  const std::vector<std::pair<int, int>>& tie_pairs() const { return tie_pairs_; }

  // P_i, the elements i beats, in ascending order.
  std::vector<int> beaten_by(int i) const;

 private:
  int n_;
  std::vector<std::vector<bool>> beats_;
  std::vector<std::pair<int, int>> tie_pairs_;
};

// Majority orientation of g; exact m/2 splits go to the smaller index and are
// recorded in tie_pairs.
MajorityTournament build_tournament(const PreferenceGraph& g);

// score[i] = |P_i|.
std::vector<int> copeland_scores(const MajorityTournament& t);

// Elements by Copeland score, nonincreasing; ties by ascending index.
Permutation copeland_ranking(const MajorityTournament& t);

// Number of pairs sigma ranks i above j while j beats i in t.
long long tournament_cost(const Permutation& sigma, const MajorityTournament& t);

// Strongly connected components of the beats digraph, in the condensation
// order: every element of an earlier component beats every element of a later
// one. Each component is listed in ascending element order.
std::vector<std::vector<int>> scc_decomposition(const MajorityTournament& t);

// Sub-tournament on the given elements, relabeled to {0,...,k-1} by position
// in `elements`. Tie records are restricted and relabeled alongside.
MajorityTournament restrict_tournament(const MajorityTournament& t,
                                       const std::vector<int>& elements);

}  // namespace rankagg
