#pragma once

#include <vector>

#include "rankagg/profile.hpp"
#include "rankagg/tournament.hpp"

namespace rankagg {

enum class ChainVariant { MC1, MC2, MC3, MC4 };

// Row-stochastic n x n chain. Construction rejects matrices whose rows do not
// sum to 1 within 1e-12 or whose entries leave [0,1].
class TransitionMatrix {
 public:
  TransitionMatrix(int n, std::vector<double> row_major);

  int size() const { return n_; }
  double operator()(int i, int j) const { return p_[static_cast<std::size_t>(i) * n_ + j]; }

  // Arcs {(i,j): i != j, p_ij > 0} of the support digraph.
  std::vector<std::vector<int>> support() const;

 private:
  int n_;
  std::vector<double> p_;
};

struct StationaryVector {
  std::vector<double> x;

  int size() const { return static_cast<int>(x.size()); }
};

// Transition matrix of MC1, MC2 or MC3 on the profile; multiplicities weight
// the per-ranking sums. MC4 is tournament-based, see build_mc4.
TransitionMatrix build_chain(const Profile& profile, ChainVariant variant);

// MC4 with restart probability delta in [0,1): p_ij = 1/n when j beats i,
// delta/n otherwise (i != j), remainder on the diagonal. delta = 0 is the
// original MC4.
TransitionMatrix build_mc4(const MajorityTournament& t, double delta);

// Unique probability vector x with xP = x, residual at most 1e-10. Throws
// ReducibleChainError when the support digraph is not strongly connected.
StationaryVector stationary_distribution(const TransitionMatrix& P);

// Elements sorted by stationary probability, nonincreasing. Values within
// 1e-9 of each other count as tied and fall back to ascending element index.
Permutation ranking_from_stationary(const StationaryVector& x);

// Full chain-based aggregation. Strongly connected chains are ranked by the
// stationary distribution; otherwise the sink component of the support
// digraph (the recurrent class) is ranked first via a chain rebuilt on the
// sub-instance, and the remainder is ranked recursively. delta applies to
// MC4 only.
Permutation chain_ranking(const Profile& profile, ChainVariant variant, double delta = 0.0);

// MC4 ranking straight from a tournament; reducible cases (delta = 0 only)
// peel strongly connected components in beating order.
Permutation mc4_ranking(const MajorityTournament& t, double delta = 0.0);

// Max over j of |x_j * (n - (1-delta)(|P_j|+1)) - (delta + (1-delta) sum of
// x_i over i in P_j)|; at delta = 0 this is the fixed-point identity
// x_j (n - |P_j| - 1) = sum_{i in P_j} x_i. Rejects delta = 0 in the
// presence of a Condorcet winner (degenerate denominator).
double mc4_fixed_point_residual(const MajorityTournament& t, const StationaryVector& x,
                                double delta);

}  // namespace rankagg
