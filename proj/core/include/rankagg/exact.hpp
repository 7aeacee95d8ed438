#pragma once

#include "rankagg/profile.hpp"

namespace rankagg {

// Objective for the exact solvers: total Kendall distance to the profile
// (c_R) or back-arc count on the majority tournament (c_T).
enum class Objective { kRankings, kTournament };

struct OptimalResult {
  Permutation ranking;
  long long cost = 0;
};

// Globally optimal permutation by dynamic programming over element subsets,
// O(2^n * n^2). Among minimizers, returns the lexicographically smallest
// order sequence. Throws BudgetError for n > 20.
OptimalResult kemeny_optimal(const Profile& profile, Objective objective = Objective::kRankings);

// Full enumeration of all n! permutations with the same tie rule; the
// independent oracle for kemeny_optimal. Throws BudgetError for n > 8.
OptimalResult brute_force_optimal(const Profile& profile,
                                  Objective objective = Objective::kRankings);

}  // namespace rankagg
