#pragma once

#include <map>
#include <string>

#include "rankagg/profile.hpp"

namespace rankagg {

// A lower-bound instance together with the closed-form quantities its family
// predicts for it (costs, voter count, bounds). Every predicted value must
// recompute exactly from the profile.
struct FamilyInstance {
  Profile profile;
  std::map<std::string, long long> predicted;
};

// Three rankings of [3] whose majority tournament is a directed triangle:
// one copy of (0,2,1), k copies of (1,0,2) and k copies of (2,1,0).
// Any two permutations are within a factor 2 in cost, and the worst ratio
// tends to 2 as k grows. Predicted: "m", "cost_pi1", "cost_pi6", "opt_cost".
FamilyInstance triangle_instance(long long k);

// k-1 copies of (0,1,2) plus one copy of (2,0,1). MC1, MC2 and MC3 all rank
// 2 above 1 here, which costs at least k-1 while the optimum costs 2.
// Predicted: "m", "opt_cost", "cost_rank_2_above_1".
FamilyInstance mc123_instance(long long k);

// n copies of the identity, n copies of (1,2,...,n-1,0) and one copy of
// (n-c,...,n-1,0,1,...,n-c-1). The majority tournament is strongly
// connected and MC4's stationary vector ranks n-1 into the top-heavy region.
// c defaults to floor(n/4). Predicted: "m", "cost_pi1".
FamilyInstance mc4_instance(int n, int c);
FamilyInstance mc4_instance(int n);

}  // namespace rankagg
