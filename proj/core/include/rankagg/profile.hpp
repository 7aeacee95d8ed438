#pragma once

#include <vector>

#include "rankagg/permutation.hpp"

namespace rankagg {

struct ProfileEntry {
  Permutation ranking;
  long long count = 1;  // multiplicity of this ranking among the voters

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

// A multiset of input rankings over a common element set [n].
class Profile {
 public:
  Profile(int n, std::vector<ProfileEntry> entries);

  int size() const { return n_; }
  long long voters() const { return voters_; }
  const std::vector<ProfileEntry>& entries() const { return entries_; }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  int n_;
  long long voters_;
  std::vector<ProfileEntry> entries_;
};

// Total Kendall distance from sigma to the profile, multiplicities included.
long long profile_cost(const Permutation& sigma, const Profile& profile);

// Restrict every ranking to the given elements and relabel them to
// {0,...,|subset|-1} by their position in subset, preserving relative order.
// Identical restricted rankings are merged, summing multiplicities.
Profile project_profile(const Profile& profile, const std::vector<int>& subset);

}  // namespace rankagg
