#include "rankagg/profile.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rankagg {

Profile::Profile(int n, std::vector<ProfileEntry> entries)
    : n_(n), voters_(0), entries_(std::move(entries)) {
  if (n_ < 1) throw std::invalid_argument("profile requires n >= 1");
  if (entries_.empty()) throw std::invalid_argument("profile requires at least one ranking");
  for (const auto& e : entries_) {
    if (e.ranking.size() != n_)
      throw std::invalid_argument("profile entry has mismatched element count");
    if (e.count < 1) throw std::invalid_argument("profile multiplicity must be positive");
    voters_ += e.count;
  }
}

long long profile_cost(const Permutation& sigma, const Profile& profile) {
  if (sigma.size() != profile.size())
    throw std::invalid_argument("profile_cost: size mismatch");
  long long total = 0;
  for (const auto& e : profile.entries())
    total += e.count * kendall_distance(sigma, e.ranking);
  return total;
}

Profile project_profile(const Profile& profile, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("project_profile: empty subset");
  std::vector<int> local(profile.size(), -1);
  for (int t = 0; t < static_cast<int>(subset.size()); ++t) {
    const int e = subset[t];
    if (e < 0 || e >= profile.size())
      throw std::invalid_argument("project_profile: element out of range");
    if (local[e] != -1) throw std::invalid_argument("project_profile: repeated element");
    local[e] = t;
  }
  std::vector<ProfileEntry> projected;
  for (const auto& entry : profile.entries()) {
    // Walk the ranking from the top, keeping subset elements in order.
    std::vector<int> order;
    order.reserve(subset.size());
    for (int p = 0; p < profile.size(); ++p) {
      const int e = entry.ranking.element_at(p);
      if (local[e] != -1) order.push_back(local[e]);
    }
    Permutation restricted = Permutation::from_order(std::move(order));
    auto it = std::find_if(projected.begin(), projected.end(), [&](const ProfileEntry& pe) {
      return pe.ranking == restricted;
    });
    if (it != projected.end()) {
      it->count += entry.count;
    } else {
      projected.push_back({std::move(restricted), entry.count});
    }
  }
  return Profile(static_cast<int>(subset.size()), std::move(projected));
}

}  // namespace rankagg
