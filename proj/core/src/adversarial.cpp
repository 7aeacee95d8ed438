#include "rankagg/adversarial.hpp"

#include <numeric>
#include <stdexcept>

namespace rankagg {

FamilyInstance triangle_instance(long long k) {
  if (k < 1) throw std::invalid_argument("triangle_instance requires k >= 1");
  Profile profile(3, {{Permutation::from_order({0, 2, 1}), 1},
                      {Permutation::from_order({1, 0, 2}), k},
                      {Permutation::from_order({2, 1, 0}), k}});
  return {std::move(profile),
          {{"m", 2 * k + 1},
           {"cost_pi1", 4 * k + 1},
           {"cost_pi6", 2 * k + 2},
           {"opt_cost", 2 * k + 2}}};
}

FamilyInstance mc123_instance(long long k) {
  if (k < 2) throw std::invalid_argument("mc123_instance requires k >= 2");
  Profile profile(3, {{Permutation::from_order({0, 1, 2}), k - 1},
                      {Permutation::from_order({2, 0, 1}), 1}});
  return {std::move(profile),
          {{"m", k}, {"opt_cost", 2}, {"cost_rank_2_above_1", k - 1}}};
}

FamilyInstance mc4_instance(int n, int c) {
  if (n < 12) throw std::invalid_argument("mc4_instance requires n >= 12");
  if (c < 1 || 2 * c >= n) throw std::invalid_argument("mc4_instance requires 1 <= c < n/2");
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<int> shifted(n);  // (1, 2, ..., n-1, 0)
  for (int p = 0; p < n - 1; ++p) shifted[p] = p + 1;
  shifted[n - 1] = 0;
  std::vector<int> block(n);  // (n-c, ..., n-1, 0, 1, ..., n-c-1)
  for (int p = 0; p < c; ++p) block[p] = n - c + p;
  for (int p = c; p < n; ++p) block[p] = p - c;
  Profile profile(n, {{Permutation::from_order(std::move(identity)), n},
                      {Permutation::from_order(std::move(shifted)), n},
                      {Permutation::from_order(std::move(block)), 1}});
  const long long cost_pi1 =
      static_cast<long long>(n) * (n - 1) + static_cast<long long>(c) * (n - c);
  return {std::move(profile), {{"m", 2LL * n + 1}, {"cost_pi1", cost_pi1}}};
}

FamilyInstance mc4_instance(int n) { return mc4_instance(n, n / 4); }

}  // namespace rankagg
