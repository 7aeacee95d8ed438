#pragma once

#include <vector>

namespace rankagg {

// A ranking of the elements {0,...,n-1}. Stored both as a rank function
// (rank_of(e) = position of e, 0 is the top) and its inverse (element_at(p)).
// Literals throughout the project use the row-vector convention: the order()
// sequence lists elements from highest-ranked to lowest.
class Permutation {
 public:
  // Identity ranking on n elements.
  explicit Permutation(int n);

  // Build from the row-vector form: order[p] is the element at position p.
  static Permutation from_order(std::vector<int> order);

  // Build from the rank function: ranks[e] is the position of element e.
  static Permutation from_ranks(std::vector<int> ranks);

  int size() const { return static_cast<int>(rank_.size()); }
  int rank_of(int element) const { return rank_[element]; }
  int element_at(int position) const { return inv_[position]; }
  const std::vector<int>& ranks() const { return rank_; }
  const std::vector<int>& order() const { return inv_; }

  // True when this ranking places a above b.
  bool prefers(int a, int b) const { return rank_[a] < rank_[b]; }

  Permutation reversed() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Permutation(std::vector<int> rank, std::vector<int> inv);

  std::vector<int> rank_;
  std::vector<int> inv_;
};

// Number of element pairs ordered oppositely by a and b. O(n log n) by
// inversion counting. Throws std::invalid_argument on size mismatch.
long long kendall_distance(const Permutation& a, const Permutation& b);

}  // namespace rankagg
