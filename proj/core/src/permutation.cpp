#include "rankagg/permutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rankagg {

namespace {

void check_bijection(const std::vector<int>& v) {
  if (v.empty()) throw std::invalid_argument("permutation must have n >= 1");
  std::vector<char> seen(v.size(), 0);
  for (int e : v) {
    if (e < 0 || e >= static_cast<int>(v.size()))
      throw std::invalid_argument("permutation entry out of range");
    if (seen[e]) throw std::invalid_argument("permutation entry repeated");
    seen[e] = 1;
  }
}

std::vector<int> invert(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  for (int i = 0; i < static_cast<int>(v.size()); ++i) out[v[i]] = i;
  return out;
}

// Counts inversions of seq by merge sort; seq is consumed as scratch.
long long count_inversions(std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> buf(n);
  long long inversions = 0;
  for (int width = 1; width < n; width *= 2) {
    for (int lo = 0; lo < n; lo += 2 * width) {
      const int mid = std::min(lo + width, n);
      const int hi = std::min(lo + 2 * width, n);
      int i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (seq[i] <= seq[j]) {
          buf[k++] = seq[i++];
        } else {
          inversions += mid - i;
          buf[k++] = seq[j++];
        }
      }
      while (i < mid) buf[k++] = seq[i++];
      while (j < hi) buf[k++] = seq[j++];
    }
    std::swap(seq, buf);
  }
  return inversions;
}

}  // namespace

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have n >= 1");
  rank_.resize(n);
  inv_.resize(n);
  for (int i = 0; i < n; ++i) rank_[i] = inv_[i] = i;
}

Permutation::Permutation(std::vector<int> rank, std::vector<int> inv)
    : rank_(std::move(rank)), inv_(std::move(inv)) {}

Permutation Permutation::from_order(std::vector<int> order) {
  check_bijection(order);
  auto rank = invert(order);
  return Permutation(std::move(rank), std::move(order));
}

Permutation Permutation::from_ranks(std::vector<int> ranks) {
  check_bijection(ranks);
  auto inv = invert(ranks);
  return Permutation(std::move(ranks), std::move(inv));
}

Permutation Permutation::reversed() const {
  std::vector<int> order(inv_.rbegin(), inv_.rend());
  return from_order(std::move(order));
}

long long kendall_distance(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("kendall_distance: size mismatch");
  const int n = a.size();
  // Read b's ranks in a's order; discordant pairs become inversions.
  std::vector<int> seq(n);
  for (int p = 0; p < n; ++p) seq[p] = b.rank_of(a.element_at(p));
  return count_inversions(seq);
}

}  // namespace rankagg
