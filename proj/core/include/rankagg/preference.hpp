#pragma once

#include <boost/rational.hpp>
#include <vector>

#include "rankagg/profile.hpp"

namespace rankagg {

using Rational = boost::rational<long long>;

// Pairwise preference counts over the complete digraph on [n].
// count(i,j) is the number of voters ranking i above j; the arc weight is
// w_ij = count(i,j)/m. Hand-built instances may violate the probability
// constraints; check_probability_constraints reports such violations.
class PreferenceGraph {
 public:
  PreferenceGraph(int n, long long voters, std::vector<std::vector<long long>> counts);

  int size() const { return n_; }
  long long voters() const { return voters_; }
  long long count(int i, int j) const { return counts_[i][j]; }
  Rational weight(int i, int j) const { return Rational(counts_[i][j], voters_); }

 private:
  int n_;
  long long voters_;
  std::vector<std::vector<long long>> counts_;
};

PreferenceGraph build_graph(const Profile& profile);

struct ConstraintViolation {
  enum class Kind { kPairSum, kTriangle };
  Kind kind;
  int i = 0, j = 0, k = 0;  // k unused for pair-sum violations

  friend bool operator==(const ConstraintViolation&, const ConstraintViolation&) = default;
};

// Checks w_ij + w_ji = 1 for all pairs and w_ij + w_jk >= w_ik for all
// triples, in exact arithmetic. Empty result means all constraints hold.
std::vector<ConstraintViolation> check_probability_constraints(const PreferenceGraph& g);

// Sum of back-arc weights of sigma, exact: sum of w_ji over pairs ranked i
// above j by sigma.
Rational graph_cost(const Permutation& sigma, const PreferenceGraph& g);

// Elements in nondecreasing order of weighted indegree sum_j w_ji; ties
// broken by ascending element index.
Permutation borda_ranking(const PreferenceGraph& g);

}  // namespace rankagg
