#include "rankagg/markov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "rankagg/detail/scc.hpp"
#include "rankagg/errors.hpp"
#include "rankagg/preference.hpp"

namespace rankagg {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr double kResidualTol = 1e-10;
constexpr double kTieTol = 1e-9;

double residual_inf(const TransitionMatrix& P, const std::vector<double>& x) {
  double worst = 0.0;
  for (int j = 0; j < P.size(); ++j) {
    double xj = 0.0;
    for (int i = 0; i < P.size(); ++i) xj += x[i] * P(i, j);
    worst = std::max(worst, std::abs(xj - x[j]));
  }
  return worst;
}

// Solves (P^T - I) x = 0 with the last equation replaced by sum x_i = 1,
// by Gaussian elimination with partial pivoting.
std::vector<double> solve_balance(const TransitionMatrix& P) {
  const int n = P.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = P(j, i) - (i == j ? 1.0 : 0.0);
  }
  for (int j = 0; j < n; ++j) a[n - 1][j] = 1.0;
  a[n - 1][n] = 1.0;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    if (a[col][col] == 0.0) throw std::runtime_error("stationary solve: singular system");
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = a[r][n];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

std::vector<int> sink_component(const std::vector<std::vector<int>>& comps,
                                const std::vector<std::vector<int>>& adj, int n) {
  std::vector<int> comp_of(n, -1);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int v : comps[c]) comp_of[v] = c;
  // Sinks of the condensation are the recurrent classes; pick the one
  // containing the smallest element.
  std::vector<int> best;
  int best_min = n;
  for (const auto& comp : comps) {
    bool sink = true;
    for (int v : comp)
      for (int w : adj[v])
        if (comp_of[w] != comp_of[v]) sink = false;
    if (!sink) continue;
    const int lo = *std::min_element(comp.begin(), comp.end());
    if (lo < best_min) {
      best_min = lo;
      best = comp;
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::vector<int> chain_ranking_order(const Profile& profile, ChainVariant variant) {
  const TransitionMatrix P = build_chain(profile, variant);
  const auto adj = P.support();
  const auto comps = detail::strongly_connected_components(P.size(), adj);
  if (comps.size() == 1)
    return ranking_from_stationary(stationary_distribution(P)).order();

  std::vector<int> head = sink_component(comps, adj, P.size());
  std::vector<char> in_head(P.size(), 0);
  for (int v : head) in_head[v] = 1;
  std::vector<int> rest;
  for (int v = 0; v < P.size(); ++v)
    if (!in_head[v]) rest.push_back(v);

  std::vector<int> order;
  auto append = [&](const std::vector<int>& elements) {
    if (elements.size() == 1) {
      order.push_back(elements[0]);
      return;
    }
    const auto sub = chain_ranking_order(project_profile(profile, elements), variant);
    for (int local : sub) order.push_back(elements[local]);
  };
  append(head);
  append(rest);
  return order;
}

}  // namespace

TransitionMatrix::TransitionMatrix(int n, std::vector<double> row_major)
    : n_(n), p_(std::move(row_major)) {
  if (n_ < 1) throw std::invalid_argument("transition matrix requires n >= 1");
  if (p_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("transition matrix must be n x n");
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) {
      const double v = (*this)(i, j);
      if (v < 0.0 || v > 1.0)
        throw std::invalid_argument("transition probability outside [0,1]");
      row += v;
    }
    if (std::abs(row - 1.0) > kRowSumTol)
      throw std::invalid_argument("transition matrix row does not sum to 1");
  }
}

std::vector<std::vector<int>> TransitionMatrix::support() const {
  std::vector<std::vector<int>> adj(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) > 0.0) adj[i].push_back(j);
  return adj;
}

TransitionMatrix build_chain(const Profile& profile, ChainVariant variant) {
  if (variant == ChainVariant::MC4)
    throw std::invalid_argument("build_chain handles MC1-MC3; use build_mc4");
  const int n = profile.size();
  const long long m = profile.voters();
  std::vector<double> p(static_cast<std::size_t>(n) * n, 0.0);
  auto at = [&](int i, int j) -> double& { return p[static_cast<std::size_t>(i) * n + j]; };

  for (int i = 0; i < n; ++i) {
    switch (variant) {
      case ChainVariant::MC1: {
        long long denom = 0;  // sum over rankings of x_ik = rank(i)+1
        for (const auto& e : profile.entries()) denom += e.count * (e.ranking.rank_of(i) + 1);
        for (const auto& e : profile.entries()) {
          const int ri = e.ranking.rank_of(i);
          for (int j = 0; j < n; ++j)
            if (e.ranking.rank_of(j) <= ri) at(i, j) += static_cast<double>(e.count) / denom;
        }
        break;
      }
      case ChainVariant::MC2: {
        for (const auto& e : profile.entries()) {
          const int ri = e.ranking.rank_of(i);
          const double share =
              static_cast<double>(e.count) / (static_cast<double>(ri + 1) * m);
          for (int j = 0; j < n; ++j)
            if (e.ranking.rank_of(j) <= ri) at(i, j) += share;
        }
        break;
      }
      case ChainVariant::MC3: {
        const double denom = static_cast<double>(m) * n;
        for (const auto& e : profile.entries()) {
          const int ri = e.ranking.rank_of(i);
          for (int j = 0; j < n; ++j) {
            if (j == i)
              at(i, i) += e.count * static_cast<double>(n - ri) / denom;
            else if (e.ranking.rank_of(j) <= ri)
              at(i, j) += e.count / denom;
          }
        }
        break;
      }
      case ChainVariant::MC4:
        break;  // unreachable
    }
  }
  return TransitionMatrix(n, std::move(p));
}

TransitionMatrix build_mc4(const MajorityTournament& t, double delta) {
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::invalid_argument("build_mc4: delta must lie in [0,1)");
  const int n = t.size();
  std::vector<double> p(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const double v = t.beats(j, i) ? 1.0 / n : delta / n;
      p[static_cast<std::size_t>(i) * n + j] = v;
      off += v;
    }
    p[static_cast<std::size_t>(i) * n + i] = 1.0 - off;
  }
  return TransitionMatrix(n, std::move(p));
}

StationaryVector stationary_distribution(const TransitionMatrix& P) {
  const auto comps = detail::strongly_connected_components(P.size(), P.support());
  if (comps.size() != 1)
    throw ReducibleChainError("chain support is not strongly connected; use scc-recursive ranking");
  std::vector<double> x = solve_balance(P);
  double sum = 0.0;
  for (double& v : x) {
    if (v < 0.0) {
      if (v < -kResidualTol) throw std::runtime_error("stationary solve: negative entry");
      v = 0.0;
    }
    sum += v;
  }
  for (double& v : x) v /= sum;
  if (residual_inf(P, x) > kResidualTol)
    throw std::runtime_error("stationary solve: residual too large");
  return StationaryVector{std::move(x)};
}

Permutation ranking_from_stationary(const StationaryVector& x) {
  const int n = x.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (x.x[a] != x.x[b]) return x.x[a] > x.x[b];
    return a < b;
  });
  // Near-equal stationary values count as ties, resolved by element index.
  int start = 0;
  for (int t = 1; t <= n; ++t) {
    if (t == n || x.x[order[t - 1]] - x.x[order[t]] > kTieTol) {
      std::sort(order.begin() + start, order.begin() + t);
      start = t;
    }
  }
  return Permutation::from_order(std::move(order));
}

Permutation chain_ranking(const Profile& profile, ChainVariant variant, double delta) {
  if (variant != ChainVariant::MC4 && delta != 0.0)
    throw std::invalid_argument("delta applies to MC4 only");
  if (variant == ChainVariant::MC4)
    return mc4_ranking(build_tournament(build_graph(profile)), delta);
  return Permutation::from_order(chain_ranking_order(profile, variant));
}

Permutation mc4_ranking(const MajorityTournament& t, double delta) {
  const auto comps = scc_decomposition(t);
  if (delta > 0.0 || comps.size() == 1)
    return ranking_from_stationary(stationary_distribution(build_mc4(t, delta)));
  std::vector<int> order;
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      order.push_back(comp[0]);
      continue;
    }
    const auto sub = mc4_ranking(restrict_tournament(t, comp), delta);
    for (int local : sub.order()) order.push_back(comp[local]);
  }
  return Permutation::from_order(std::move(order));
}

double mc4_fixed_point_residual(const MajorityTournament& t, const StationaryVector& x,
                                double delta) {
  if (!(delta >= 0.0 && delta < 1.0))
    throw std::invalid_argument("mc4_fixed_point_residual: delta must lie in [0,1)");
  if (t.size() != x.size())
    throw std::invalid_argument("mc4_fixed_point_residual: size mismatch");
  const int n = t.size();
  const auto score = copeland_scores(t);
  if (delta == 0.0)
    for (int s : score)
      if (s == n - 1)
        throw std::invalid_argument(
            "mc4_fixed_point_residual: Condorcet winner makes the delta=0 identity degenerate");
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    double inflow = 0.0;
    for (int i = 0; i < n; ++i)
      if (t.beats(j, i)) inflow += x.x[i];
    const double lhs = x.x[j] * (n - (1.0 - delta) * (score[j] + 1));
    const double rhs = delta + (1.0 - delta) * inflow;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace rankagg
