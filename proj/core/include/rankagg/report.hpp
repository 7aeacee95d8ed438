#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankagg/preference.hpp"
#include "rankagg/profile.hpp"

namespace rankagg {

struct AlgorithmRun {
  std::string name;
  std::optional<double> delta;  // set for mc4delta only
  Permutation ranking;
  long long cost = 0;  // c_R units
  std::optional<Rational> ratio;
  bool ratio_is_lower_bound = false;
};

struct RunReport {
  std::string family = "custom";
  long long parameter = 0;
  std::string instance;  // short human-readable descriptor, e.g. "n=3 m=21"
  std::optional<long long> opt_cost;
  bool opt_is_upper_bound = false;  // true when opt_cost is a bound, not exact
  std::vector<AlgorithmRun> runs;
};

// Valid algorithm names: mc1, mc2, mc3, mc4, mc4delta, copeland, borda,
// exact. With compute_opt set (n <= 20) every run carries its ratio against
// the exact optimum. Unknown names throw std::invalid_argument; n > 20 with
// compute_opt throws BudgetError.
RunReport run_compare(const Profile& profile, const std::vector<std::string>& algorithms,
                      double delta, bool compute_opt);

// One report per parameter value (triangle/mc123: k; mc4: n with c = n/4).
// For the mc4 family beyond n = 20 the optimum is replaced by the c_R(pi_1)
// upper bound and ratios are flagged as lower bounds.
std::vector<RunReport> sweep_family(const std::string& family, long long from, long long to,
                                    long long step, const std::vector<std::string>& algorithms,
                                    double delta);

enum class ReportFormat { kJson, kCsv };

std::string emit_report(const std::vector<RunReport>& reports, ReportFormat format);

}  // namespace rankagg
