#include "rankagg/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "rankagg/adversarial.hpp"
#include "rankagg/errors.hpp"
#include "rankagg/exact.hpp"
#include "rankagg/markov.hpp"
#include "rankagg/tournament.hpp"

namespace rankagg {

namespace {

std::string decimal6(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
  return buf;
}

std::string format_delta(double delta) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", delta);
  return buf;
}

Permutation run_algorithm(const std::string& name, const Profile& profile, double delta) {
  if (name == "mc1") return chain_ranking(profile, ChainVariant::MC1);
  if (name == "mc2") return chain_ranking(profile, ChainVariant::MC2);
  if (name == "mc3") return chain_ranking(profile, ChainVariant::MC3);
  if (name == "mc4") return chain_ranking(profile, ChainVariant::MC4, 0.0);
  if (name == "mc4delta") return chain_ranking(profile, ChainVariant::MC4, delta);
  if (name == "copeland") return copeland_ranking(build_tournament(build_graph(profile)));
  if (name == "borda") return borda_ranking(build_graph(profile));
  if (name == "exact") return kemeny_optimal(profile).ranking;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::optional<Rational> ratio_against(long long cost, long long opt) {
  if (opt > 0) return Rational(cost, opt);
  if (cost == 0) return Rational(1, 1);
  return std::nullopt;  // cost > 0 against opt = 0: unbounded
}

}  // namespace

RunReport run_compare(const Profile& profile, const std::vector<std::string>& algorithms,
                      double delta, bool compute_opt) {
  RunReport report;
  std::ostringstream desc;
  desc << "n=" << profile.size() << " m=" << profile.voters();
  report.instance = desc.str();
  if (compute_opt) report.opt_cost = kemeny_optimal(profile).cost;
  for (const auto& name : algorithms) {
    AlgorithmRun run{name, std::nullopt, run_algorithm(name, profile, delta), 0,
                     std::nullopt, false};
    if (name == "mc4delta") run.delta = delta;
    run.cost = profile_cost(run.ranking, profile);
    if (report.opt_cost) run.ratio = ratio_against(run.cost, *report.opt_cost);
    report.runs.push_back(std::move(run));
  }
  return report;
}

std::vector<RunReport> sweep_family(const std::string& family, long long from, long long to,
                                    long long step, const std::vector<std::string>& algorithms,
                                    double delta) {
  if (step < 1) throw std::invalid_argument("sweep step must be positive");
  if (from > to) throw std::invalid_argument("empty sweep range");
  std::vector<RunReport> reports;
  for (long long param = from; param <= to; param += step) {
    FamilyInstance instance = [&] {
      if (family == "triangle") return triangle_instance(param);
      if (family == "mc123") return mc123_instance(param);
      if (family == "mc4") return mc4_instance(static_cast<int>(param));
      throw std::invalid_argument("unknown family: " + family);
    }();
    const bool exact_opt = instance.profile.size() <= 20;
    RunReport report =
        run_compare(instance.profile, algorithms, delta, exact_opt);
    report.family = family;
    report.parameter = param;
    if (!exact_opt) {
      // Fall back to the family's closed-form upper bound on the optimum.
      report.opt_cost = instance.predicted.at("cost_pi1");
      report.opt_is_upper_bound = true;
      for (auto& run : report.runs) {
        run.ratio = Rational(run.cost, *report.opt_cost);
        run.ratio_is_lower_bound = true;
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string emit_report(const std::vector<RunReport>& reports, ReportFormat format) {
  if (format == ReportFormat::kCsv) {
    std::ostringstream out;
    out << "family,parameter,algorithm,delta,cost,opt_cost,ratio_num,ratio_den,"
           "ratio_decimal,is_lower_bound\n";
    for (const auto& report : reports)
      for (const auto& run : report.runs) {
        out << report.family << ',' << report.parameter << ',' << run.name << ','
            << (run.delta ? format_delta(*run.delta) : "") << ',' << run.cost << ',';
        if (report.opt_cost) out << *report.opt_cost;
        out << ',';
        if (run.ratio)
          out << run.ratio->numerator() << ',' << run.ratio->denominator() << ','
              << decimal6(*run.ratio);
        else
          out << ",,";
        out << ',' << (run.ratio_is_lower_bound ? 1 : 0) << '\n';
      }
    return out.str();
  }

  nlohmann::json root;
  root["reports"] = nlohmann::json::array();
  for (const auto& report : reports) {
    nlohmann::json jr;
    jr["family"] = report.family;
    jr["parameter"] = report.parameter;
    jr["instance"] = report.instance;
    if (report.opt_cost)
      jr["opt_cost"] = *report.opt_cost;
    else
      jr["opt_cost"] = nullptr;
    jr["opt_is_upper_bound"] = report.opt_is_upper_bound;
    jr["algorithms"] = nlohmann::json::array();
    for (const auto& run : report.runs) {
      nlohmann::json ja;
      ja["name"] = run.name;
      if (run.delta)
        ja["delta"] = *run.delta;
      else
        ja["delta"] = nullptr;
      ja["ranking"] = run.ranking.order();
      ja["cost"] = run.cost;
      if (run.ratio) {
        ja["ratio"] = {{"num", run.ratio->numerator()},
                       {"den", run.ratio->denominator()},
                       {"decimal", decimal6(*run.ratio)}};
      } else {
        ja["ratio"] = nullptr;
      }
      ja["is_lower_bound"] = run.ratio_is_lower_bound;
      jr["algorithms"].push_back(std::move(ja));
    }
    root["reports"].push_back(std::move(jr));
  }
  return root.dump(2) + "\n";
}

}  // namespace rankagg
