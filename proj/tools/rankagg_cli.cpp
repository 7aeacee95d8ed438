#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankagg/rankagg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitBudgetExceeded = 2;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_ranking(const rankagg::Permutation& p) {
  for (int i = 0; i < p.size(); ++i) std::cout << (i ? " " : "") << p.element_at(i);
  std::cout << '\n';
}

rankagg::ReportFormat parse_format(const std::string& name) {
  if (name == "json") return rankagg::ReportFormat::kJson;
  if (name == "csv") return rankagg::ReportFormat::kCsv;
  throw std::invalid_argument("unknown format: " + name);
}

int run(int argc, char** argv) {
  CLI::App app{"Rank aggregation toolkit: Markov-chain, Copeland and Borda "
               "aggregators, exact Kemeny solver, adversarial families"};
  app.require_subcommand(1);

  std::string input, algo, algos_csv = "mc4,copeland,borda", family, emit_path, format = "json";
  double delta = 0.0;
  long long param = 0, from = 0, to = 0, step = 1;
  bool with_opt = false;

  auto* aggregate = app.add_subcommand("aggregate", "Run one algorithm on a profile file");
  aggregate->add_option("--algo", algo, "mc1|mc2|mc3|mc4|mc4delta|copeland|borda|exact")
      ->required();
  aggregate->add_option("--delta", delta, "restart probability for mc4delta");
  aggregate->add_option("--input", input, "profile file ('-' for stdin)")->required();

  auto* exact = app.add_subcommand("exact", "Exact Kemeny optimum of a profile file");
  exact->add_option("--input", input, "profile file ('-' for stdin)")->required();

  auto* compare = app.add_subcommand("compare", "Run several algorithms and report costs");
  compare->add_option("--algos", algos_csv, "comma-separated algorithm list");
  compare->add_option("--input", input, "profile file ('-' for stdin)")->required();
  compare->add_option("--delta", delta, "restart probability for mc4delta");
  compare->add_flag("--opt", with_opt, "also compute the exact optimum and ratios");
  compare->add_option("--format", format, "json|csv");

  auto* adversarial = app.add_subcommand("adversarial", "Generate a lower-bound instance");
  adversarial->add_option("--family", family, "triangle|mc123|mc4")->required();
  adversarial->add_option("--param", param, "k for triangle/mc123, n for mc4")->required();
  adversarial->add_option("--emit", emit_path, "write the profile to this file");

  auto* sweep = app.add_subcommand("sweep", "Sweep a family parameter and report ratios");
  sweep->add_option("--family", family, "triangle|mc123|mc4")->required();
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--step", step);
  sweep->add_option("--algos", algos_csv, "comma-separated algorithm list");
  sweep->add_option("--delta", delta, "restart probability for mc4delta");
  sweep->add_option("--format", format, "csv|json");

  CLI11_PARSE(app, argc, argv);

  if (aggregate->parsed()) {
    const auto profile = rankagg::parse_profile(read_file(input));
    auto report = rankagg::run_compare(profile, {algo}, delta, false);
    print_ranking(report.runs[0].ranking);
    std::cout << "cost " << report.runs[0].cost << '\n';
  } else if (exact->parsed()) {
    const auto profile = rankagg::parse_profile(read_file(input));
    const auto result = rankagg::kemeny_optimal(profile);
    print_ranking(result.ranking);
    std::cout << "cost " << result.cost << '\n';
  } else if (compare->parsed()) {
    const auto profile = rankagg::parse_profile(read_file(input));
    auto report = rankagg::run_compare(profile, split_names(algos_csv), delta, with_opt);
    std::cout << rankagg::emit_report({report}, parse_format(format));
  } else if (adversarial->parsed()) {
    const auto instance = [&] {
      if (family == "triangle") return rankagg::triangle_instance(param);
      if (family == "mc123") return rankagg::mc123_instance(param);
      if (family == "mc4") return rankagg::mc4_instance(static_cast<int>(param));
      throw std::invalid_argument("unknown family: " + family);
    }();
    const std::string text = rankagg::serialize_profile(instance.profile);
    if (emit_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(emit_path);
      if (!out) throw std::runtime_error("cannot write: " + emit_path);
      out << text;
    }
    for (const auto& [key, value] : instance.predicted)
      std::cout << "# " << key << " = " << value << '\n';
  } else if (sweep->parsed()) {
    auto reports = rankagg::sweep_family(family, from, to, step, split_names(algos_csv), delta);
    std::cout << rankagg::emit_report(reports, parse_format(format));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rankagg::BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudgetExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
