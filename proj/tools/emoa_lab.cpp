// emoa-lab: batch runner for SMS-EMOA experiments on OneJumpZeroJump.

#include "emoa/emoa.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

void print_summary(std::ostream& os, const std::vector<emoa::SummaryRow>& rows) {
  os << std::left << std::setw(5) << "n" << std::setw(4) << "k" << std::setw(6) << "mu"
     << std::setw(16) << "strategy" << std::right << std::setw(8) << "ok/runs"
     << std::setw(16) << "mean" << std::setw(16) << "std" << std::setw(10) << "std/mean"
     << '\n';
  for (const auto& r : rows) {
    os << std::left << std::setw(5) << r.n << std::setw(4) << r.k << std::setw(6) << r.mu
       << std::setw(16) << r.strategy << std::right << std::setw(8)
       << (std::to_string(r.successes) + "/" + std::to_string(r.runs)) << std::fixed
       << std::setprecision(1) << std::setw(16) << r.mean_gens << std::setw(16) << r.std_gens
       << std::setprecision(3) << std::setw(10) << r.std_over_mean() << '\n';
  }
}

void progress_line(std::size_t done, std::size_t total) {
  if (done == total || done % 50 == 0) {
    std::cerr << "\r" << done << "/" << total << " trials" << (done == total ? "\n" : "")
              << std::flush;
  }
}

fs::path summary_path_for(const fs::path& trials) {
  fs::path p = trials;
  p.replace_extension();
  p += ".summary.csv";
  return p;
}

struct RunOptions {
  std::string problem = "ojzj";
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> mu;
  std::string strategy;
  std::optional<double> subset_fraction;
  std::size_t runs = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = emoa::default_budget;
  std::string out;
  unsigned threads = 0;
  bool no_timing = false;
  bool quiet = false;
};

int do_run(const RunOptions& o) {
  emoa::ExperimentPlan plan;
  plan.problem = o.problem;
  plan.grid = {{o.n, o.k}};
  if (o.mu) {
    const std::size_t mu = *o.mu;
    plan.mu_rule = [mu](std::size_t, std::size_t) { return mu; };
  }
  plan.strategies = {{o.strategy, o.subset_fraction}};
  plan.runs_per_cell = o.runs;
  plan.base_seed = o.seed;
  plan.budget = o.budget;
  plan.trials_csv = o.out;
  plan.summary_csv = summary_path_for(o.out);
  plan.threads = o.threads;
  plan.record_wall_time = !o.no_timing;
  if (!o.quiet) plan.progress = progress_line;

  emoa::EmoaConfig probe;
  probe.problem = {o.problem, o.n, o.k};
  probe.mu = plan.mu_rule(o.n, o.k);
  probe.strategy = plan.strategies.front().build();
  for (const auto& w : emoa::config_warnings(probe)) std::cerr << "warning: " << w << '\n';

  const auto result = emoa::run_experiment(plan);
  if (!o.quiet) print_summary(std::cout, result.summary);
  return 0;
}

struct FigureOptions {
  std::string out_dir;
  std::size_t runs = 1000;
  std::uint64_t seed = 0;
  std::uint64_t budget = emoa::default_budget;
  unsigned threads = 0;
  bool no_timing = false;
};

int do_figure3(const FigureOptions& o) {
  const fs::path dir(o.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw emoa::io_error("cannot create '" + dir.string() + "': " + ec.message());

  auto plan = emoa::figure3_plan(o.runs, o.seed);
  plan.budget = o.budget;
  plan.threads = o.threads;
  plan.record_wall_time = !o.no_timing;
  plan.trials_csv = dir / "trials.csv";
  plan.summary_csv = dir / "summary.csv";
  plan.progress = progress_line;

  std::ofstream dat(dir / "figure3.dat");
  std::ofstream svg(dir / "figure3.svg");
  if (!dat || !svg) throw emoa::io_error("cannot write plot files in '" + dir.string() + "'");

  const auto result = emoa::run_experiment(plan);
  emoa::write_plot_data(dat, std::span<const emoa::SummaryRow>(result.summary));
  emoa::write_svg_chart(svg, std::span<const emoa::SummaryRow>(result.summary));
  print_summary(std::cout, result.summary);

  std::cout << "\nrank-sum comparison (stochastic vs deterministic):\n";
  for (std::size_t n = 10; n <= 30; n += 5) {
    std::vector<double> det;
    std::vector<double> sto;
    for (const auto& t : result.trials) {
      if (t.n != n || !t.front_found) continue;
      (t.strategy == "deterministic" ? det : sto).push_back(static_cast<double>(t.generations));
    }
    if (det.size() < emoa::rank_sum_min_sample || sto.size() < emoa::rank_sum_min_sample) {
      std::cout << "  n=" << n << ": too few successful runs\n";
      continue;
    }
    const auto r = emoa::rank_sum_compare(sto, det);
    std::cout << "  n=" << n << ": U=" << std::setprecision(1) << std::fixed << r.u
              << " p=" << std::scientific << std::setprecision(3) << r.p_value
              << std::defaultfloat << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SMS-EMOA experiments with deterministic and stochastic population update"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Run seeded trials for one (n, k, strategy) cell");
  run_cmd->add_option("--problem", run.problem, "Problem name")->capture_default_str();
  run_cmd->add_option("--n", run.n, "Problem size")->required();
  run_cmd->add_option("--k", run.k, "Jump parameter")->required();
  run_cmd->add_option("--mu", run.mu, "Population size (default 2(n-2k+4))");
  run_cmd->add_option("--strategy", run.strategy, "Population update")
      ->required()
      ->check(CLI::IsMember({"deterministic", "stochastic"}));
  run_cmd->add_option("--subset-fraction", run.subset_fraction,
                      "Stochastic update: competing fraction of |Q| (default 0.5)");
  run_cmd->add_option("--runs", run.runs, "Independent runs")->required();
  run_cmd->add_option("--seed", run.seed, "Base seed; run i uses seed + i")->required();
  run_cmd->add_option("--budget", run.budget, "Generation budget per run")
      ->capture_default_str();
  run_cmd->add_option("--out", run.out, "Trial CSV path (summary goes to <stem>.summary.csv)")
      ->required();
  run_cmd->add_option("--threads", run.threads, "Worker threads (0 = all cores)");
  run_cmd->add_flag("--no-timing", run.no_timing, "Write wall_ms as 0 for byte-stable output");
  run_cmd->add_flag("--quiet", run.quiet, "No progress or summary on the terminal");

  FigureOptions fig;
  auto* fig_cmd = app.add_subcommand(
      "figure3", "Deterministic vs stochastic update, k=2, n=10..30, mu=2(n-2k+4)");
  fig_cmd->add_option("--out-dir", fig.out_dir, "Output directory")->required();
  fig_cmd->add_option("--runs", fig.runs, "Runs per cell")->capture_default_str();
  fig_cmd->add_option("--seed", fig.seed, "Base seed")->capture_default_str();
  fig_cmd->add_option("--budget", fig.budget, "Generation budget per run")
      ->capture_default_str();
  fig_cmd->add_option("--threads", fig.threads, "Worker threads (0 = all cores)");
  fig_cmd->add_flag("--no-timing", fig.no_timing, "Write wall_ms as 0 for byte-stable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return do_run(run);
    if (*fig_cmd) return do_figure3(fig);
  } catch (const emoa::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
