#ifndef EMOA_HARNESS_HPP_
#define EMOA_HARNESS_HPP_

#include "emoa/core.hpp"
#include "emoa/sms_emoa.hpp"
#include "emoa/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace emoa {

/// mu = 2(n - 2k + 4), the population size used for the runtime comparison.
inline std::size_t default_mu(std::size_t n, std::size_t k) {
  if (n + 8 < 4 * k) throw invalid_parameter("default_mu: n - 2k + 4 must be positive");
  return 2 * (n + 4 - 2 * k);
}

struct StrategyChoice {
  std::string name;                        // "deterministic" | "stochastic"
  std::optional<double> subset_fraction;   // stochastic only

  [[nodiscard]] UpdateStrategy build() const { return parse_strategy(name, subset_fraction); }

  /// Label written to CSV. A non-default fraction is appended after ':'.
  [[nodiscard]] std::string label() const {
    if (!subset_fraction) return name;
    std::ostringstream os;
    os << name << ':' << *subset_fraction;
    return os.str();
  }
};

using MuRule = std::function<std::size_t(std::size_t n, std::size_t k)>;

struct ExperimentPlan {
  std::string problem = "ojzj";
  std::vector<std::pair<std::size_t, std::size_t>> grid;  // (n, k) cells
  MuRule mu_rule = default_mu;
  std::vector<StrategyChoice> strategies;
  std::size_t runs_per_cell = 1;
  std::uint64_t base_seed = 0;
  std::uint64_t budget = default_budget;
  /// Empty paths are not written.
  std::filesystem::path trials_csv;
  std::filesystem::path summary_csv;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
  /// When false, wall_ms is written as 0 so that reruns are byte-identical.
  bool record_wall_time = true;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct TrialResult {
  std::string problem;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t mu = 0;
  std::string strategy;
  std::uint64_t seed = 0;
  std::size_t run_index = 0;
  std::uint64_t generations = 0;
  bool front_found = false;
  std::uint64_t wall_ms = 0;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

struct SummaryRow {
  std::string problem;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t mu = 0;
  std::string strategy;
  std::size_t runs = 0;
  double mean_gens = 0.0;
  double std_gens = 0.0;
  double median_gens = 0.0;
  double min_gens = 0.0;
  double max_gens = 0.0;
  std::size_t successes = 0;

  [[nodiscard]] double std_over_mean() const {
    return mean_gens > 0.0 ? std_gens / mean_gens : std::numeric_limits<double>::quiet_NaN();
  }
};

struct ExperimentResult {
  std::vector<TrialResult> trials;
  std::vector<SummaryRow> summary;
};

/// Aggregates the trials of one cell. Statistics cover successful runs only;
/// they are NaN when no run succeeded.
inline SummaryRow summarize(std::span<const TrialResult> trials) {
  if (trials.empty()) throw invalid_parameter("summarize: no trials");
  const auto& head = trials.front();
  SummaryRow row{head.problem, head.n, head.k, head.mu, head.strategy, trials.size()};
  std::vector<std::uint64_t> gens;
  for (const auto& t : trials) {
    if (std::tie(t.problem, t.n, t.k, t.mu, t.strategy) !=
        std::tie(head.problem, head.n, head.k, head.mu, head.strategy)) {
      throw invalid_parameter("summarize: trials come from different cells");
    }
    if (t.front_found) gens.push_back(t.generations);
  }
  row.successes = gens.size();
  if (gens.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.mean_gens = row.std_gens = row.median_gens = row.min_gens = row.max_gens = nan;
    return row;
  }
  const auto s = describe(std::span<const std::uint64_t>(gens));
  row.mean_gens = s.mean;
  row.std_gens = s.stddev;
  row.median_gens = s.median;
  row.min_gens = s.min;
  row.max_gens = s.max;
  return row;
}

inline SummaryRow summarize(const std::vector<TrialResult>& trials) {
  return summarize(std::span<const TrialResult>(trials));
}

/********************************************************************************
 * CSV
 *******************************************************************************/

inline constexpr const char* trials_csv_header =
    "problem,n,k,mu,strategy,seed,run_index,generations,front_found,wall_ms";
inline constexpr const char* summary_csv_header =
    "problem,n,k,mu,strategy,runs,mean_gens,std_gens,median_gens,min_gens,max_gens,successes";

namespace detail {

inline std::string fixed6(double x) {
  if (std::isnan(x)) return "nan";
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << x;
  return os.str();
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace detail

inline void write_trials_csv(std::ostream& os, std::span<const TrialResult> trials) {
  os << trials_csv_header << '\n';
  for (const auto& t : trials) {
    os << t.problem << ',' << t.n << ',' << t.k << ',' << t.mu << ',' << t.strategy << ','
       << t.seed << ',' << t.run_index << ',' << t.generations << ','
       << (t.front_found ? "true" : "false") << ',' << t.wall_ms << '\n';
  }
}

inline void write_summary_csv(std::ostream& os, std::span<const SummaryRow> rows) {
  os << summary_csv_header << '\n';
  for (const auto& r : rows) {
    os << r.problem << ',' << r.n << ',' << r.k << ',' << r.mu << ',' << r.strategy << ','
       << r.runs << ',' << detail::fixed6(r.mean_gens) << ',' << detail::fixed6(r.std_gens)
       << ',' << detail::fixed6(r.median_gens) << ',' << detail::fixed6(r.min_gens) << ','
       << detail::fixed6(r.max_gens) << ',' << r.successes << '\n';
  }
}

inline std::vector<TrialResult> read_trials_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != trials_csv_header) {
    throw invalid_parameter("read_trials_csv: missing or unexpected header");
  }
  std::vector<TrialResult> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = detail::split_csv_line(line);
    if (f.size() != 10) throw invalid_parameter("read_trials_csv: bad row '" + line + "'");
    TrialResult t;
    t.problem = f[0];
    t.n = std::stoull(f[1]);
    t.k = std::stoull(f[2]);
    t.mu = std::stoull(f[3]);
    t.strategy = f[4];
    t.seed = std::stoull(f[5]);
    t.run_index = std::stoull(f[6]);
    t.generations = std::stoull(f[7]);
    if (f[8] != "true" && f[8] != "false") {
      throw invalid_parameter("read_trials_csv: bad front_found '" + f[8] + "'");
    }
    t.front_found = f[8] == "true";
    t.wall_ms = std::stoull(f[9]);
    out.push_back(std::move(t));
  }
  return out;
}

/// Groups consecutive trials of the same cell and summarizes each group.
/// Input must be in canonical order.
inline std::vector<SummaryRow> summarize_cells(std::span<const TrialResult> trials) {
  std::vector<SummaryRow> rows;
  for (std::size_t i = 0; i < trials.size();) {
    std::size_t j = i + 1;
    const auto same = [&](const TrialResult& a, const TrialResult& b) {
      return std::tie(a.problem, a.n, a.k, a.mu, a.strategy) ==
             std::tie(b.problem, b.n, b.k, b.mu, b.strategy);
    };
    while (j < trials.size() && same(trials[j], trials[i])) ++j;
    rows.push_back(summarize(trials.subspan(i, j - i)));
    i = j;
  }
  return rows;
}

/// Plot data for the runtime comparison: x = n, one column per strategy,
/// y = mean generations. Plain whitespace-separated text, gnuplot-friendly.
inline void write_plot_data(std::ostream& os, std::span<const SummaryRow> rows) {
  std::vector<std::string> strategies;
  std::vector<std::size_t> ns;
  for (const auto& r : rows) {
    if (std::find(strategies.begin(), strategies.end(), r.strategy) == strategies.end()) {
      strategies.push_back(r.strategy);
    }
    if (std::find(ns.begin(), ns.end(), r.n) == ns.end()) ns.push_back(r.n);
  }
  std::sort(ns.begin(), ns.end());
  os << "# x: n; y: mean generations until the Pareto front is covered\n";
  os << "# yscale: log\n";
  os << "# n";
  for (const auto& s : strategies) os << ' ' << s;
  os << '\n';
  for (auto n : ns) {
    os << n;
    for (const auto& s : strategies) {
      auto it = std::find_if(rows.begin(), rows.end(),
                             [&](const SummaryRow& r) { return r.n == n && r.strategy == s; });
      os << ' ' << (it == rows.end() ? std::string("nan") : detail::fixed6(it->mean_gens));
    }
    os << '\n';
  }
}

/// Self-contained SVG line chart of mean generations against n (log y axis).
inline void write_svg_chart(std::ostream& os, std::span<const SummaryRow> rows) {
  constexpr double width = 640, height = 420, left = 80, right = 150, top = 30, bottom = 60;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  std::vector<std::string> strategies;
  double nmin = std::numeric_limits<double>::infinity();
  double nmax = -nmin;
  double ymin = nmin;
  double ymax = -nmin;
  for (const auto& r : rows) {
    if (std::find(strategies.begin(), strategies.end(), r.strategy) == strategies.end()) {
      strategies.push_back(r.strategy);
    }
    if (!(r.mean_gens > 0.0)) continue;
    nmin = std::min(nmin, static_cast<double>(r.n));
    nmax = std::max(nmax, static_cast<double>(r.n));
    ymin = std::min(ymin, r.mean_gens);
    ymax = std::max(ymax, r.mean_gens);
  }
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!(nmax >= nmin)) {
    os << "<text x=\"20\" y=\"40\">no data</text>\n</svg>\n";
    return;
  }
  if (nmax == nmin) nmax = nmin + 1;
  const double lo = std::floor(std::log10(ymin));
  double hi = std::ceil(std::log10(ymax));
  if (hi <= lo) hi = lo + 1;
  const auto px = [&](double n) { return left + (n - nmin) / (nmax - nmin) * plot_w; };
  const auto py = [&](double y) {
    return top + plot_h - (std::log10(y) - lo) / (hi - lo) * plot_h;
  };

  os << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
     << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
     << top + plot_h << "\" stroke=\"black\"/>\n";
  for (double e = lo; e <= hi; e += 1.0) {
    const double y = py(std::pow(10.0, e));
    os << "<line x1=\"" << left - 4 << "\" y1=\"" << y << "\" x2=\"" << left + plot_w
       << "\" y2=\"" << y << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">1e"
       << static_cast<int>(e) << "</text>\n";
  }
  std::vector<double> xs;
  for (const auto& r : rows) {
    if (std::find(xs.begin(), xs.end(), static_cast<double>(r.n)) == xs.end()) {
      xs.push_back(static_cast<double>(r.n));
    }
  }
  for (double n : xs) {
    os << "<text x=\"" << px(n) << "\" y=\"" << top + plot_h + 18
       << "\" text-anchor=\"middle\">" << n << "</text>\n";
  }
  os << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 15
     << "\" text-anchor=\"middle\">n</text>\n";
  os << "<text x=\"20\" y=\"" << top + plot_h / 2 << "\" transform=\"rotate(-90 20 "
     << top + plot_h / 2 << ")\" text-anchor=\"middle\">mean #generations</text>\n";

  static constexpr const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e"};
  for (std::size_t si = 0; si < strategies.size(); ++si) {
    const char* color = colors[si % std::size(colors)];
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows) {
      if (r.strategy == strategies[si] && r.mean_gens > 0.0) {
        pts.emplace_back(static_cast<double>(r.n), r.mean_gens);
      }
    }
    std::sort(pts.begin(), pts.end());
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& [n, y] : pts) os << px(n) << ',' << py(y) << ' ';
    os << "\"/>\n";
    for (const auto& [n, y] : pts) {
      os << "<circle cx=\"" << px(n) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << color
         << "\"/>\n";
    }
    const double ly = top + 20.0 + 20.0 * static_cast<double>(si);
    os << "<line x1=\"" << left + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\""
       << left + plot_w + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color
       << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << left + plot_w + 45 << "\" y=\"" << ly + 4 << "\">"
       << strategies[si] << "</text>\n";
  }
  os << "</svg>\n";
}

/********************************************************************************
 * Experiment runner
 *******************************************************************************/

namespace detail {

struct Cell {
  std::size_t n;
  std::size_t k;
  std::size_t mu;
  StrategyChoice strategy;
  std::string label;
};

inline std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::out | std::ios::trunc);
  if (!os) throw io_error("cannot open '" + path.string() + "' for writing");
  return os;
}

}  // namespace detail

/// Cells in canonical order: by n, then k, then strategy label.
inline std::vector<detail::Cell> plan_cells(const ExperimentPlan& plan) {
  if (plan.runs_per_cell < 1) throw invalid_parameter("runs_per_cell must be >= 1");
  if (plan.grid.empty()) throw invalid_parameter("experiment grid is empty");
  if (plan.strategies.empty()) throw invalid_parameter("no strategies selected");
  if (!plan.mu_rule) throw invalid_parameter("no population size rule");
  std::vector<detail::Cell> cells;
  for (const auto& [n, k] : plan.grid) {
    (void)make_problem({plan.problem, n, k});
    const std::size_t mu = plan.mu_rule(n, k);
    if (mu < 1) throw invalid_parameter("population size rule gave mu < 1");
    for (const auto& s : plan.strategies) {
      (void)s.build();
      cells.push_back({n, k, mu, s, s.label()});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.k, a.label) < std::tie(b.n, b.k, b.label);
  });
  for (std::size_t i = 1; i < cells.size(); ++i) {
    if (std::tie(cells[i].n, cells[i].k, cells[i].label) ==
        std::tie(cells[i - 1].n, cells[i - 1].k, cells[i - 1].label)) {
      throw invalid_parameter("experiment grid lists a cell twice");
    }
  }
  return cells;
}

/// Runs every (cell, run) pair, possibly in parallel, and returns trials and
/// summaries in canonical order. Trial i (canonical index) uses seed
/// base_seed + i. Output files are opened before the first trial starts.
inline ExperimentResult run_experiment(const ExperimentPlan& plan) {
  const auto cells = plan_cells(plan);

  std::optional<std::ofstream> trials_out;
  std::optional<std::ofstream> summary_out;
  if (!plan.trials_csv.empty()) trials_out = detail::open_for_write(plan.trials_csv);
  if (!plan.summary_csv.empty()) summary_out = detail::open_for_write(plan.summary_csv);

  const std::size_t total = cells.size() * plan.runs_per_cell;
  std::vector<TrialResult> trials(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::mutex progress_mutex;

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      {
        std::lock_guard lock(error_mutex);
        if (error) return;
      }
      try {
        const auto& cell = cells[i / plan.runs_per_cell];
        EmoaConfig config;
        config.problem = {plan.problem, cell.n, cell.k};
        config.mu = cell.mu;
        config.strategy = cell.strategy.build();
        config.seed = plan.base_seed + i;
        config.budget = plan.budget;
        const auto start = std::chrono::steady_clock::now();
        const auto record = run_sms_emoa(config);
        const auto elapsed = std::chrono::steady_clock::now() - start;

        TrialResult& t = trials[i];
        t.problem = plan.problem;
        t.n = cell.n;
        t.k = cell.k;
        t.mu = cell.mu;
        t.strategy = cell.label;
        t.seed = config.seed;
        t.run_index = i % plan.runs_per_cell;
        t.generations = record.generations;
        t.front_found = record.front_found;
        t.wall_ms = plan.record_wall_time
                        ? static_cast<std::uint64_t>(
                              std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                                  .count())
                        : 0;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
      const std::size_t d = done.fetch_add(1) + 1;
      if (plan.progress) {
        std::lock_guard lock(progress_mutex);
        plan.progress(d, total);
      }
    }
  };

  unsigned threads = plan.threads != 0 ? plan.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  ExperimentResult result;
  result.trials = std::move(trials);
  result.summary = summarize_cells(std::span<const TrialResult>(result.trials));

  if (trials_out) {
    write_trials_csv(*trials_out, std::span<const TrialResult>(result.trials));
    if (!*trials_out) throw io_error("failed writing '" + plan.trials_csv.string() + "'");
  }
  if (summary_out) {
    write_summary_csv(*summary_out, std::span<const SummaryRow>(result.summary));
    if (!*summary_out) throw io_error("failed writing '" + plan.summary_csv.string() + "'");
  }
  return result;
}

/// The runtime-comparison grid: k = 2, n = 10..30 step 5, mu = 2(n-2k+4),
/// deterministic vs stochastic update.
inline ExperimentPlan figure3_plan(std::size_t runs = 1000, std::uint64_t base_seed = 0) {
  ExperimentPlan plan;
  for (std::size_t n = 10; n <= 30; n += 5) plan.grid.emplace_back(n, 2);
  plan.strategies = {{"deterministic", std::nullopt}, {"stochastic", std::nullopt}};
  plan.runs_per_cell = runs;
  plan.base_seed = base_seed;
  return plan;
}

}  // namespace emoa

#endif  // EMOA_HARNESS_HPP_
