// Command-line surface: seeded tournament generation, violation counting,
// the violation-vs-team-count sweep, quadratic fitting, exhaustive
// enumeration of valid schedules, and pairwise diversity statistics.
//
// Exit codes: 0 success, 1 data/computation error, 2 usage error.
// stdout (or --out) carries data only; progress and counts go to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "ttp/analytics.hpp"
#include "ttp/constraints.hpp"
#include "ttp/diversity.hpp"
#include "ttp/enumerator.hpp"
#include "ttp/generator.hpp"
#include "ttp/schedule.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_even_teams(int n) {
  if (n < 4 || n % 2 != 0) {
    throw UsageError("--teams must be even and >= 4, got " + std::to_string(n));
  }
}

// `lo..hi` inclusive, or a bare value meaning lo..lo.
std::vector<int> parse_range(const std::string& text, int step, const char* flag) {
  int lo = 0;
  int hi = 0;
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": cannot parse range '" + text + "'");
  }
  if (lo > hi) {
    throw UsageError(std::string(flag) + ": inverted range '" + text + "'");
  }
  std::vector<int> values;
  for (int v = lo; v <= hi; v += step) values.push_back(v);
  return values;
}

// Data sink that is either a file or stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DataError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Data source that is either a file or stdin (path "-").
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw DataError("cannot open input file: " + path);
    }
  }
  std::istream& stream() { return file_.is_open() ? file_ : std::cin; }

 private:
  std::ifstream file_;
};

struct GenArgs {
  int teams = 0;
  int count = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& args) {
  require_even_teams(args.teams);
  if (args.count < 1) throw UsageError("--count must be >= 1");
  Output output(args.out);
  const ttp::GenConfig cfg{args.teams, args.seed};
  for (int i = 0; i < args.count; ++i) {
    output.stream() << ttp::to_json_line(
                           ttp::random_schedule(cfg, static_cast<std::uint64_t>(i)))
                    << '\n';
  }
  return kExitOk;
}

struct CheckArgs {
  std::string in;
  int max_streak = 3;
};

int run_check(const CheckArgs& args) {
  if (args.max_streak < 1) throw UsageError("--max-streak must be >= 1");
  Input input(args.in);
  std::cout << ttp::report_csv_header() << '\n';
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(input.stream(), line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      const ttp::Schedule s = ttp::schedule_from_json(line);
      std::cout << ttp::report_csv_row(ttp::violation_report(s, args.max_streak))
                << '\n';
    } catch (const std::runtime_error& e) {
      throw DataError("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return kExitOk;
}

struct SweepArgs {
  std::string teams = "4..50";
  int samples = 1000;
  std::string k = "1..6";
  std::uint64_t seed = 0;
  std::string out;
};

int run_sweep_cmd(const SweepArgs& args) {
  ttp::SweepConfig cfg;
  cfg.team_sizes = parse_range(args.teams, 2, "--teams");
  for (int n : cfg.team_sizes) require_even_teams(n);
  cfg.k_values = parse_range(args.k, 1, "--k");
  if (args.samples < 1) throw UsageError("--samples must be >= 1");
  cfg.samples_per_size = args.samples;
  cfg.master_seed = args.seed;

  const std::vector<ttp::SweepRecord> records = ttp::run_sweep(cfg);
  Output output(args.out);
  output.stream() << ttp::sweep_csv(records);
  std::fprintf(stderr, "%zu records over %zu tournaments\n", records.size(),
               cfg.team_sizes.size() * static_cast<std::size_t>(cfg.samples_per_size));
  return kExitOk;
}

struct FitArgs {
  std::string in;
  std::string constraint;
  std::optional<int> k;
};

int run_fit(const FitArgs& args) {
  Input input(args.in);
  std::string csv((std::istreambuf_iterator<char>(input.stream())),
                  std::istreambuf_iterator<char>());
  std::vector<ttp::SweepRecord> records;
  try {
    records = ttp::parse_sweep_csv(csv);
  } catch (const std::runtime_error& e) {
    throw DataError(e.what());
  }

  std::optional<ttp::Constraint> wanted;
  if (!args.constraint.empty()) {
    try {
      wanted = ttp::constraint_from_token(args.constraint);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  // Curves keyed by (constraint, k), in first-appearance order.
  std::vector<std::pair<ttp::Constraint, std::optional<int>>> curve_order;
  std::map<std::pair<int, int>, std::vector<std::pair<int, double>>> curves;
  for (const ttp::SweepRecord& rec : records) {
    if (wanted && rec.constraint != *wanted) continue;
    if (args.k && rec.k != args.k) continue;
    const auto key = std::make_pair(static_cast<int>(rec.constraint), rec.k.value_or(-1));
    if (!curves.count(key)) curve_order.emplace_back(rec.constraint, rec.k);
    curves[key].emplace_back(rec.n_teams, rec.avg);
  }
  if (curve_order.empty()) {
    throw DataError("no matching sweep rows for the requested curve");
  }

  for (const auto& [constraint, k] : curve_order) {
    const auto key = std::make_pair(static_cast<int>(constraint), k.value_or(-1));
    try {
      const ttp::FitCoefficients fit = ttp::fit_quadratic(curves[key]);
      std::cout << ttp::fit_json(constraint, k, fit) << '\n';
    } catch (const std::invalid_argument& e) {
      std::string curve{ttp::constraint_token(constraint)};
      if (k) curve += " k=" + std::to_string(*k);
      throw DataError("curve " + curve + ": " + e.what());
    }
  }
  return kExitOk;
}

struct EnumArgs {
  int teams = 0;
  int max_streak = 3;
  std::optional<std::uint64_t> limit;
  std::string out;
};

int run_enumerate(const EnumArgs& args) {
  require_even_teams(args.teams);
  if (args.max_streak < 1) throw UsageError("--max-streak must be >= 1");
  Output output(args.out);
  ttp::EnumConfig cfg;
  cfg.n_teams = args.teams;
  cfg.max_streak = args.max_streak;
  cfg.limit = args.limit;
  const std::uint64_t count = ttp::enumerate_valid(cfg, [&](const ttp::Schedule& s) {
    output.stream() << ttp::to_json_line(s) << '\n';
  });
  std::fprintf(stderr, "%llu\n", static_cast<unsigned long long>(count));
  return kExitOk;
}

struct DiffArgs {
  std::string in;
  std::string mode = "full";
  std::string hist;
};

int run_diff(const DiffArgs& args) {
  ttp::DiffMode mode;
  try {
    mode = ttp::diff_mode_from_token(args.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Input input(args.in);
  std::vector<ttp::Schedule> population;
  try {
    population = ttp::read_schedules(input.stream());
  } catch (const std::runtime_error& e) {
    throw DataError(e.what());
  }
  if (population.size() < 2) {
    throw DataError("need at least 2 schedules, got " +
                    std::to_string(population.size()));
  }
  const ttp::DiffStats stats = ttp::pairwise_stats(population, mode);
  std::cout << ttp::stats_json(stats) << '\n';
  if (!args.hist.empty()) {
    std::ofstream hist_file(args.hist);
    if (!hist_file) throw DataError("cannot open histogram file: " + args.hist);
    hist_file << ttp::histogram_csv(stats);
  }
  std::fprintf(stderr, "%llu pairs\n",
               static_cast<unsigned long long>(stats.pair_count));
  return kExitOk;
}

struct ExpectArgs {
  int teams = 0;
  std::string constraint;
  std::optional<int> k;
};

int run_expect(const ExpectArgs& args) {
  require_even_teams(args.teams);
  double value = 0.0;
  try {
    value = ttp::expected_violations(args.teams,
                                     ttp::constraint_from_token(args.constraint),
                                     args.k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::printf("%.6g\n", value);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Round-robin tournament validity toolkit"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate seeded random tournaments");
  gen->add_option("--teams", gen_args.teams, "Even team count >= 4")->required();
  gen->add_option("--count", gen_args.count, "Number of schedules")->required();
  gen->add_option("--seed", gen_args.seed, "Master seed")->required();
  gen->add_option("--out", gen_args.out, "Output path (default stdout)");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Count violations per schedule");
  check->add_option("--in", check_args.in, "JSON Lines input ('-' for stdin)")
      ->required();
  check->add_option("--max-streak", check_args.max_streak, "Streak threshold");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Violation statistics over a team-size grid");
  sweep->add_option("--teams", sweep_args.teams, "Range lo..hi, step 2 (default 4..50)");
  sweep->add_option("--samples", sweep_args.samples, "Tournaments per size");
  sweep->add_option("--k", sweep_args.k, "maxStreak range lo..hi (default 1..6)");
  sweep->add_option("--seed", sweep_args.seed, "Master seed")->required();
  sweep->add_option("--out", sweep_args.out, "Output path (default stdout)");

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Quadratic fit of sweep averages");
  fit->add_option("--in", fit_args.in, "Sweep CSV ('-' for stdin)")->required();
  fit->add_option("--constraint", fit_args.constraint, "Restrict to one constraint");
  fit->add_option("--k", fit_args.k, "Restrict to one maxStreak value");

  EnumArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "All valid half-normalized schedules");
  enumerate->add_option("--teams", enum_args.teams, "Even team count >= 4")->required();
  enumerate->add_option("--max-streak", enum_args.max_streak, "Streak threshold");
  enumerate->add_option("--limit", enum_args.limit, "Stop after this many schedules");
  enumerate->add_option("--out", enum_args.out, "Output path (default stdout)");

  DiffArgs diff_args;
  auto* diff = app.add_subcommand("diff", "Pairwise distance statistics");
  diff->add_option("--in", diff_args.in, "JSON Lines input ('-' for stdin)")->required();
  diff->add_option("--mode", diff_args.mode, "full | opponent | venue");
  diff->add_option("--hist", diff_args.hist, "Histogram CSV path");

  ExpectArgs expect_args;
  auto* expect = app.add_subcommand("expect", "Closed-form expected violations");
  expect->add_option("--teams", expect_args.teams, "Even team count >= 4")->required();
  expect->add_option("--constraint", expect_args.constraint, "drr | maxstreak | norepeat")
      ->required();
  expect->add_option("--k", expect_args.k, "maxStreak value (maxstreak only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return run_gen(gen_args);
    if (*check) return run_check(check_args);
    if (*sweep) return run_sweep_cmd(sweep_args);
    if (*fit) return run_fit(fit_args);
    if (*enumerate) return run_enumerate(enum_args);
    if (*diff) return run_diff(diff_args);
    if (*expect) return run_expect(expect_args);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const DataError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}
