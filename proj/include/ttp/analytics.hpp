#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ttp {

enum class Constraint { Drr, MaxStreak, NoRepeat };

Constraint constraint_from_token(std::string_view token);
std::string_view constraint_token(Constraint c);

struct SweepConfig {
  std::vector<int> team_sizes;       // default {4,6,...,50}
  int samples_per_size = 1000;
  std::vector<int> k_values;         // default {1,...,6}
  std::uint64_t master_seed = 0;

  static SweepConfig defaults(std::uint64_t master_seed);
};

// Aggregated violations for one (n_teams, constraint[, k]) cell. k is set
// only for the maxstreak constraint.
struct SweepRecord {
  int n_teams = 0;
  Constraint constraint = Constraint::Drr;
  std::optional<int> k;
  int samples = 0;
  long long min = 0;
  double avg = 0.0;
  long long max = 0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// Generates samples_per_size random tournaments per team size and counts all
// constraints on each (every k value on the same schedule). Record order is
// pinned: team sizes as configured, then drr, norepeat, maxstreak per k.
// Deterministic for a given config regardless of thread count; the serial
// variant is the reference the parallel kernel is tested against.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);
std::vector<SweepRecord> run_sweep_serial(const SweepConfig& cfg);

struct FitCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double r_squared = 0.0;
};

// Unweighted ordinary least squares for y = a*n^2 + b*n + c. Needs at least
// 3 distinct n values.
FitCoefficients fit_quadratic(const std::vector<std::pair<int, double>>& points);

// Closed-form expected violation counts under the rows-first model:
//   maxstreak: n*(2(n-1)-k)/2^k (0 once k reaches the season length)
//   norepeat:  (2n-3)*n / (2(n-1))
//   drr:       2*n*(n-1)*(1 - 1/(2(n-1)))^(2(n-1))
double expected_violations(int n_teams, Constraint constraint,
                           std::optional<int> k = std::nullopt);

// Sweep CSV: header `n_teams,constraint,k,samples,min,avg,max`, k empty for
// drr/norepeat rows, avg in shortest round-trip decimal form.
std::string sweep_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_sweep_csv(std::string_view csv_text);

std::string fit_json(Constraint constraint, std::optional<int> k,
                     const FitCoefficients& fit);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace ttp
