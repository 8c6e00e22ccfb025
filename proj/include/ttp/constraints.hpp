#pragma once

#include <string>
#include <string_view>

#include "ttp/schedule.hpp"

namespace ttp {

// Tuple-based violation counts for one schedule at one maxStreak threshold.
// A schedule is valid at threshold k iff all three counts are zero.
struct ViolationReport {
  long long drr = 0;
  int max_streak_k = 1;
  long long max_streak = 0;
  long long no_repeat = 0;

  bool all_zero() const { return drr == 0 && max_streak == 0 && no_repeat == 0; }

  friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

// Double-round-robin violations: each ordered game (home, away) must appear
// exactly once in the tournament. Counts one violation per missing ordered
// game plus one per surplus appearance; the total is always even.
long long count_drr(const Schedule& s);

// Number of positions i >= k (0-based) whose trailing k+1 symbols are all
// equal; equivalently, sum over maximal runs of max(0, run_length - k).
long long streak_violations(std::string_view venues, int k);

// streak_violations summed over every team's venue sequence.
long long count_maxstreak(const Schedule& s, int k);

// Unordered team pairs matched in two consecutive rounds, summed over all
// adjacent round pairs. Venue-insensitive.
long long count_norepeat(const Schedule& s);

ViolationReport violation_report(const Schedule& s, int k);

// CSV row `drr,max_streak_k,max_streak,no_repeat` (no trailing newline) and
// the matching header.
std::string report_csv_header();
std::string report_csv_row(const ViolationReport& r);
std::string report_json(const ViolationReport& r);

}  // namespace ttp
