#include "ttp/constraints.hpp"

#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace ttp {

long long count_drr(const Schedule& s) {
  const int n = s.n_teams();
  std::vector<int> appearances(static_cast<std::size_t>(n) * n, 0);
  for (const Round& round : s.rounds()) {
    for (const MatchUp& m : round) {
      ++appearances[static_cast<std::size_t>(m.home) * n + m.away];
    }
  }
  long long violations = 0;
  for (TeamId a = 0; a < n; ++a) {
    for (TeamId b = 0; b < n; ++b) {
      if (a == b) continue;
      const int app = appearances[static_cast<std::size_t>(a) * n + b];
      if (app == 0) {
        ++violations;  // missing ordered game
      } else {
        violations += app - 1;  // surplus appearances
      }
    }
  }
  return violations;
}

long long streak_violations(std::string_view venues, int k) {
  if (k < 1) {
    throw std::invalid_argument("max_streak threshold must be >= 1, got " +
                                std::to_string(k));
  }
  long long violations = 0;
  std::size_t i = 0;
  while (i < venues.size()) {
    std::size_t run_end = i + 1;
    while (run_end < venues.size() && venues[run_end] == venues[i]) ++run_end;
    const long long run_length = static_cast<long long>(run_end - i);
    if (run_length > k) violations += run_length - k;
    i = run_end;
  }
  return violations;
}

long long count_maxstreak(const Schedule& s, int k) {
  long long violations = 0;
  for (TeamId t = 0; t < s.n_teams(); ++t) {
    violations += streak_violations(venue_sequence(s, t), k);
  }
  return violations;
}

long long count_norepeat(const Schedule& s) {
  const int n = s.n_teams();
  long long violations = 0;
  std::vector<TeamId> prev_partner(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < s.round_count(); ++r) {
    if (r > 0) {
      for (const MatchUp& m : s.round(r)) {
        if (prev_partner[static_cast<std::size_t>(m.home)] == m.away) ++violations;
      }
    }
    for (const MatchUp& m : s.round(r)) {
      prev_partner[static_cast<std::size_t>(m.home)] = m.away;
      prev_partner[static_cast<std::size_t>(m.away)] = m.home;
    }
  }
  return violations;
}

ViolationReport violation_report(const Schedule& s, int k) {
  ViolationReport report;
  report.drr = count_drr(s);
  report.max_streak_k = k;
  report.max_streak = count_maxstreak(s, k);
  report.no_repeat = count_norepeat(s);
  return report;
}

std::string report_csv_header() { return "drr,max_streak_k,max_streak,no_repeat"; }

std::string report_csv_row(const ViolationReport& r) {
  return std::to_string(r.drr) + ',' + std::to_string(r.max_streak_k) + ',' +
         std::to_string(r.max_streak) + ',' + std::to_string(r.no_repeat);
}

std::string report_json(const ViolationReport& r) {
  nlohmann::ordered_json j;
  j["drr"] = r.drr;
  j["max_streak_k"] = r.max_streak_k;
  j["max_streak"] = r.max_streak;
  j["no_repeat"] = r.no_repeat;
  return j.dump();
}

}  // namespace ttp
