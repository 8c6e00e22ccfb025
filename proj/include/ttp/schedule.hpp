#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ttp {

using TeamId = int;

enum class Venue : unsigned char { Home, Away };

struct MatchUp {
  TeamId home = 0;
  TeamId away = 0;

  friend bool operator==(const MatchUp&, const MatchUp&) = default;
};

using Round = std::vector<MatchUp>;

// A double-round-robin-shaped tournament: 2*(n_teams-1) rounds, each a
// perfect matching of the n_teams teams with an explicit home/away
// orientation per matchup. Construction validates the per-round structure;
// cross-round constraints (double round robin, streaks, repeats) are *not*
// enforced here, they are what the rest of the library counts and searches
// over. Immutable after construction.
class Schedule {
 public:
  Schedule(int n_teams, std::vector<Round> rounds);

  int n_teams() const { return n_teams_; }
  int round_count() const { return static_cast<int>(rounds_.size()); }
  const Round& round(int r) const { return rounds_[static_cast<std::size_t>(r)]; }
  const std::vector<Round>& rounds() const { return rounds_; }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  int n_teams_;
  std::vector<Round> rounds_;
};

inline int rounds_for(int n_teams) { return 2 * (n_teams - 1); }

struct TeamRoundCell {
  TeamId opponent = 0;
  Venue venue = Venue::Home;

  friend bool operator==(const TeamRoundCell&, const TeamRoundCell&) = default;
};

// Team-major view of a schedule: cell(t, r) is team t's opponent and venue in
// round r. This is the unit both the constraint counters and the diversity
// metric operate on.
class PerTeamTable {
 public:
  PerTeamTable(int n_teams, int round_count)
      : n_teams_(n_teams),
        round_count_(round_count),
        cells_(static_cast<std::size_t>(n_teams) * round_count) {}

  int n_teams() const { return n_teams_; }
  int round_count() const { return round_count_; }

  TeamRoundCell& cell(TeamId t, int r) {
    return cells_[static_cast<std::size_t>(t) * round_count_ + r];
  }
  const TeamRoundCell& cell(TeamId t, int r) const {
    return cells_[static_cast<std::size_t>(t) * round_count_ + r];
  }

 private:
  int n_teams_;
  int round_count_;
  std::vector<TeamRoundCell> cells_;
};

PerTeamTable per_team_table(const Schedule& s);

// Inverse of per_team_table up to matchup order within each round: rebuilds
// rounds with home teams in ascending order.
std::vector<Round> table_to_rounds(const PerTeamTable& table);

// Team t's home/away string over the season, e.g. "HHHAAA".
using VenueSequence = std::string;

VenueSequence venue_sequence(const Schedule& s, TeamId t);

// Canonical JSON form {"n_teams":N,"rounds":[[[h,a],...],...]}, one schedule
// per line when serializing collections (JSON Lines).
std::string to_json_line(const Schedule& s);
Schedule schedule_from_json(std::string_view json_text);

std::vector<Schedule> read_schedules(std::istream& in);
void write_schedules(std::ostream& out, const std::vector<Schedule>& schedules);

}  // namespace ttp
