#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ttp/schedule.hpp"

namespace ttp {

struct EnumConfig {
  int n_teams = 4;
  int max_streak = 3;
  std::optional<std::uint64_t> limit;  // cap on emitted schedules
};

// Growing schedule during the depth-first search, with the incremental
// bookkeeping the pruning rules need: ordered-game usage, per-team venue run
// lengths, and the previous round's pairings. Matchups are placed and
// unplaced in stack order.
class PartialSchedule {
 public:
  PartialSchedule(int n_teams, int max_streak);

  int n_teams() const { return n_teams_; }
  int max_streak() const { return max_streak_; }

  // Round currently being filled, 0-based. Equals total round count once the
  // schedule is complete.
  int current_round() const;
  bool complete() const;
  bool current_round_empty() const;

  bool game_used(TeamId home, TeamId away) const {
    return used_games_[static_cast<std::size_t>(home) * n_teams_ + away] != 0;
  }
  bool placed_in_current_round(TeamId t) const;
  TeamId lowest_free_team() const;

  // Pairing of the last fully completed round, -1 if none or team unpaired.
  TeamId previous_round_partner(TeamId t) const;

  // Venue run length ending at team t's most recently assigned round (0 if
  // t has no assigned rounds yet).
  int run_length(TeamId t) const;
  Venue last_venue(TeamId t) const;

  void place(MatchUp m);
  void unplace();

  // Rounds completed so far, in placement order.
  const std::vector<Round>& rounds() const { return completed_rounds_; }

 private:
  struct Placement {
    MatchUp matchup;
    bool closed_round;
  };

  int assigned_rounds(TeamId t) const;

  int n_teams_;
  int max_streak_;
  std::vector<Round> completed_rounds_;
  Round in_progress_;
  std::vector<Placement> placements_;
  std::vector<char> used_games_;              // [home * n + away]
  std::vector<char> in_current_round_;        // team placed in in-progress round
  std::vector<std::vector<char>> venues_;     // venues_[t][r], 'H'/'A'
  std::vector<std::vector<int>> run_length_;  // run_length_[t][r]
  std::vector<std::vector<TeamId>> partners_; // partners_[r][t], per completed round
};

enum class PruneReason { DoubleGame, MaxStreak, NoRepeat };

struct PruneResult {
  bool accepted = true;
  std::optional<PruneReason> reason;
};

const char* prune_reason_name(PruneReason reason);

// Reject iff placing m would repeat an already-used ordered game, push either
// team's venue run past max_streak, or recreate either team's pairing from
// the previous round.
PruneResult prune_check(const PartialSchedule& p, MatchUp m);

// Branch generation: the lowest-indexed team not yet placed in the current
// round, paired with each free opponent in both orientations, opponent
// ascending and lower-team-home first, filtered through prune_check. Pinning
// the first element to the lowest free team prevents each round from being
// reached in (n/2)! permutations.
std::vector<MatchUp> next_matchup_candidates(const PartialSchedule& p);

// Depth-first enumeration of every schedule that is valid at cfg.max_streak
// and whose first round is the canonical [(0,1),(2,3),...,(n-2,n-1)]. Emits
// in deterministic DFS order; returns the number emitted. With cfg.limit set,
// emission stops after that many schedules (the prefix of the full order).
std::uint64_t enumerate_valid(const EnumConfig& cfg,
                              const std::function<void(const Schedule&)>& sink);

}  // namespace ttp
