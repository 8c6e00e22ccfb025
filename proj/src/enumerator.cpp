#include "ttp/enumerator.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#ifndef NDEBUG
#include "ttp/constraints.hpp"
#endif

namespace ttp {

PartialSchedule::PartialSchedule(int n_teams, int max_streak)
    : n_teams_(n_teams),
      max_streak_(max_streak),
      used_games_(static_cast<std::size_t>(n_teams) * n_teams, 0),
      in_current_round_(static_cast<std::size_t>(n_teams), 0),
      venues_(static_cast<std::size_t>(n_teams)),
      run_length_(static_cast<std::size_t>(n_teams)) {
  if (n_teams < 4 || n_teams % 2 != 0) {
    throw std::invalid_argument("n_teams must be even and >= 4, got " +
                                std::to_string(n_teams));
  }
  if (max_streak < 1) {
    throw std::invalid_argument("max_streak must be >= 1, got " +
                                std::to_string(max_streak));
  }
}

int PartialSchedule::current_round() const {
  return static_cast<int>(completed_rounds_.size());
}

bool PartialSchedule::complete() const {
  return current_round() == rounds_for(n_teams_) && in_progress_.empty();
}

bool PartialSchedule::current_round_empty() const { return in_progress_.empty(); }

bool PartialSchedule::placed_in_current_round(TeamId t) const {
  return in_current_round_[static_cast<std::size_t>(t)] != 0;
}

TeamId PartialSchedule::lowest_free_team() const {
  for (TeamId t = 0; t < n_teams_; ++t) {
    if (!placed_in_current_round(t)) return t;
  }
  return -1;
}

TeamId PartialSchedule::previous_round_partner(TeamId t) const {
  if (completed_rounds_.empty()) return -1;
  return partners_.back()[static_cast<std::size_t>(t)];
}

int PartialSchedule::assigned_rounds(TeamId t) const {
  return static_cast<int>(venues_[static_cast<std::size_t>(t)].size());
}

int PartialSchedule::run_length(TeamId t) const {
  const auto& runs = run_length_[static_cast<std::size_t>(t)];
  return runs.empty() ? 0 : runs.back();
}

Venue PartialSchedule::last_venue(TeamId t) const {
  const auto& venues = venues_[static_cast<std::size_t>(t)];
  assert(!venues.empty());
  return venues.back() == 'H' ? Venue::Home : Venue::Away;
}

void PartialSchedule::place(MatchUp m) {
  assert(!placed_in_current_round(m.home) && !placed_in_current_round(m.away));
  const int round = current_round();
  for (auto [team, venue] : {std::pair{m.home, 'H'}, std::pair{m.away, 'A'}}) {
    auto& venues = venues_[static_cast<std::size_t>(team)];
    auto& runs = run_length_[static_cast<std::size_t>(team)];
    assert(static_cast<int>(venues.size()) == round);
    const int prev_run = (round > 0 && venues.back() == venue) ? runs.back() : 0;
    venues.push_back(static_cast<char>(venue));
    runs.push_back(prev_run + 1);
    in_current_round_[static_cast<std::size_t>(team)] = 1;
  }
  used_games_[static_cast<std::size_t>(m.home) * n_teams_ + m.away] = 1;
  in_progress_.push_back(m);

  const bool closes_round = static_cast<int>(in_progress_.size()) == n_teams_ / 2;
  if (closes_round) {
    std::vector<TeamId> round_partners(static_cast<std::size_t>(n_teams_), -1);
    for (const MatchUp& placed : in_progress_) {
      round_partners[static_cast<std::size_t>(placed.home)] = placed.away;
      round_partners[static_cast<std::size_t>(placed.away)] = placed.home;
    }
    partners_.push_back(std::move(round_partners));
    completed_rounds_.push_back(std::move(in_progress_));
    in_progress_.clear();
    in_current_round_.assign(static_cast<std::size_t>(n_teams_), 0);
  }
  placements_.push_back(Placement{m, closes_round});
}

void PartialSchedule::unplace() {
  assert(!placements_.empty());
  const Placement last = placements_.back();
  placements_.pop_back();

  if (last.closed_round) {
    in_progress_ = std::move(completed_rounds_.back());
    completed_rounds_.pop_back();
    partners_.pop_back();
    in_current_round_.assign(static_cast<std::size_t>(n_teams_), 0);
    for (const MatchUp& placed : in_progress_) {
      in_current_round_[static_cast<std::size_t>(placed.home)] = 1;
      in_current_round_[static_cast<std::size_t>(placed.away)] = 1;
    }
  }
  assert(!in_progress_.empty() && in_progress_.back() == last.matchup);
  in_progress_.pop_back();

  const MatchUp m = last.matchup;
  used_games_[static_cast<std::size_t>(m.home) * n_teams_ + m.away] = 0;
  for (TeamId team : {m.home, m.away}) {
    venues_[static_cast<std::size_t>(team)].pop_back();
    run_length_[static_cast<std::size_t>(team)].pop_back();
    in_current_round_[static_cast<std::size_t>(team)] = 0;
  }
}

const char* prune_reason_name(PruneReason reason) {
  switch (reason) {
    case PruneReason::DoubleGame: return "doubleRoundRobin";
    case PruneReason::MaxStreak: return "maxStreak";
    case PruneReason::NoRepeat: return "noRepeat";
  }
  return "unknown";
}

PruneResult prune_check(const PartialSchedule& p, MatchUp m) {
  if (p.game_used(m.home, m.away)) {
    return PruneResult{false, PruneReason::DoubleGame};
  }
  for (auto [team, venue] : {std::pair{m.home, Venue::Home}, std::pair{m.away, Venue::Away}}) {
    if (p.run_length(team) >= p.max_streak() && p.last_venue(team) == venue) {
      return PruneResult{false, PruneReason::MaxStreak};
    }
  }
  if (p.previous_round_partner(m.home) == m.away) {
    return PruneResult{false, PruneReason::NoRepeat};
  }
  return PruneResult{};
}

std::vector<MatchUp> next_matchup_candidates(const PartialSchedule& p) {
  const TeamId first = p.lowest_free_team();
  if (first < 0) return {};
  std::vector<MatchUp> candidates;
  for (TeamId opponent = first + 1; opponent < p.n_teams(); ++opponent) {
    if (p.placed_in_current_round(opponent)) continue;
    for (const MatchUp m : {MatchUp{first, opponent}, MatchUp{opponent, first}}) {
      if (prune_check(p, m).accepted) candidates.push_back(m);
    }
  }
  return candidates;
}

namespace {

class DfsEnumerator {
 public:
  DfsEnumerator(const EnumConfig& cfg, const std::function<void(const Schedule&)>& sink)
      : cfg_(cfg), sink_(sink), partial_(cfg.n_teams, cfg.max_streak) {}

  std::uint64_t run() {
    if (cfg_.limit && *cfg_.limit == 0) return 0;
    // Canonical half-normalized first round.
    for (TeamId t = 0; t < cfg_.n_teams; t += 2) {
      partial_.place(MatchUp{t, t + 1});
    }
    dfs();
    return emitted_;
  }

 private:
  // Returns false once the emission limit is reached.
  bool dfs() {
    if (partial_.complete()) {
      emit();
      return !cfg_.limit || emitted_ < *cfg_.limit;
    }
    for (const MatchUp m : next_matchup_candidates(partial_)) {
      partial_.place(m);
      const bool keep_going = dfs();
      partial_.unplace();
      if (!keep_going) return false;
    }
    return true;
  }

  void emit() {
    Schedule schedule(cfg_.n_teams, partial_.rounds());
#ifndef NDEBUG
    // Full recount as a self-check on the incremental bookkeeping.
    assert(violation_report(schedule, cfg_.max_streak).all_zero());
#endif
    ++emitted_;
    sink_(schedule);
  }

  EnumConfig cfg_;
  const std::function<void(const Schedule&)>& sink_;
  PartialSchedule partial_;
  std::uint64_t emitted_ = 0;
};

}  // namespace

std::uint64_t enumerate_valid(const EnumConfig& cfg,
                              const std::function<void(const Schedule&)>& sink) {
  DfsEnumerator enumerator(cfg, sink);
  return enumerator.run();
}

}  // namespace ttp
