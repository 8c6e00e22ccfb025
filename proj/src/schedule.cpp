#include "ttp/schedule.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ttp {

namespace {

void validate_round(int n_teams, const Round& round, int round_index) {
  const auto ri = std::to_string(round_index);
  if (static_cast<int>(round.size()) != n_teams / 2) {
    throw std::invalid_argument("round " + ri + " has " +
                                std::to_string(round.size()) + " matchups, expected " +
                                std::to_string(n_teams / 2));
  }
  std::vector<char> seen(static_cast<std::size_t>(n_teams), 0);
  for (const MatchUp& m : round) {
    for (TeamId t : {m.home, m.away}) {
      if (t < 0 || t >= n_teams) {
        throw std::invalid_argument("round " + ri + ": team id " + std::to_string(t) +
                                    " out of range");
      }
      if (seen[static_cast<std::size_t>(t)]) {
        throw std::invalid_argument("round " + ri + " is not a perfect matching: team " +
                                    std::to_string(t) + " appears twice");
      }
      seen[static_cast<std::size_t>(t)] = 1;
    }
    if (m.home == m.away) {
      throw std::invalid_argument("round " + ri + ": team " + std::to_string(m.home) +
                                  " matched against itself");
    }
  }
}

}  // namespace

Schedule::Schedule(int n_teams, std::vector<Round> rounds)
    : n_teams_(n_teams), rounds_(std::move(rounds)) {
  if (n_teams_ < 4 || n_teams_ % 2 != 0) {
    throw std::invalid_argument("n_teams must be even and >= 4, got " +
                                std::to_string(n_teams_));
  }
  if (static_cast<int>(rounds_.size()) != rounds_for(n_teams_)) {
    throw std::invalid_argument("expected " + std::to_string(rounds_for(n_teams_)) +
                                " rounds, got " + std::to_string(rounds_.size()));
  }
  for (std::size_t r = 0; r < rounds_.size(); ++r) {
    validate_round(n_teams_, rounds_[r], static_cast<int>(r));
  }
}

PerTeamTable per_team_table(const Schedule& s) {
  PerTeamTable table(s.n_teams(), s.round_count());
  for (int r = 0; r < s.round_count(); ++r) {
    for (const MatchUp& m : s.round(r)) {
      table.cell(m.home, r) = TeamRoundCell{m.away, Venue::Home};
      table.cell(m.away, r) = TeamRoundCell{m.home, Venue::Away};
    }
  }
  return table;
}

std::vector<Round> table_to_rounds(const PerTeamTable& table) {
  std::vector<Round> rounds(static_cast<std::size_t>(table.round_count()));
  for (int r = 0; r < table.round_count(); ++r) {
    for (TeamId t = 0; t < table.n_teams(); ++t) {
      const TeamRoundCell& c = table.cell(t, r);
      if (c.venue == Venue::Home) {
        rounds[static_cast<std::size_t>(r)].push_back(MatchUp{t, c.opponent});
      }
    }
  }
  return rounds;
}

VenueSequence venue_sequence(const Schedule& s, TeamId t) {
  if (t < 0 || t >= s.n_teams()) {
    throw std::invalid_argument("team id " + std::to_string(t) + " out of range");
  }
  VenueSequence seq(static_cast<std::size_t>(s.round_count()), '?');
  for (int r = 0; r < s.round_count(); ++r) {
    for (const MatchUp& m : s.round(r)) {
      if (m.home == t) seq[static_cast<std::size_t>(r)] = 'H';
      if (m.away == t) seq[static_cast<std::size_t>(r)] = 'A';
    }
  }
  return seq;
}

std::string to_json_line(const Schedule& s) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const Round& round : s.rounds()) {
    nlohmann::json jr = nlohmann::json::array();
    for (const MatchUp& m : round) {
      jr.push_back(nlohmann::json::array({m.home, m.away}));
    }
    rounds.push_back(std::move(jr));
  }
  nlohmann::json j;
  j["n_teams"] = s.n_teams();
  j["rounds"] = std::move(rounds);
  return j.dump();
}

Schedule schedule_from_json(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_teams") || !j.contains("rounds")) {
    throw std::runtime_error("schedule object must have n_teams and rounds");
  }
  if (!j["n_teams"].is_number_integer()) {
    throw std::runtime_error("n_teams must be an integer");
  }
  const int n_teams = j["n_teams"].get<int>();
  std::vector<Round> rounds;
  for (const auto& jr : j["rounds"]) {
    Round round;
    for (const auto& jm : jr) {
      if (!jm.is_array() || jm.size() != 2 || !jm[0].is_number_integer() ||
          !jm[1].is_number_integer()) {
        throw std::runtime_error("matchups must be [home, away] integer pairs");
      }
      round.push_back(MatchUp{jm[0].get<int>(), jm[1].get<int>()});
    }
    rounds.push_back(std::move(round));
  }
  try {
    return Schedule(n_teams, std::move(rounds));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
}

std::vector<Schedule> read_schedules(std::istream& in) {
  std::vector<Schedule> schedules;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      schedules.push_back(schedule_from_json(line));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return schedules;
}

void write_schedules(std::ostream& out, const std::vector<Schedule>& schedules) {
  for (const Schedule& s : schedules) {
    out << to_json_line(s) << '\n';
  }
}

}  // namespace ttp
