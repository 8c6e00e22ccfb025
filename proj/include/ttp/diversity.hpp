#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ttp/schedule.hpp"

namespace ttp {

// What a (team, round) cell comparison looks at: both opponent and venue,
// opponent only, or venue only.
enum class DiffMode { Full, Opponent, Venue };

DiffMode diff_mode_from_token(std::string_view token);
std::string_view diff_mode_token(DiffMode mode);

// Number of (team, round) cells whose content differs under the mode. A
// Hamming distance over the per-team table; range [0, n_teams*2*(n_teams-1)].
int diff(const Schedule& a, const Schedule& b, DiffMode mode);

struct DiffStats {
  DiffMode mode = DiffMode::Full;
  std::uint64_t pair_count = 0;
  double mean = 0.0;
  std::map<int, std::uint64_t> histogram;
};

// Distance statistics over all unordered pairs of the population. The OpenMP
// kernel and the serial reference produce identical results: distances are
// integers, so the reduction is order-independent.
DiffStats pairwise_stats(const std::vector<Schedule>& population, DiffMode mode);
DiffStats pairwise_stats_serial(const std::vector<Schedule>& population, DiffMode mode);

// Histogram CSV `distance,count` (ascending distance) and stats JSON
// {"mode":...,"pairs":...,"mean":...}.
std::string histogram_csv(const DiffStats& stats);
std::string stats_json(const DiffStats& stats);

}  // namespace ttp
