#pragma once

#include <cstdint>

#include "ttp/rng.hpp"
#include "ttp/schedule.hpp"

namespace ttp {

struct GenConfig {
  int n_teams = 4;
  std::uint64_t seed = 0;
};

// One uniformly random round: shuffle [0, n_teams) and pair consecutive
// entries, the earlier entry of each pair playing at home. Consumes exactly
// n_teams-1 words of rng state.
Round random_round(int n_teams, rng::Xoshiro256StarStar& gen);

// Rows-first random tournament: 2*(n_teams-1) independent random rounds.
// Fully determined by (cfg.seed, sample_index); the rng substream is derived
// from both, so samples can be produced in any order or concurrently.
Schedule random_schedule(const GenConfig& cfg, std::uint64_t sample_index);

}  // namespace ttp
