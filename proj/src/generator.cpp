#include "ttp/generator.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttp {

Round random_round(int n_teams, rng::Xoshiro256StarStar& gen) {
  if (n_teams < 4 || n_teams % 2 != 0) {
    throw std::invalid_argument("n_teams must be even and >= 4, got " +
                                std::to_string(n_teams));
  }
  std::vector<TeamId> order(static_cast<std::size_t>(n_teams));
  std::iota(order.begin(), order.end(), 0);
  rng::shuffle(order, gen);

  Round round;
  round.reserve(static_cast<std::size_t>(n_teams / 2));
  for (int i = 0; i < n_teams; i += 2) {
    round.push_back(MatchUp{order[static_cast<std::size_t>(i)],
                            order[static_cast<std::size_t>(i + 1)]});
  }
  return round;
}

Schedule random_schedule(const GenConfig& cfg, std::uint64_t sample_index) {
  if (cfg.n_teams < 4 || cfg.n_teams % 2 != 0) {
    throw std::invalid_argument("n_teams must be even and >= 4, got " +
                                std::to_string(cfg.n_teams));
  }
  rng::Xoshiro256StarStar gen(rng::substream_seed(
      cfg.seed, static_cast<std::uint64_t>(cfg.n_teams), sample_index));

  std::vector<Round> rounds;
  rounds.reserve(static_cast<std::size_t>(rounds_for(cfg.n_teams)));
  for (int r = 0; r < rounds_for(cfg.n_teams); ++r) {
    rounds.push_back(random_round(cfg.n_teams, gen));
  }
  return Schedule(cfg.n_teams, std::move(rounds));
}

}  // namespace ttp
