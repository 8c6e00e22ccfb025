#include "ttp/diversity.hpp"

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ttp {

DiffMode diff_mode_from_token(std::string_view token) {
  if (token == "full") return DiffMode::Full;
  if (token == "opponent") return DiffMode::Opponent;
  if (token == "venue") return DiffMode::Venue;
  throw std::invalid_argument("unknown diff mode: " + std::string(token));
}

std::string_view diff_mode_token(DiffMode mode) {
  switch (mode) {
    case DiffMode::Full: return "full";
    case DiffMode::Opponent: return "opponent";
    case DiffMode::Venue: return "venue";
  }
  return "?";
}

namespace {

// Flat per-team table with opponent id and venue bit packed into one word,
// so a full-mode comparison is a single compare per cell.
struct EncodedTable {
  std::vector<std::uint16_t> opponent;
  std::vector<std::uint16_t> cell;  // opponent*2 + (venue == Home)
  std::vector<std::uint16_t> venue;
};

EncodedTable encode(const Schedule& s) {
  const int rounds = s.round_count();
  EncodedTable enc;
  const std::size_t cells = static_cast<std::size_t>(s.n_teams()) * rounds;
  enc.opponent.resize(cells);
  enc.cell.resize(cells);
  enc.venue.resize(cells);
  for (int r = 0; r < rounds; ++r) {
    for (const MatchUp& m : s.round(r)) {
      const std::size_t hi = static_cast<std::size_t>(m.home) * rounds + r;
      const std::size_t ai = static_cast<std::size_t>(m.away) * rounds + r;
      enc.opponent[hi] = static_cast<std::uint16_t>(m.away);
      enc.opponent[ai] = static_cast<std::uint16_t>(m.home);
      enc.venue[hi] = 1;
      enc.venue[ai] = 0;
      enc.cell[hi] = static_cast<std::uint16_t>(m.away * 2 + 1);
      enc.cell[ai] = static_cast<std::uint16_t>(m.home * 2);
    }
  }
  return enc;
}

int encoded_diff(const EncodedTable& a, const EncodedTable& b, DiffMode mode) {
  const std::vector<std::uint16_t>* lhs = nullptr;
  const std::vector<std::uint16_t>* rhs = nullptr;
  switch (mode) {
    case DiffMode::Full: lhs = &a.cell; rhs = &b.cell; break;
    case DiffMode::Opponent: lhs = &a.opponent; rhs = &b.opponent; break;
    case DiffMode::Venue: lhs = &a.venue; rhs = &b.venue; break;
  }
  int count = 0;
  for (std::size_t i = 0; i < lhs->size(); ++i) {
    count += (*lhs)[i] != (*rhs)[i];
  }
  return count;
}

void check_same_shape(const Schedule& a, const Schedule& b) {
  if (a.n_teams() != b.n_teams() || a.round_count() != b.round_count()) {
    throw std::invalid_argument("schedules have different shapes (" +
                                std::to_string(a.n_teams()) + " vs " +
                                std::to_string(b.n_teams()) + " teams)");
  }
}

DiffStats stats_from_counts(DiffMode mode, std::uint64_t pair_count,
                            const std::vector<std::uint64_t>& counts) {
  DiffStats stats;
  stats.mode = mode;
  stats.pair_count = pair_count;
  std::uint64_t total = 0;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] == 0) continue;
    stats.histogram[static_cast<int>(d)] = counts[d];
    total += counts[d] * d;
  }
  stats.mean = static_cast<double>(total) / static_cast<double>(pair_count);
  return stats;
}

std::vector<EncodedTable> encode_population(const std::vector<Schedule>& population) {
  if (population.size() < 2) {
    throw std::invalid_argument("pairwise stats need at least 2 schedules, got " +
                                std::to_string(population.size()));
  }
  for (const Schedule& s : population) check_same_shape(population.front(), s);
  std::vector<EncodedTable> encoded;
  encoded.reserve(population.size());
  for (const Schedule& s : population) encoded.push_back(encode(s));
  return encoded;
}

}  // namespace

int diff(const Schedule& a, const Schedule& b, DiffMode mode) {
  check_same_shape(a, b);
  return encoded_diff(encode(a), encode(b), mode);
}

DiffStats pairwise_stats(const std::vector<Schedule>& population, DiffMode mode) {
  const std::vector<EncodedTable> encoded = encode_population(population);
  const int n = static_cast<int>(population.size());
  const std::size_t max_distance = encoded.front().cell.size();
  std::vector<std::uint64_t> counts(max_distance + 1, 0);

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(max_distance + 1, 0);
#pragma omp for schedule(dynamic, 4) nowait
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        ++local[static_cast<std::size_t>(encoded_diff(encoded[i], encoded[j], mode))];
      }
    }
#pragma omp critical
    for (std::size_t d = 0; d <= max_distance; ++d) counts[d] += local[d];
  }

  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  return stats_from_counts(mode, pairs, counts);
}

DiffStats pairwise_stats_serial(const std::vector<Schedule>& population, DiffMode mode) {
  const std::vector<EncodedTable> encoded = encode_population(population);
  const int n = static_cast<int>(population.size());
  const std::size_t max_distance = encoded.front().cell.size();
  std::vector<std::uint64_t> counts(max_distance + 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++counts[static_cast<std::size_t>(encoded_diff(encoded[i], encoded[j], mode))];
    }
  }
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  return stats_from_counts(mode, pairs, counts);
}

std::string histogram_csv(const DiffStats& stats) {
  std::string csv = "distance,count\n";
  for (const auto& [distance, count] : stats.histogram) {
    csv += std::to_string(distance) + ',' + std::to_string(count) + '\n';
  }
  return csv;
}

std::string stats_json(const DiffStats& stats) {
  nlohmann::ordered_json j;
  j["mode"] = std::string(diff_mode_token(stats.mode));
  j["pairs"] = stats.pair_count;
  j["mean"] = stats.mean;
  return j.dump();
}

}  // namespace ttp
