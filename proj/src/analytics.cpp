#include "ttp/analytics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "ttp/constraints.hpp"
#include "ttp/generator.hpp"

namespace ttp {

Constraint constraint_from_token(std::string_view token) {
  if (token == "drr") return Constraint::Drr;
  if (token == "maxstreak") return Constraint::MaxStreak;
  if (token == "norepeat") return Constraint::NoRepeat;
  throw std::invalid_argument("unknown constraint: " + std::string(token));
}

std::string_view constraint_token(Constraint c) {
  switch (c) {
    case Constraint::Drr: return "drr";
    case Constraint::MaxStreak: return "maxstreak";
    case Constraint::NoRepeat: return "norepeat";
  }
  return "?";
}

SweepConfig SweepConfig::defaults(std::uint64_t master_seed) {
  SweepConfig cfg;
  for (int n = 4; n <= 50; n += 2) cfg.team_sizes.push_back(n);
  cfg.samples_per_size = 1000;
  cfg.k_values = {1, 2, 3, 4, 5, 6};
  cfg.master_seed = master_seed;
  return cfg;
}

namespace {

void validate(const SweepConfig& cfg) {
  if (cfg.team_sizes.empty()) throw std::invalid_argument("team_sizes is empty");
  for (int n : cfg.team_sizes) {
    if (n < 4 || n % 2 != 0) {
      throw std::invalid_argument("team sizes must be even and >= 4, got " +
                                  std::to_string(n));
    }
  }
  if (cfg.samples_per_size < 1) {
    throw std::invalid_argument("samples_per_size must be >= 1");
  }
  for (int k : cfg.k_values) {
    if (k < 1) throw std::invalid_argument("k values must be >= 1");
  }
}

// All violation counts for one schedule, sharing one pass over the rounds
// for the venue strings so every k is counted on the same tournament.
void count_all(const Schedule& s, const std::vector<int>& k_values,
               long long* out /* drr, norepeat, maxstreak per k */) {
  out[0] = count_drr(s);
  out[1] = count_norepeat(s);
  std::vector<std::string> venues(static_cast<std::size_t>(s.n_teams()));
  for (auto& v : venues) v.reserve(static_cast<std::size_t>(s.round_count()));
  for (const Round& round : s.rounds()) {
    for (const MatchUp& m : round) {
      venues[static_cast<std::size_t>(m.home)] += 'H';
      venues[static_cast<std::size_t>(m.away)] += 'A';
    }
  }
  for (std::size_t ki = 0; ki < k_values.size(); ++ki) {
    long long total = 0;
    for (const std::string& v : venues) total += streak_violations(v, k_values[ki]);
    out[2 + ki] = total;
  }
}

std::vector<SweepRecord> run_sweep_impl(const SweepConfig& cfg, bool parallel) {
  validate(cfg);
  std::vector<SweepRecord> records;
  const std::size_t per_sample = 2 + cfg.k_values.size();

  for (int n : cfg.team_sizes) {
    const int samples = cfg.samples_per_size;
    std::vector<long long> counts(per_sample * static_cast<std::size_t>(samples));
    bool failed = false;
    std::string failure;

#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (int i = 0; i < samples; ++i) {
      try {
        const Schedule s =
            random_schedule(GenConfig{n, cfg.master_seed}, static_cast<std::uint64_t>(i));
        count_all(s, cfg.k_values, &counts[per_sample * static_cast<std::size_t>(i)]);
      } catch (const std::exception& e) {
#pragma omp critical
        {
          failed = true;
          failure = e.what();
        }
      }
    }
    if (failed) {
      throw std::runtime_error("sweep incomplete at n_teams=" + std::to_string(n) +
                               ": " + failure);
    }

    for (std::size_t c = 0; c < per_sample; ++c) {
      SweepRecord rec;
      rec.n_teams = n;
      rec.samples = samples;
      if (c == 0) {
        rec.constraint = Constraint::Drr;
      } else if (c == 1) {
        rec.constraint = Constraint::NoRepeat;
      } else {
        rec.constraint = Constraint::MaxStreak;
        rec.k = cfg.k_values[c - 2];
      }
      long long min = std::numeric_limits<long long>::max();
      long long max = std::numeric_limits<long long>::min();
      long long sum = 0;
      for (int i = 0; i < samples; ++i) {
        const long long v = counts[per_sample * static_cast<std::size_t>(i) + c];
        min = std::min(min, v);
        max = std::max(max, v);
        sum += v;
      }
      rec.min = min;
      rec.max = max;
      rec.avg = static_cast<double>(sum) / static_cast<double>(samples);
      records.push_back(rec);
    }
  }
  return records;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  return run_sweep_impl(cfg, true);
}

std::vector<SweepRecord> run_sweep_serial(const SweepConfig& cfg) {
  return run_sweep_impl(cfg, false);
}

FitCoefficients fit_quadratic(const std::vector<std::pair<int, double>>& points) {
  std::vector<int> distinct;
  for (const auto& [n, y] : points) {
    bool seen = false;
    for (int d : distinct) seen = seen || d == n;
    if (!seen) distinct.push_back(n);
  }
  if (distinct.size() < 3) {
    throw std::invalid_argument("quadratic fit needs >= 3 distinct n values, got " +
                                std::to_string(distinct.size()));
  }

  // Normal equations in long double; the grids here are tiny and
  // well-conditioned enough that this is exact to ~1e-15 relative.
  long double s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
  const long double s0 = static_cast<long double>(points.size());
  for (const auto& [ni, yi] : points) {
    const long double n = ni;
    const long double y = yi;
    s1 += n;
    s2 += n * n;
    s3 += n * n * n;
    s4 += n * n * n * n;
    t0 += y;
    t1 += n * y;
    t2 += n * n * y;
  }
  long double m[3][4] = {{s4, s3, s2, t2}, {s3, s2, s1, t1}, {s2, s1, s0, t0}};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::fabs(static_cast<double>(m[row][col])) >
          std::fabs(static_cast<double>(m[pivot][col]))) {
        pivot = row;
      }
    }
    std::swap(m[col], m[pivot]);
    for (int row = col + 1; row < 3; ++row) {
      const long double factor = m[row][col] / m[col][col];
      for (int x = col; x < 4; ++x) m[row][x] -= factor * m[col][x];
    }
  }
  long double coef[3];
  for (int row = 2; row >= 0; --row) {
    long double rhs = m[row][3];
    for (int x = row + 1; x < 3; ++x) rhs -= m[row][x] * coef[x];
    coef[row] = rhs / m[row][row];
  }

  FitCoefficients fit;
  fit.a = static_cast<double>(coef[0]);
  fit.b = static_cast<double>(coef[1]);
  fit.c = static_cast<double>(coef[2]);

  const long double mean_y = t0 / s0;
  long double ss_tot = 0, ss_res = 0;
  for (const auto& [ni, yi] : points) {
    const long double n = ni;
    const long double predicted = coef[0] * n * n + coef[1] * n + coef[2];
    ss_tot += (yi - mean_y) * (yi - mean_y);
    ss_res += (yi - predicted) * (yi - predicted);
  }
  fit.r_squared = ss_tot == 0 ? 1.0 : static_cast<double>(1.0L - ss_res / ss_tot);
  return fit;
}

double expected_violations(int n_teams, Constraint constraint, std::optional<int> k) {
  if (n_teams < 4 || n_teams % 2 != 0) {
    throw std::invalid_argument("n_teams must be even and >= 4, got " +
                                std::to_string(n_teams));
  }
  const double n = n_teams;
  const double season = 2.0 * (n - 1.0);
  switch (constraint) {
    case Constraint::MaxStreak: {
      if (!k) throw std::invalid_argument("maxstreak expectation needs a k value");
      if (*k < 1) throw std::invalid_argument("k must be >= 1");
      if (static_cast<double>(*k) >= season) return 0.0;
      return n * (season - static_cast<double>(*k)) * std::ldexp(1.0, -*k);
    }
    case Constraint::NoRepeat:
      return (2.0 * n - 3.0) * n / season;
    case Constraint::Drr:
      return 2.0 * n * (n - 1.0) * std::pow(1.0 - 1.0 / season, season);
  }
  throw std::invalid_argument("unsupported constraint");
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
  std::string csv = "n_teams,constraint,k,samples,min,avg,max\n";
  for (const SweepRecord& rec : records) {
    csv += std::to_string(rec.n_teams);
    csv += ',';
    csv += constraint_token(rec.constraint);
    csv += ',';
    if (rec.k) csv += std::to_string(*rec.k);
    csv += ',';
    csv += std::to_string(rec.samples);
    csv += ',';
    csv += std::to_string(rec.min);
    csv += ',';
    csv += format_double(rec.avg);
    csv += ',';
    csv += std::to_string(rec.max);
    csv += '\n';
  }
  return csv;
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view csv_text) {
  std::istringstream in{std::string(csv_text)};
  std::string line;
  if (!std::getline(in, line) || line != "n_teams,constraint,k,samples,min,avg,max") {
    throw std::runtime_error("bad sweep CSV header");
  }
  std::vector<SweepRecord> records;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 7) {
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": expected 7 fields, got " + std::to_string(fields.size()));
    }
    try {
      SweepRecord rec;
      rec.n_teams = std::stoi(fields[0]);
      rec.constraint = constraint_from_token(fields[1]);
      if (!fields[2].empty()) rec.k = std::stoi(fields[2]);
      rec.samples = std::stoi(fields[3]);
      rec.min = std::stoll(fields[4]);
      rec.avg = std::stod(fields[5]);
      rec.max = std::stoll(fields[6]);
      records.push_back(rec);
    } catch (const std::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return records;
}

std::string fit_json(Constraint constraint, std::optional<int> k,
                     const FitCoefficients& fit) {
  nlohmann::ordered_json j;
  j["constraint"] = std::string(constraint_token(constraint));
  if (k) {
    j["k"] = *k;
  } else {
    j["k"] = nullptr;
  }
  j["A"] = fit.a;
  j["B"] = fit.b;
  j["C"] = fit.c;
  j["r_squared"] = fit.r_squared;
  return j.dump();
}

}  // namespace ttp
