#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "test_support.hpp"
#include "ttp/analytics.hpp"
#include "ttp/constraints.hpp"
#include "ttp/generator.hpp"

using namespace ttp;

TEST_CASE("count_drr on the hand-built schedule and its mutant") {
  CHECK(count_drr(testing::schedule_v()) == 0);
  // one duplicate (0,1), one missing (1,0)
  CHECK(count_drr(testing::schedule_v_mutant()) == 2);
}

TEST_CASE("streak_violations unit vectors") {
  CHECK(streak_violations("HHH", 3) == 0);
  CHECK(streak_violations("HHHH", 3) == 1);
  CHECK(streak_violations("HHHAAA", 1) == 4);  // runs 3 and 3, each contributing 2
  CHECK(streak_violations("", 1) == 0);
  CHECK(streak_violations("H", 1) == 0);
  CHECK(streak_violations("HHHAAA", 10) == 0);  // threshold beyond season length
  CHECK_THROWS_AS(streak_violations("HH", 0), std::invalid_argument);
}

TEST_CASE("streak_violations agrees with the position-scan oracle") {
  rng::Xoshiro256StarStar gen(99);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string venues;
    const int length = static_cast<int>(gen.bounded(20));
    for (int i = 0; i < length; ++i) venues += gen.bounded(2) ? 'H' : 'A';
    for (int k = 1; k <= 5; ++k) {
      CHECK(streak_violations(venues, k) == testing::streak_by_position_scan(venues, k));
    }
  }
}

TEST_CASE("count_maxstreak on the hand-built schedule") {
  const Schedule v = testing::schedule_v();
  // venue strings: HHHAAA, AHHHAA, HAAAHH, AAAHHH
  CHECK(count_maxstreak(v, 3) == 0);
  // runs of 3 per team: 2, 1, 1, 2 -> one violation each at k=2
  CHECK(count_maxstreak(v, 2) == 6);
  // sum over runs of (len-1): 4 + 3 + 3 + 4
  CHECK(count_maxstreak(v, 1) == 14);
  CHECK(count_maxstreak(v, 7) == 0);

  // cross-checked position scan route
  long long by_scan = 0;
  for (TeamId t = 0; t < 4; ++t) {
    by_scan += testing::streak_by_position_scan(venue_sequence(v, t), 2);
  }
  CHECK(by_scan == 6);
}

TEST_CASE("count_norepeat vectors") {
  CHECK(count_norepeat(testing::schedule_v()) == 0);

  // round 1 repeats both pairs of round 0; remaining rounds repeat-free
  const Schedule repeat_adjacent(4, {{{0, 1}, {2, 3}},
                                     {{1, 0}, {3, 2}},
                                     {{0, 2}, {1, 3}},
                                     {{0, 3}, {1, 2}},
                                     {{2, 0}, {3, 1}},
                                     {{3, 0}, {2, 1}}});
  CHECK(count_norepeat(repeat_adjacent) == 2);

  // all rounds identical: maximum (2n-3)*n/2 = 10
  const Schedule all_same(4, {{{0, 1}, {2, 3}},
                              {{0, 1}, {2, 3}},
                              {{0, 1}, {2, 3}},
                              {{0, 1}, {2, 3}},
                              {{0, 1}, {2, 3}},
                              {{0, 1}, {2, 3}}});
  CHECK(count_norepeat(all_same) == 10);

  // venue flip across the adjacency still counts (unordered pairs)
  const Schedule flipped(4, {{{0, 1}, {2, 3}},
                             {{1, 0}, {2, 3}},
                             {{0, 2}, {1, 3}},
                             {{0, 3}, {1, 2}},
                             {{2, 0}, {3, 1}},
                             {{3, 0}, {2, 1}}});
  CHECK(count_norepeat(flipped) == 2);
}

TEST_CASE("violation_report bundles and mutant vector") {
  const Schedule v = testing::schedule_v();
  CHECK(violation_report(v, 3) == ViolationReport{0, 3, 0, 0});
  CHECK(violation_report(v, 1) == ViolationReport{0, 1, 14, 0});

  const Schedule mutant = testing::schedule_v_mutant();
  CHECK(venue_sequence(mutant, 0) == "HHHHAA");
  const ViolationReport r = violation_report(mutant, 3);
  CHECK(r.drr == 2);
  CHECK(r.max_streak == 1);
  CHECK(r.no_repeat == 0);
}

TEST_CASE("drr count is always even") {
  for (int i = 0; i < 10000; ++i) {
    const Schedule s = random_schedule(GenConfig{4, 77}, static_cast<std::uint64_t>(i));
    CHECK(count_drr(s) % 2 == 0);
  }
  for (int i = 0; i < 500; ++i) {
    const Schedule s = random_schedule(GenConfig{8, 78}, static_cast<std::uint64_t>(i));
    CHECK(count_drr(s) % 2 == 0);
  }
}

TEST_CASE("maxstreak is monotone in k and bounded") {
  for (int i = 0; i < 10000; ++i) {
    const Schedule s = random_schedule(GenConfig{4, 123}, static_cast<std::uint64_t>(i));
    long long previous = count_maxstreak(s, 1);
    CHECK(previous <= 4LL * (2 * 3 - 1));
    for (int k = 2; k <= 7; ++k) {
      const long long current = count_maxstreak(s, k);
      CHECK(current <= previous);
      if (k < 6) CHECK(current <= 4LL * (6 - k));
      previous = current;
    }
    CHECK(count_maxstreak(s, 6) == 0);  // k reaches the season length
  }
}

TEST_CASE("norepeat bound") {
  for (int i = 0; i < 2000; ++i) {
    const Schedule s = random_schedule(GenConfig{6, 5}, static_cast<std::uint64_t>(i));
    CHECK(count_norepeat(s) <= (2 * 6 - 3) * 3);
  }
}

TEST_CASE("means over random schedules match the oracles") {
  const int samples = 10000;
  long long drr_total = 0, norepeat_total = 0;
  for (int i = 0; i < samples; ++i) {
    const Schedule s = random_schedule(GenConfig{4, 2718}, static_cast<std::uint64_t>(i));
    drr_total += count_drr(s);
    norepeat_total += count_norepeat(s);
  }
  CHECK(std::abs(drr_total / static_cast<double>(samples) - 8.04) <= 0.15);
  CHECK(std::abs(norepeat_total / static_cast<double>(samples) - 10.0 / 3.0) <= 0.1);
}

TEST_CASE("report serialization") {
  const ViolationReport r = violation_report(testing::schedule_v(), 3);
  CHECK(report_csv_header() == "drr,max_streak_k,max_streak,no_repeat");
  CHECK(report_csv_row(r) == "0,3,0,0");
  CHECK(report_json(r) == R"({"drr":0,"max_streak_k":3,"max_streak":0,"no_repeat":0})");
}
