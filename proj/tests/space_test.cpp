#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "argrn/space.hpp"

using namespace argrn;

TEST(ToroidalDistance, Examples) {
  EXPECT_DOUBLE_EQ(toroidal_distance({3, 4}, {3, 4}, 10), 0.0);
  EXPECT_DOUBLE_EQ(toroidal_distance({0, 0}, {9, 9}, 10), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(toroidal_distance({0, 0}, {5, 0}, 10), 5.0);
  EXPECT_DOUBLE_EQ(toroidal_distance({1, 0}, {8, 0}, 10), 3.0);
}

TEST(ToroidalDistance, MetricOnSmallTorus) {
  const int g = 7;
  double max_seen = 0.0;
  std::vector<Position> cells;
  for (int x = 0; x < g; ++x) {
    for (int y = 0; y < g; ++y) cells.push_back({x, y});
  }
  for (auto p : cells) {
    for (auto q : cells) {
      const double d = toroidal_distance(p, q, g);
      EXPECT_DOUBLE_EQ(d, toroidal_distance(q, p, g));
      EXPECT_EQ(d == 0.0, p == q);
      max_seen = std::max(max_seen, d);
      for (auto r : {Position{0, 0}, Position{3, 5}, Position{6, 1}}) {
        EXPECT_LE(d, toroidal_distance(p, r, g) + toroidal_distance(r, q, g) + 1e-12);
      }
    }
  }
  EXPECT_LE(max_seen, std::sqrt(2.0) * g / 2.0);
}

TEST(RandomStep, ZeroStepStaysPut) {
  Rng rng(1);
  GridSpec grid{10, 0, 1.0};
  EXPECT_EQ(random_step({4, 7}, grid, rng), (Position{4, 7}));
}

TEST(RandomStep, StaysOnGrid) {
  Rng rng(2);
  GridSpec grid{10, 5, 1.0};
  Position p{0, 0};
  for (int i = 0; i < 10000; ++i) {
    p = random_step(p, grid, rng);
    ASSERT_GE(p.x, 0);
    ASSERT_LT(p.x, 10);
    ASSERT_GE(p.y, 0);
    ASSERT_LT(p.y, 10);
  }
}

TEST(RandomStep, UnitStepOffsetsAreUniform) {
  Rng rng(3);
  GridSpec grid{10, 1, 1.0};
  std::map<std::pair<int, int>, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const auto q = random_step({5, 5}, grid, rng);
    counts[{q.x - 5, q.y - 5}]++;
  }
  EXPECT_EQ(counts.size(), 9u);
  for (auto& [offset, n] : counts) EXPECT_NEAR(n / double(draws), 1.0 / 9.0, 0.02);
}

TEST(RandomStep, ConsumesTwoDraws) {
  Rng rng(4);
  random_step({0, 0}, GridSpec{}, rng);
  EXPECT_EQ(rng.draws(), 2u);
}

TEST(CentralPlacement, SingleCellGrid) {
  Rng rng(5);
  EXPECT_EQ(central_placement(GridSpec{1, 5, 1.0}, rng), (Position{0, 0}));
}

TEST(CentralPlacement, DefaultGridUsesCentralSquare) {
  EXPECT_EQ(central_range(10).lo, 3);
  EXPECT_EQ(central_range(10).hi, 7);
  Rng rng(6);
  std::map<std::pair<int, int>, int> seen;
  for (int i = 0; i < 10000; ++i) {
    const auto p = central_placement(GridSpec{}, rng);
    ASSERT_GE(p.x, 3);
    ASSERT_LE(p.x, 7);
    ASSERT_GE(p.y, 3);
    ASSERT_LE(p.y, 7);
    seen[{p.x, p.y}]++;
  }
  EXPECT_EQ(seen.size(), 25u);
}

TEST(CentralPlacement, AlwaysOnGrid) {
  for (int g = 1; g <= 40; ++g) {
    const auto r = central_range(g);
    EXPECT_GE(r.lo, 0);
    EXPECT_LT(r.hi, g);
    EXPECT_EQ(r.hi - r.lo + 1, std::max(1, g / 2)) << g;
  }
}

TEST(Shifted, WrapsBothWays) {
  EXPECT_EQ(shifted({9, 0}, 1, -1, 10), (Position{0, 9}));
  EXPECT_EQ(shifted({3, 3}, 10, 0, 10), (Position{3, 3}));
}
