#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "manhattan/lattice.hpp"
#include "manhattan/rng.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace manhattan;

namespace {

LocalEnv env_of(std::initializer_list<int> signs) {
  LocalEnv env;
  for (int s : signs) env.push_back(static_cast<std::int8_t>(s));
  return env;
}

Site random_site(Xoshiro256StarStar& rng, int d, int box) {
  Site x(d);
  for (int i = 0; i < d; ++i) {
    x[i] = static_cast<Coord>(bounded_index(rng.next(), 2 * box + 1)) - box;
  }
  return x;
}

}  // namespace

TEST_CASE("dimension bounds") {
  CHECK_NOTHROW(Dimension(2));
  CHECK_NOTHROW(Dimension(64));
  CHECK_THROWS_AS(Dimension(1), std::invalid_argument);
  CHECK_THROWS_AS(Dimension(0), std::invalid_argument);
  CHECK_THROWS_AS(Dimension(-3), std::invalid_argument);
  CHECK_THROWS_AS(Dimension(65), std::invalid_argument);
}

TEST_CASE("manhattan local environments") {
  const auto m3 = OrientationRule::manhattan(Dimension(3));
  CHECK(local_env(m3, {0, 0, 0}) == env_of({+1, +1, +1}));
  CHECK(local_env(m3, {1, 0, 0}) == env_of({+1, -1, -1}));

  const auto m2 = OrientationRule::manhattan(Dimension(2));
  CHECK(local_env(m2, {1, 0}) == env_of({+1, -1}));
  CHECK(local_env(m2, {1, 1}) == env_of({-1, -1}));
  CHECK(local_env(m2, {-1, 0}) == env_of({+1, -1}));  // parity of -1 is odd
}

TEST_CASE("dimension mismatch rejected") {
  const auto m3 = OrientationRule::manhattan(Dimension(3));
  CHECK_THROWS_AS(local_env(m3, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(out_steps(m3, {0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("out steps") {
  const auto m2 = OrientationRule::manhattan(Dimension(2));
  const auto at_origin = out_steps(m2, {0, 0});
  REQUIRE(at_origin.size() == 2);
  CHECK(at_origin[0].axis == 0);
  CHECK(at_origin[0].sign == +1);
  CHECK(at_origin[1].sign == +1);

  const auto m3 = OrientationRule::manhattan(Dimension(3));
  const auto at_e1 = out_steps(m3, {1, 0, 0});
  CHECK(at_e1[0].sign == +1);
  CHECK(at_e1[1].sign == -1);
  CHECK(at_e1[2].sign == -1);

  const auto at_11 = out_steps(m2, {1, 1});
  CHECK(at_11[0].sign == -1);
  CHECK(at_11[1].sign == -1);
}

TEST_CASE("directed edge queries") {
  const auto m2 = OrientationRule::manhattan(Dimension(2));
  CHECK(is_directed_edge(m2, {0, 0}, {1, 0}));
  CHECK_FALSE(is_directed_edge(m2, {0, 0}, {-1, 0}));
  CHECK_FALSE(is_directed_edge(m2, {0, 0}, {1, 1}));  // not a unit step
  CHECK_FALSE(is_directed_edge(m2, {0, 0}, {0, 0}));
  CHECK_FALSE(is_directed_edge(m2, {0, 0}, {2, 0}));
}

TEST_CASE("out and in neighbours are disjoint and cover all 2d") {
  Xoshiro256StarStar rng(2024);
  for (int d = 2; d <= 6; ++d) {
    const Dimension dim(d);
    for (const auto& rule :
         {OrientationRule::manhattan(dim), OrientationRule::iid_coin(dim, 99)}) {
      for (int trial = 0; trial < 50; ++trial) {
        const Site x = random_site(rng, d, 20);
        int out_count = 0, in_count = 0;
        for (int axis = 0; axis < d; ++axis) {
          for (int sign : {+1, -1}) {
            Site y = x;
            y[axis] += sign;
            const bool out_edge = is_directed_edge(rule, x, y);
            const bool in_edge = is_directed_edge(rule, y, x);
            CHECK(out_edge != in_edge);  // disjoint, and together cover
            out_count += out_edge;
            in_count += in_edge;
          }
        }
        CHECK(out_count == d);
        CHECK(in_count == d);
      }
    }
  }
}

TEST_CASE("line consistency") {
  const auto m2 = OrientationRule::manhattan(Dimension(2));
  CHECK(check_line_consistency(m2, {0, 0}, 0, 5));
  const auto m3 = OrientationRule::manhattan(Dimension(3));
  CHECK(check_line_consistency(m3, {4, -7, 2}, 1, 10));

  const auto iid = OrientationRule::iid_coin(Dimension(2), 7);
  CHECK(check_line_consistency(iid, {3, -2}, 1, 8));

  CHECK_THROWS_AS(check_line_consistency(m2, {0, 0}, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_line_consistency(m2, {0, 0}, 2, 3), std::invalid_argument);
}

TEST_CASE("line constancy across the whole env, random sites") {
  Xoshiro256StarStar rng(5);
  for (int d : {2, 3, 5}) {
    const Dimension dim(d);
    for (const auto& rule :
         {OrientationRule::manhattan(dim), OrientationRule::iid_coin(dim, 3)}) {
      for (int trial = 0; trial < 30; ++trial) {
        Site x = random_site(rng, d, 15);
        const int axis = static_cast<int>(bounded_index(rng.next(), d));
        const auto base = local_env(rule, x);
        Site y = x;
        for (int k = -4; k <= 4; ++k) {
          y[axis] = x[axis] + k;
          CHECK(local_env(rule, y)[axis] == base[axis]);
        }
      }
    }
  }
}

TEST_CASE("manhattan parity identity and sign product") {
  // env[i] = (-1)^(S - x[i]) with S the coordinate sum; the product over i is
  // +1 for odd d and (-1)^S for even d.
  for (int d : {2, 3, 4, 5}) {
    const auto rule = OrientationRule::manhattan(Dimension(d));
    Site x(d, -2);
    bool done = false;
    while (!done) {
      Coord sum = 0;
      for (Coord c : x) sum += c;
      const auto env = local_env(rule, x);
      int product = 1;
      for (int i = 0; i < d; ++i) {
        const int expected = ((sum - x[i]) % 2 + 2) % 2 == 0 ? +1 : -1;
        CHECK(env[i] == expected);
        product *= env[i];
      }
      if (d % 2 == 1) {
        CHECK(product == +1);
      } else {
        CHECK(product == (((sum % 2 + 2) % 2 == 0) ? +1 : -1));
      }
      int axis = 0;
      while (axis < d && x[axis] == 2) x[axis++] = -2;
      if (axis == d) done = true;
      else ++x[axis];
    }
  }
}

TEST_CASE("census counts") {
  CHECK(env_census(OrientationRule::manhattan(Dimension(2))).size() == 4);
  CHECK(env_census(OrientationRule::manhattan(Dimension(3))).size() == 4);
  CHECK(env_census(OrientationRule::manhattan(Dimension(4))).size() == 16);
  CHECK(env_census(OrientationRule::manhattan(Dimension(5))).size() == 16);
  CHECK(env_census(OrientationRule::manhattan(Dimension(6))).size() == 64);
}

TEST_CASE("census is stable in the radius") {
  for (int d : {2, 3, 4}) {
    const auto rule = OrientationRule::manhattan(Dimension(d));
    CHECK(env_census(rule, 2) == env_census(rule, 3));
  }
  CHECK_THROWS_AS(env_census(OrientationRule::manhattan(Dimension(2)), 1),
                  std::invalid_argument);
}

TEST_CASE("expected census counts") {
  CHECK(expected_manhattan_census(Dimension(2)) == 4);
  CHECK(expected_manhattan_census(Dimension(3)) == 4);
  CHECK(expected_manhattan_census(Dimension(6)) == 64);
  CHECK(expected_manhattan_census(Dimension(7)) == 64);
}

TEST_CASE("census json") {
  const auto envs = env_census(OrientationRule::manhattan(Dimension(2)));
  CHECK(census_to_json(envs) == "[[-1,-1],[-1,1],[1,-1],[1,1]]");
}

TEST_CASE("iid rule is deterministic and seed-sensitive") {
  const auto a = OrientationRule::iid_coin(Dimension(3), 7);
  const auto b = OrientationRule::iid_coin(Dimension(3), 7);
  const auto c = OrientationRule::iid_coin(Dimension(3), 8);
  Xoshiro256StarStar rng(11);
  int diffs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Site x = random_site(rng, 3, 50);
    CHECK(local_env(a, x) == local_env(b, x));
    if (local_env(a, x) != local_env(c, x)) ++diffs;
  }
  CHECK(diffs > 0);
}

TEST_CASE("custom table rule") {
  // Mirror the Manhattan signs on a small box, then compare.
  const Dimension d(2);
  const auto manhattan_rule = OrientationRule::manhattan(d);
  LineTable table;
  for (Coord perp = -3; perp <= 3; ++perp) {
    table[{0, {perp}}] = (perp % 2 + 2) % 2 == 0 ? +1 : -1;
    table[{1, {perp}}] = (perp % 2 + 2) % 2 == 0 ? +1 : -1;
  }
  const auto custom = OrientationRule::custom(d, table);

  for (Coord x = -3; x <= 3; ++x) {
    for (Coord y = -3; y <= 3; ++y) {
      CHECK(local_env(custom, {x, y}) == local_env(manhattan_rule, {x, y}));
    }
  }
  CHECK_THROWS_AS(local_env(custom, {0, 5}), std::out_of_range);

  LineTable bad;
  bad[{0, {0}}] = 2;
  CHECK_THROWS_AS(OrientationRule::custom(d, bad), std::invalid_argument);
  LineTable bad_axis;
  bad_axis[{3, {0}}] = 1;
  CHECK_THROWS_AS(OrientationRule::custom(d, bad_axis), std::invalid_argument);
}

TEST_CASE("rule names") {
  CHECK(OrientationRule::manhattan(Dimension(2)).name() == "manhattan");
  CHECK(OrientationRule::iid_coin(Dimension(2), 123).name() == "iid:123");
  CHECK(OrientationRule::custom(Dimension(2), {}).name() == "custom");
}
