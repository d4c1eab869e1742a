#include <doctest.h>

#include <random>

#include "clusterlab/errors.hpp"
#include "clusterlab/ysystem.hpp"

using namespace clusterlab;

TEST_CASE("single node recurrence") {
  YState s(1, 1);
  s.prev = {2};
  s.cur = {3};
  YState t = y_step(s);
  CHECK(t.prev == s.cur);
  // no neighbours: Y_{t-1} Y_{t+1} = 1
  CHECK(t.cur[0] == make_rational(1, 2));
  CHECK(y_orbit_period(s, 20) == 4);
}

TEST_CASE("non-positive values are rejected") {
  YState s(1, 1);
  s.prev = {-1};
  s.cur = {1};
  CHECK_THROWS_AS(y_step(s), ArithmeticError);
}

TEST_CASE("all ones orbit is periodic within the bound") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
    YState s(p, q);
    std::fill(s.prev.begin(), s.prev.end(), Rational(1));
    std::fill(s.cur.begin(), s.cur.end(), Rational(1));
    auto period = y_orbit_period(s, 2 * (p + q + 2));
    REQUIRE(period);
    CHECK((2 * (p + q + 2)) % *period == 0);
  }
}

TEST_CASE("random orbits divide 2(h + h')") {
  std::mt19937_64 rng(7);
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    for (YInit init : {YInit::parity, YInit::full}) {
      YReport r = y_period(p, q, init, 5, 4 * (p + q + 2), rng);
      CHECK(r.bound == 2 * (p + q + 2));
      CHECK(r.all_divide());
    }
  }
  YReport one = y_period(1, 1, YInit::full, 3, 16, rng);
  for (const auto& t : one.trials) CHECK(8 % *t.period == 0);
}

TEST_CASE("the 1 + Y denominator") {
  std::mt19937_64 rng(1);
  YReport a = y_period(1, 1, YInit::full, 2, 16, rng, Denominator::literal);
  CHECK(a.all_divide());
  YReport b = y_period(1, 2, YInit::full, 1, 40, rng, Denominator::literal);
  CHECK_FALSE(b.trials.front().period.has_value());
}

TEST_CASE("argument checks") {
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(y_period(0, 1, YInit::full, 1, 10, rng), InputError);
  CHECK_THROWS_AS(y_period(2, 2, YInit::full, 1, 3, rng), InputError);
}
