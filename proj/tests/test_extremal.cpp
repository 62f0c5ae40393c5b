#include <doctest.h>

#include <cmath>
#include <thread>

#include "aoposet/errors.hpp"
#include "aoposet/extremal.hpp"

using namespace aoposet;
using namespace aoposet::extremal;

TEST_CASE("Lambda values") {
  const std::vector<Count> want{1, 3, 5, 8, 10, 13, 16, 20};
  for (Count a = 1; a <= 8; ++a) {
    CHECK(lambda_closed(a) == want[a - 1]);
    CHECK(lambda_rec(a) == want[a - 1]);
  }
  CHECK(lambda_closed(0) == 0);
  for (Count a = 1; a <= 4096; ++a) REQUIRE(lambda_closed(a) == lambda_rec(a));
  for (Count k = 0; k <= 12; ++k) CHECK(lambda_closed(Count{1} << k) == ((k + 2) << k) / 2);
}

TEST_CASE("recurrence argmax claims") {
  for (Count a = 2; a <= 2048; ++a) {
    const auto r = lambda_argmax_properties(a);
    REQUIRE(r.half_attains);
    REQUIRE(r.power_split_attains);
    REQUIRE(r.strict_for_power_of_two);
  }
  CHECK_THROWS_AS(lambda_argmax_properties(1), std::invalid_argument);
}

TEST_CASE("Lambda(a, h) regions") {
  CHECK(lambda_h(4, 2) == Count{6});
  CHECK(lambda_h(4, 1) == Count{4});
  CHECK(lambda_h(2, 1) == Count{2});
  CHECK(lambda_h(2, 0) == Count{0});
  CHECK(lambda_h(6, 2) == Count{9});
  CHECK(lambda_h(5, 9) == lambda_closed(5));
  CHECK_FALSE(lambda_h(5, 2));
  CHECK_FALSE(lambda_h(8, 2));
  for (Count a = 1; a <= 300; ++a) {
    std::optional<Count> prev;
    for (Count h = 0; h <= a; ++h) {
      const auto v = lambda_h(a, h);
      if (!v) continue;
      if (prev) CHECK(*v >= *prev);
      if (2 * h >= a + (a % 2) && h < a) CHECK(*lambda_h(a, h + 1) - *v == 1);
      CHECK(*v + (a - h) <= lambda_closed(a));
      prev = v;
    }
  }
}

TEST_CASE("X values and identity") {
  const std::vector<Count> want{1, 3, 7, 11, 15, 20, 25, 31};
  for (Count a = 1; a <= 8; ++a) CHECK(x_closed(a) == want[a - 1]);
  for (Count a = 2; a <= 4096; ++a) REQUIRE(x_closed(a) == x_closed_identity(a));
  for (Count k = 1; k <= 12; ++k) CHECK(x_closed(Count{1} << k) == ((k + 1) << k) - 1);
  for (Count a = 2; a <= 4096; ++a) REQUIRE(x_closed(a) > x_closed(a - 1));
  CHECK_THROWS_AS(x_closed(0), std::invalid_argument);
  CHECK_THROWS_AS(x_closed_identity(1), std::invalid_argument);
}

TEST_CASE("X via maximization") {
  for (Count a = 2; a <= 512; a += 2) REQUIRE(x_via_max(a, {}) == x_closed(a));
  CHECK_THROWS_AS(x_via_max(5, {}), Unspecified);
  const ConfirmedLambdaH c{5, 2, 7};
  CHECK(x_via_max(5, std::span(&c, 1)) == 15);
}

TEST_CASE("ao(T_n) bracket") {
  auto b = ao_Tn_bounds(12);
  CHECK(b.k == 3);
  CHECK(b.lo == 5);
  CHECK(b.hi == 8);
  CHECK(b.predicted == 5);
  CHECK_FALSE(b.exact);
  b = ao_Tn_bounds(31);
  CHECK(b.k == 3);
  CHECK(b.predicted == 8);
  CHECK(b.exact);
  b = ao_Tn_bounds(32);
  CHECK(b.k == 4);
  CHECK(b.predicted == 9);
  CHECK(ao_Tn_bounds(1).predicted == 1);
  for (Count n = 2; n <= 5000; ++n) {
    const auto t = ao_Tn_bounds(n);
    REQUIRE(t.lo <= t.predicted);
    REQUIRE(t.predicted <= t.hi);
  }
  CHECK_THROWS_AS(ao_Tn_bounds(0), std::invalid_argument);
}

TEST_CASE("asymptotic ratio envelope") {
  for (Count n = 64; n <= 200000; n += 997) {
    const double r = asymptotic_check(n);
    REQUIRE(r >= 0.5);
    REQUIRE(r <= 2.0);
  }
}

TEST_CASE("table") {
  ExtremalTable t(64);
  CHECK(t.check_invariants().empty());
  CHECK(t.lambda(8).value == 20);
  CHECK(t.x(8).value == 31);
  CHECK(t.lambda(8).provenance == Provenance::Recurrence);
  CHECK(t.lambda_h(4, 9)->value == 8);
  CHECK_FALSE(t.lambda_h(5, 2));
  t.add_oracle(5, 2, 7);
  CHECK(t.lambda_h(5, 2)->provenance == Provenance::Oracle);
  CHECK_THROWS_AS(t.add_oracle(4, 2, 5), AssertionFailure);
  CHECK_NOTHROW(t.add_oracle(4, 2, 6));
}

TEST_CASE("recurrence memo under concurrent readers") {
  std::vector<std::thread> threads;
  std::vector<Count> got(8);
  for (std::size_t i = 0; i < got.size(); ++i)
    threads.emplace_back([&, i] { got[i] = lambda_rec(10000 - i); });
  for (auto& th : threads) th.join();
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == lambda_closed(10000 - i));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(lambda_closed(kMaxArgument + 1), std::invalid_argument);
  CHECK_NOTHROW(lambda_closed(kMaxArgument));
  CHECK_THROWS_AS(lambda_rec(20000), std::invalid_argument);
  CHECK(ceil_log2(5) == 3);
  CHECK(floor_log2(5) == 2);
  CHECK(ceil_log2(8) == 3);
}
