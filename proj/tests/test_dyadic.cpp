#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ivc/dyadic.hpp"

using namespace ivc;

namespace {

Dyadic dy(long long num, std::uint64_t expo) { return Dyadic::from_ratio(BigInt(num), expo); }

}  // namespace

TEST_CASE("canonical form") {
  CHECK(dy(0, 7).numerator() == 0);
  CHECK(dy(0, 7).exponent() == 0);
  CHECK(dy(4, 3) == dy(1, 1));
  CHECK(dy(8, 3) == Dyadic::one());
  CHECK(dy(8, 3).exponent() == 0);
  CHECK(dy(6, 4).numerator() == 3);
  CHECK(dy(6, 4).exponent() == 3);
  CHECK(Dyadic().is_zero());
  CHECK(Dyadic::one().is_one());
}

TEST_CASE("range validation") {
  CHECK_THROWS_AS(dy(9, 3), MalformedComponent);
  CHECK_THROWS_AS(dy(3, 1), MalformedComponent);
  CHECK_THROWS_AS(Dyadic::from_ratio(BigInt(-1), 4), MalformedComponent);
  CHECK_NOTHROW(dy(8, 3));  // exactly 1
}

TEST_CASE("ordering") {
  CHECK(dy(1, 2) < dy(1, 1));
  CHECK(dy(3, 2) > dy(1, 1));
  CHECK(dy(1, 1) <= dy(2, 2));
  CHECK(Dyadic::zero() < dy(1, 20));
  CHECK(dy(1023, 10) < Dyadic::one());
  // Same bit length, different exponents.
  CHECK(dy(5, 3) < dy(11, 4));
  CHECK(dy(11, 4) < dy(3, 2));
}

TEST_CASE("exact arithmetic") {
  CHECK(dy(1, 2) + dy(1, 4) == dy(5, 4));
  CHECK(dy(1, 1) + dy(1, 1) == Dyadic::one());
  CHECK(dy(1, 1) - dy(1, 3) == dy(3, 3));
  CHECK(dy(3, 2) * dy(1, 1) == dy(3, 3));
  CHECK(dy(1, 1) * dy(1, 1) == dy(1, 2));
  CHECK_THROWS_AS(dy(3, 2) + dy(1, 1), MalformedComponent);  // 5/4 > 1
  CHECK_THROWS_AS(dy(1, 3) - dy(1, 2), MalformedComponent);
}

TEST_CASE("arithmetic round trips at random") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t ea = rng() % 24, eb = rng() % 24;
    BigInt na = BigInt(rng()) % ((BigInt(1) << ea) + 1);
    BigInt nb = BigInt(rng()) % ((BigInt(1) << eb) + 1);
    Dyadic a = Dyadic::from_ratio(na, ea);
    Dyadic b = Dyadic::from_ratio(nb, eb);
    Dyadic lo = a < b ? a : b;
    Dyadic hi = a < b ? b : a;
    CHECK(hi - lo <= hi);
    CHECK((hi - lo) + lo == hi);
    Dyadic prod = a * b;
    CHECK(prod <= a);
    CHECK(prod <= b);
  }
}

TEST_CASE("text round trip") {
  CHECK(dy(3, 3).to_string() == "3/2^3");
  CHECK(Dyadic::zero().to_string() == "0/2^0");
  CHECK(Dyadic::one().to_string() == "1/2^0");
  for (auto s : {"0/2^0", "1/2^1", "5/2^3", "1/2^0"}) {
    auto d = Dyadic::parse(s);
    REQUIRE(d.has_value());
    CHECK(d->to_string() == s);
  }
  CHECK(!Dyadic::parse("").has_value());
  CHECK(!Dyadic::parse("1/3").has_value());
  CHECK(!Dyadic::parse("x/2^1").has_value());
  CHECK(!Dyadic::parse("/2^1").has_value());
  CHECK_THROWS_AS(Dyadic::parse("9/2^3"), MalformedComponent);
}

TEST_CASE("scaled floor") {
  CHECK(dy(1, 1).scaled_floor(8) == 4);
  CHECK(dy(1, 3).scaled_floor(8) == 1);
  CHECK(dy(5, 3).scaled_floor(8) == 5);
  CHECK(dy(1, 4).scaled_floor(8) == 0);
  CHECK(Dyadic::one().scaled_floor(640) == 640);
}
