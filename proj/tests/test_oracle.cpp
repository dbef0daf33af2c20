#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ivc/oracle.hpp"

using namespace ivc;

namespace {

BitsetValue bs(std::string_view cells, unsigned m) {
  BitsetValue v(m);
  REQUIRE(cells.size() == v.cell_count());
  for (std::size_t i = 0; i < cells.size(); ++i) v.set_cell(i, cells[i] == '1');
  return v;
}

BitsetValue random_bs(std::mt19937_64& rng, unsigned m) {
  BitsetValue v(m);
  for (std::size_t i = 0; i < v.cell_count(); ++i) v.set_cell(i, (rng() & 1) != 0);
  return v;
}

}  // namespace

TEST_CASE("pow_mod") {
  CHECK(pow_mod(BigInt(3), BigInt(7), BigInt(5)) == 2);
  CHECK(pow_mod(BigInt(0), BigInt(0), BigInt(7)) == 1);
  CHECK(pow_mod(BigInt(0), BigInt(3), BigInt(7)) == 0);
  CHECK(pow_mod(BigInt(10), BigInt(100), BigInt(13)) == 3);
  CHECK_THROWS_AS(pow_mod(BigInt(1), BigInt(1), BigInt(1)), DegenerateModulus);
}

TEST_CASE("brute_dlog") {
  auto s1 = brute_dlog(BigInt(3), BigInt(2), BigInt(5), 3);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == 3);
  CHECK(s1[1] == 7);
  auto s2 = brute_dlog(BigInt(2), BigInt(1), BigInt(5), 3);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == 0);
  CHECK(s2[1] == 4);
  CHECK(brute_dlog(BigInt(4), BigInt(3), BigInt(5), 3).empty());
  CHECK_THROWS_AS(brute_dlog(BigInt(0), BigInt(0), BigInt(1), 3), DegenerateModulus);
}

TEST_CASE("bitset round trip") {
  std::mt19937_64 rng(3);
  for (unsigned m : {0u, 1u, 3u, 6u, 8u}) {
    for (int c = 0; c < 40; ++c) {
      BitsetValue v = random_bs(rng, m);
      CHECK(BitsetValue::from_interval(v.to_interval(), m) == v);
      CHECK(bit_height(v.to_interval()) <= m);
    }
  }
  // Conversion refuses a too-coarse grid.
  CHECK_THROWS_AS(BitsetValue::from_interval(IntervalValue::first_half(), 0),
                  ResolutionMismatch);
}

TEST_CASE("bitset reference operators") {
  CHECK(bitset_apply(IvOp::complement, bs("1100", 2)) == bs("0011", 2));
  // Donor with a two-cell first run rotates by two cells.
  BitsetValue donor = bs("1100", 2);
  BitsetValue rot = bitset_apply(IvOp::rshift, bs("1100", 2), &donor);
  CHECK(rot == bs("0011", 2));
  BitsetValue cut = bitset_apply(IvOp::lshift, bs("0011", 2), &donor);
  CHECK(cut == bs("1100", 2));
  BitsetValue b1 = bs("10", 1), a1 = bs("10", 1);
  CHECK(bitset_apply(IvOp::product, b1, &a1) == bs("1000", 2));
  // The pattern zooms into whole runs, not single cells.
  BitsetValue full1 = bs("11", 1);
  CHECK(bitset_apply(IvOp::product, full1, &a1) == bs("1100", 2));
  CHECK(bitset_apply(IvOp::first_component, bs("0110", 2)) == bs("0110", 2));
  CHECK(bitset_apply(IvOp::first_component, bs("1011", 2)) == bs("1000", 2));
  CHECK(bs("0110", 2).flength_cells() == 2);
  CHECK(bs("0000", 2).flength_cells() == 0);
  BitsetValue other(3);
  CHECK_THROWS_AS(bitset_apply(IvOp::unite, bs("1100", 2), &other), ResolutionMismatch);
  CHECK_THROWS_AS(bitset_apply(IvOp::unite, bs("1100", 2), nullptr), ResolutionMismatch);
}

TEST_CASE("differential random and exhaustive") {
  DifferentialReport small = differential_check(12345, 300, 6);
  CHECK(small.cases == 300);
  CHECK(small.ok());
  CHECK(small.to_text().empty());

  DifferentialReport ex = differential_exhaustive(2);
  CHECK(ex.cases == 256);
  CHECK(ex.ok());

  CHECK_THROWS_AS(differential_check(1, 1, 13), ResolutionMismatch);
  CHECK_THROWS_AS(differential_exhaustive(4), ResolutionMismatch);
}

TEST_CASE("cross resolution product") {
  std::mt19937_64 rng(9);
  for (int c = 0; c < 200; ++c) {
    BitsetValue b = random_bs(rng, 3);
    BitsetValue a = random_bs(rng, 2);
    BitsetValue ref = bitset_apply(IvOp::product, b, &a);
    CHECK(ref.resolution() == 5);
    CHECK(product(b.to_interval(), a.to_interval()) == ref.to_interval());
  }
}

TEST_CASE("slice patterns of the worked example") {
  DlogInstance inst = DlogInstance::make(BigInt(3), BigInt(2), BigInt(5));
  BuildPlan plan = build(inst);
  EvalResult result = evaluate(plan.sequence());
  SlicePattern p0 = slice_pattern(plan, result, 0);
  CHECK(p0.bits == std::vector<bool>{true, true, true});
  CHECK(p0.value == 7);
  SlicePattern p7 = slice_pattern(plan, result, 7);
  CHECK(p7.bits == std::vector<bool>{false, false, false});
  CHECK(p7.value == 0);
  SlicePattern p4 = slice_pattern(plan, result, 4);
  CHECK(p4.bits == std::vector<bool>{false, true, true});
  CHECK(p4.value == 3);
  CHECK_THROWS_AS(slice_pattern(plan, result, 8), IndexOutOfRange);
}
