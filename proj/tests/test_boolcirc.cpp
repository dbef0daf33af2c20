#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <random>

#include "ivc/boolcirc.hpp"

using namespace ivc;

namespace {

// Drives emitted segments through the evaluator, with seeded wires standing
// in for arbitrary slice-dependent inputs.
struct Harness {
  ComputationSequence seq;
  std::optional<SegmentBuilder> sb;
  Evaluator ev;
  std::size_t replayed = 0;

  Harness() {
    seq.instructions.push_back(Instruction::firsthalf());
    seq.instructions.push_back(Instruction::binary(Opcode::rshift, 1, 1));
    sb.emplace(seq);
  }

  WireRef seed(IntervalValue v) {
    sync();
    seq.instructions.push_back(Instruction::binary(Opcode::and_, 1, 1));  // placeholder
    replayed = seq.instructions.size();
    return {ev.seed(std::move(v))};
  }

  void sync() {
    while (replayed < seq.instructions.size()) ev.step(seq.instructions[replayed++]);
  }

  const IntervalValue& value(WireRef w) {
    sync();
    return ev.value(w.index);
  }

  bool bit(WireRef w) { return !value(w).is_empty(); }

  BigInt decode(const std::vector<WireRef>& wires) {
    BigInt v = 0;
    for (WireRef w : wires) v = (v << 1) + (bit(w) ? 1 : 0);
    return v;
  }

  std::uint64_t decode_at(const std::vector<WireRef>& wires, const Dyadic& r) {
    std::uint64_t v = 0;
    for (WireRef w : wires) v = (v << 1) | (membership(value(w), r) ? 1 : 0);
    return v;
  }
};

Dyadic midpoint(std::uint64_t l, unsigned m) {
  return Dyadic::from_ratio(BigInt(2 * l + 1), m + 1);
}

// Word of `width` wires whose slice l (of 2^m) spells per_slice[l].
std::vector<WireRef> seed_word(Harness& h, unsigned width, unsigned m,
                               const std::vector<std::uint64_t>& per_slice) {
  std::vector<WireRef> wires(width);
  for (unsigned j = 0; j < width; ++j) {
    std::vector<IntervalValue::Component> comps;
    for (std::uint64_t l = 0; l < per_slice.size(); ++l) {
      if ((per_slice[l] >> (width - 1 - j)) & 1) {
        comps.push_back({Dyadic::from_ratio(BigInt(l), m), Dyadic::from_ratio(BigInt(l + 1), m)});
      }
    }
    wires[j] = h.seed(IntervalValue::normalized(std::move(comps)));
  }
  return wires;
}

std::string bits_of(std::uint64_t v, unsigned width) {
  std::string s(width, '0');
  for (unsigned j = 0; j < width; ++j)
    if ((v >> (width - 1 - j)) & 1) s[j] = '1';
  return s;
}

}  // namespace

TEST_CASE("const bits") {
  Harness h;
  auto a = emit_const_bits(*h.sb, "011");
  CHECK(h.value(a[0]) == IntervalValue::empty());
  CHECK(h.value(a[1]) == IntervalValue::full());
  CHECK(h.value(a[2]) == IntervalValue::full());
  auto p = emit_const_bits(*h.sb, "101");
  CHECK(h.decode(p) == 5);
  auto z = emit_const_bits(*h.sb, "000");
  CHECK(h.decode(z) == 0);
  CHECK(h.sb->const_one() == h.sb->const_one());  // cached
}

TEST_CASE("prologue required") {
  ComputationSequence bare;
  bare.instructions.push_back(Instruction::firsthalf());
  CHECK_THROWS_AS(SegmentBuilder{bare}, WidthMismatch);
}

TEST_CASE("xor") {
  Harness h;
  WireRef zero = h.sb->const_zero();
  WireRef one = h.sb->const_one();
  CHECK(!h.bit(emit_xor(*h.sb, zero, zero)));
  CHECK(h.bit(emit_xor(*h.sb, one, zero)));
  CHECK(h.bit(emit_xor(*h.sb, zero, one)));
  CHECK(!h.bit(emit_xor(*h.sb, one, one)));

  std::size_t before = h.sb->emitted();
  emit_xor(*h.sb, one, zero);
  CHECK(h.sb->emitted() - before == 5);

  // Pointwise behaviour on arbitrary values.
  std::mt19937_64 rng(5);
  unsigned m = 5;
  for (int c = 0; c < 20; ++c) {
    std::vector<std::uint64_t> ua(1 << m), va(1 << m);
    for (auto& x : ua) x = rng() & 1;
    for (auto& x : va) x = rng() & 1;
    auto uw = seed_word(h, 1, m, ua);
    auto vw = seed_word(h, 1, m, va);
    WireRef x = emit_xor(*h.sb, uw[0], vw[0]);
    for (std::uint64_t l = 0; l < (1u << m); ++l) {
      CHECK(membership(h.value(x), midpoint(l, m)) == ((ua[l] ^ va[l]) != 0));
    }
  }
}

TEST_CASE("ripple adder on constants") {
  Harness h;
  auto sum1 = emit_ripple_adder(*h.sb, emit_const_bits(*h.sb, "011"), emit_const_bits(*h.sb, "100"));
  CHECK(h.decode(sum1) == 7);
  CHECK(sum1.size() == 4);
  auto sum2 = emit_ripple_adder(*h.sb, emit_const_bits(*h.sb, "000"), emit_const_bits(*h.sb, "000"));
  CHECK(h.decode(sum2) == 0);
  auto sum3 = emit_ripple_adder(*h.sb, emit_const_bits(*h.sb, "111"), emit_const_bits(*h.sb, "001"));
  CHECK(h.decode(sum3) == 8);

  // Exhaustive 3-bit operands against integer addition.
  for (std::uint64_t u = 0; u < 8; ++u) {
    for (std::uint64_t v = 0; v < 8; ++v) {
      Harness hh;
      auto s = emit_ripple_adder(*hh.sb, emit_const_bits(*hh.sb, bits_of(u, 3)),
                                 emit_const_bits(*hh.sb, bits_of(v, 3)));
      CHECK(hh.decode(s) == u + v);
    }
  }
  std::vector<WireRef> w2(2, h.sb->const_zero());
  std::vector<WireRef> w3(3, h.sb->const_zero());
  CHECK_THROWS_AS(emit_ripple_adder(*h.sb, w2, w3), WidthMismatch);
}

TEST_CASE("ripple adder pointwise lifting") {
  std::mt19937_64 rng(17);
  for (unsigned w : {2u, 3u, 5u}) {
    Harness h;
    unsigned m = 4;
    std::vector<std::uint64_t> ua(1 << m), va(1 << m);
    for (auto& x : ua) x = rng() % (1u << w);
    for (auto& x : va) x = rng() % (1u << w);
    auto uw = seed_word(h, w, m, ua);
    auto vw = seed_word(h, w, m, va);
    auto sum = emit_ripple_adder(*h.sb, uw, vw);
    for (std::uint64_t l = 0; l < (1u << m); ++l) {
      CHECK(h.decode_at(sum, midpoint(l, m)) == ua[l] + va[l]);
    }
  }
}

TEST_CASE("mod reduce") {
  Harness h;
  auto r1 = emit_mod_reduce(*h.sb, emit_const_bits(*h.sb, "111"), emit_const_bits(*h.sb, "101"));
  CHECK(h.decode(r1) == 2);
  CHECK(r1.size() == 3);
  auto r2 = emit_mod_reduce(*h.sb, emit_const_bits(*h.sb, "011"), emit_const_bits(*h.sb, "101"));
  CHECK(h.decode(r2) == 3);
  auto r3 = emit_mod_reduce(*h.sb, emit_const_bits(*h.sb, "101"), emit_const_bits(*h.sb, "101"));
  CHECK(h.decode(r3) == 0);
  // Wider accumulator drops back to the modulus width.
  auto r4 = emit_mod_reduce(*h.sb, emit_const_bits(*h.sb, "0111"), emit_const_bits(*h.sb, "101"));
  CHECK(h.decode(r4) == 2);
  CHECK(r4.size() == 3);
  std::vector<WireRef> w2(2, h.sb->const_zero());
  std::vector<WireRef> w3(3, h.sb->const_zero());
  CHECK_THROWS_AS(emit_mod_reduce(*h.sb, w2, w3), WidthMismatch);
}

TEST_CASE("modmul on constants") {
  Harness h;
  auto p5 = emit_const_bits(*h.sb, "101");
  auto m1 = emit_modmul(*h.sb, emit_const_bits(*h.sb, "011"), emit_const_bits(*h.sb, "100"), p5);
  CHECK(h.decode(m1) == 2);  // 3*4 mod 5

  // Exhaustive over small moduli.
  for (std::uint64_t p = 2; p <= 13; ++p) {
    unsigned n = 64 - static_cast<unsigned>(__builtin_clzll(p));
    for (std::uint64_t u = 0; u < p; ++u) {
      for (std::uint64_t v = 0; v < p; ++v) {
        Harness hh;
        auto pw = emit_const_bits(*hh.sb, bits_of(p, n));
        auto uw = emit_const_bits(*hh.sb, bits_of(u, n));
        auto vw = emit_const_bits(*hh.sb, bits_of(v, n));
        auto prod = emit_modmul(*hh.sb, uw, vw, pw);
        CHECK(hh.decode(prod) == (u * v) % p);
      }
    }
  }
}

TEST_CASE("modmul pointwise lifting") {
  std::mt19937_64 rng(29);
  for (std::uint64_t p : {5ull, 7ull, 13ull}) {
    unsigned n = 64 - static_cast<unsigned>(__builtin_clzll(p));
    Harness h;
    unsigned m = 4;
    std::vector<std::uint64_t> ua(1 << m), va(1 << m);
    for (auto& x : ua) x = rng() % p;
    for (auto& x : va) x = rng() % p;
    auto pw = emit_const_bits(*h.sb, bits_of(p, n));
    auto uw = seed_word(h, n, m, ua);
    auto vw = seed_word(h, n, m, va);
    auto prod = emit_modmul(*h.sb, uw, vw, pw);
    for (std::uint64_t l = 0; l < (1u << m); ++l) {
      CHECK(h.decode_at(prod, midpoint(l, m)) == ua[l] * va[l] % p);
    }
  }
}

TEST_CASE("modmul gate count depends only on width") {
  std::vector<std::size_t> counts;
  for (unsigned n = 3; n <= 8; ++n) {
    std::optional<std::size_t> expected;
    for (std::uint64_t p : {3ull, (1ull << n) - 1}) {
      Harness h;
      auto pw = emit_const_bits(*h.sb, bits_of(p, n));
      auto uw = emit_const_bits(*h.sb, bits_of(1, n));
      auto vw = emit_const_bits(*h.sb, bits_of(p - 1, n));
      std::size_t before = h.sb->emitted();
      emit_modmul(*h.sb, uw, vw, pw);
      std::size_t count = h.sb->emitted() - before;
      if (expected) {
        CHECK(count == *expected);
      } else {
        expected = count;
      }
    }
    counts.push_back(*expected);
  }
  for (std::size_t i = 1; i < counts.size(); ++i) CHECK(counts[i] > counts[i - 1]);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    unsigned n = 3 + static_cast<unsigned>(i);
    CHECK(counts[i] <= 60u * n * n);
    CHECK(counts[i] >= 20u * n * n);
  }
}

TEST_CASE("equality") {
  Harness h;
  auto e1 = emit_equality(*h.sb, emit_const_bits(*h.sb, "010"), emit_const_bits(*h.sb, "010"));
  CHECK(h.value(e1) == IntervalValue::full());
  auto e2 = emit_equality(*h.sb, emit_const_bits(*h.sb, "010"), emit_const_bits(*h.sb, "011"));
  CHECK(h.value(e2) == IntervalValue::empty());

  // Slice-dependent second operand.
  std::mt19937_64 rng(31);
  unsigned m = 4, w = 3;
  std::vector<std::uint64_t> va(1 << m);
  for (auto& x : va) x = rng() % (1u << w);
  Harness hh;
  auto uw = emit_const_bits(*hh.sb, "010");
  auto vw = seed_word(hh, w, m, va);
  WireRef e = emit_equality(*hh.sb, uw, vw);
  for (std::uint64_t l = 0; l < (1u << m); ++l) {
    CHECK(membership(hh.value(e), midpoint(l, m)) == (va[l] == 2));
  }
  std::vector<WireRef> w2(2, hh.sb->const_zero());
  std::vector<WireRef> w3(3, hh.sb->const_zero());
  CHECK_THROWS_AS(emit_equality(*hh.sb, w2, w3), WidthMismatch);
}

TEST_CASE("boolean gates preserve bit height") {
  std::mt19937_64 rng(37);
  unsigned m = 5;
  Harness h;
  std::vector<std::uint64_t> ua(1 << m), va(1 << m);
  for (auto& x : ua) x = rng() % 8;
  for (auto& x : va) x = rng() % 8;
  auto uw = seed_word(h, 3, m, ua);
  auto vw = seed_word(h, 3, m, va);
  auto sum = emit_ripple_adder(*h.sb, uw, vw);
  h.sync();
  CHECK(h.ev.metrics().max_bit_height <= m);
  for (WireRef wref : sum) CHECK(bit_height(h.value(wref)) <= m);
}
