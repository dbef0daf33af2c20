#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ivc/program.hpp"

namespace ivc {

/// A 1-based instruction index whose value carries one circuit wire. On any
/// slice, the empty set reads as bit 0 and a covering value as bit 1.
struct WireRef {
  std::uint32_t index = 0;
  bool operator==(const WireRef&) const = default;
};

/// Appends instructions to a host sequence. The host must already carry the
/// standard prologue: index 1 = FIRSTHALF and index 2 with value [1/2,1), so
/// OR(1,2) is a constant 1 wire and AND(1,2) a constant 0 wire.
class SegmentBuilder {
 public:
  explicit SegmentBuilder(ComputationSequence& host);

  WireRef append(const Instruction& ins);

  WireRef and_(WireRef a, WireRef b) { return append(Instruction::binary(Opcode::and_, a.index, b.index)); }
  WireRef or_(WireRef a, WireRef b) { return append(Instruction::binary(Opcode::or_, a.index, b.index)); }
  WireRef not_(WireRef a) { return append(Instruction::unary(Opcode::not_, a.index)); }

  /// Constant wires, emitted once per builder and then reused.
  WireRef const_zero();
  WireRef const_one();

  /// Instructions appended through this builder so far.
  std::size_t emitted() const { return emitted_; }

  ComputationSequence& host() { return *host_; }

 private:
  ComputationSequence* host_;
  std::size_t emitted_ = 0;
  std::optional<WireRef> zero_, one_;
};

/// One wire per character, MSB first: '1' becomes OR(1,2), '0' AND(1,2).
std::vector<WireRef> emit_const_bits(SegmentBuilder& b, std::string_view bits);

/// (u AND NOT v) OR (NOT u AND v), five instructions.
WireRef emit_xor(SegmentBuilder& b, WireRef u, WireRef v);

/// Ripple-carry addition of two w-bit words (MSB first); returns w+1 bits.
std::vector<WireRef> emit_ripple_adder(SegmentBuilder& b, std::span<const WireRef> u,
                                       std::span<const WireRef> v);

/// Conditional subtraction acc mod p for acc < 2p: subtract with a borrow
/// chain, then select acc or acc-p per the borrow. `modulus` is zero-extended
/// to the accumulator width; the result is returned at the modulus width
/// (the dropped top bits are forced zero by the caller's acc < 2p bound).
std::vector<WireRef> emit_mod_reduce(SegmentBuilder& b, std::span<const WireRef> acc,
                                     std::span<const WireRef> modulus);

/// Schoolbook double-and-add product (u*v) mod p over n-bit words, MSB
/// first. Requires u,v < p and p >= 2 on every slice.
std::vector<WireRef> emit_modmul(SegmentBuilder& b, std::span<const WireRef> u,
                                 std::span<const WireRef> v, std::span<const WireRef> modulus);

/// Single wire that is 1 exactly on slices where all bit pairs agree.
WireRef emit_equality(SegmentBuilder& b, std::span<const WireRef> u, std::span<const WireRef> v);

}  // namespace ivc
