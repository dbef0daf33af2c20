#include "ivc/boolcirc.hpp"

namespace ivc {
namespace {

struct BitSum {
  WireRef bit;
  WireRef carry;
};

// sum = a ^ b ^ cin, cout = (a & b) | ((a ^ b) & cin)
BitSum full_adder(SegmentBuilder& sb, WireRef a, WireRef b, WireRef cin) {
  WireRef na = sb.not_(a);
  WireRef nb = sb.not_(b);
  WireRef axb = sb.or_(sb.and_(a, nb), sb.and_(na, b));
  WireRef naxb = sb.not_(axb);
  WireRef ncin = sb.not_(cin);
  WireRef sum = sb.or_(sb.and_(axb, ncin), sb.and_(naxb, cin));
  WireRef cout = sb.or_(sb.and_(a, b), sb.and_(axb, cin));
  return {sum, cout};
}

// diff = a ^ s ^ bin, bout = (~a & s) | (~(a ^ s) & bin)
BitSum full_subtractor(SegmentBuilder& sb, WireRef a, WireRef s, WireRef bin) {
  WireRef na = sb.not_(a);
  WireRef ns = sb.not_(s);
  WireRef under = sb.and_(na, s);
  WireRef axs = sb.or_(sb.and_(a, ns), under);
  WireRef naxs = sb.not_(axs);
  WireRef nbin = sb.not_(bin);
  WireRef hold = sb.and_(naxs, bin);
  WireRef diff = sb.or_(sb.and_(axs, nbin), hold);
  WireRef bout = sb.or_(under, hold);
  return {diff, bout};
}

}  // namespace

SegmentBuilder::SegmentBuilder(ComputationSequence& host) : host_(&host) {
  if (host.instructions.size() < 2) throw WidthMismatch("host is missing the standard prologue");
}

WireRef SegmentBuilder::append(const Instruction& ins) {
  host_->instructions.push_back(ins);
  ++emitted_;
  return {static_cast<std::uint32_t>(host_->instructions.size())};
}

WireRef SegmentBuilder::const_zero() {
  if (!zero_) zero_ = append(Instruction::binary(Opcode::and_, 1, 2));
  return *zero_;
}

WireRef SegmentBuilder::const_one() {
  if (!one_) one_ = append(Instruction::binary(Opcode::or_, 1, 2));
  return *one_;
}

std::vector<WireRef> emit_const_bits(SegmentBuilder& b, std::string_view bits) {
  std::vector<WireRef> out;
  out.reserve(bits.size());
  for (char c : bits) {
    Opcode op = c == '1' ? Opcode::or_ : Opcode::and_;
    out.push_back(b.append(Instruction::binary(op, 1, 2)));
  }
  return out;
}

WireRef emit_xor(SegmentBuilder& b, WireRef u, WireRef v) {
  WireRef nv = b.not_(v);
  WireRef t1 = b.and_(u, nv);
  WireRef nu = b.not_(u);
  WireRef t2 = b.and_(nu, v);
  return b.or_(t1, t2);
}

std::vector<WireRef> emit_ripple_adder(SegmentBuilder& b, std::span<const WireRef> u,
                                       std::span<const WireRef> v) {
  if (u.size() != v.size()) throw WidthMismatch("adder operand widths differ");
  std::size_t w = u.size();
  std::vector<WireRef> out(w + 1);
  WireRef carry = b.const_zero();
  for (std::size_t i = w; i-- > 0;) {  // LSB first
    BitSum s = full_adder(b, u[i], v[i], carry);
    out[i + 1] = s.bit;
    carry = s.carry;
  }
  out[0] = carry;
  return out;
}

std::vector<WireRef> emit_mod_reduce(SegmentBuilder& b, std::span<const WireRef> acc,
                                     std::span<const WireRef> modulus) {
  std::size_t w = acc.size();
  std::size_t n = modulus.size();
  if (w < n) throw WidthMismatch("accumulator narrower than modulus");
  WireRef zero = b.const_zero();
  std::vector<WireRef> p(w, zero);
  std::copy(modulus.begin(), modulus.end(), p.begin() + static_cast<std::ptrdiff_t>(w - n));

  std::vector<WireRef> diff(w);
  WireRef borrow = zero;
  for (std::size_t i = w; i-- > 0;) {
    BitSum s = full_subtractor(b, acc[i], p[i], borrow);
    diff[i] = s.bit;
    borrow = s.carry;
  }
  // borrow set means acc < p: keep acc, else take the difference.
  WireRef keep = borrow;
  WireRef nkeep = b.not_(keep);
  std::vector<WireRef> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t src = w - n + i;
    out[i] = b.or_(b.and_(acc[src], keep), b.and_(diff[src], nkeep));
  }
  return out;
}

std::vector<WireRef> emit_modmul(SegmentBuilder& b, std::span<const WireRef> u,
                                 std::span<const WireRef> v, std::span<const WireRef> modulus) {
  std::size_t n = modulus.size();
  if (u.size() != n || v.size() != n) throw WidthMismatch("multiplier operand widths differ");
  WireRef zero = b.const_zero();
  std::vector<WireRef> acc(n, zero);
  for (std::size_t i = 0; i < n; ++i) {
    // acc <- (2*acc) mod p
    std::vector<WireRef> doubled(acc);
    doubled.push_back(zero);
    acc = emit_mod_reduce(b, doubled, modulus);
    // acc <- (acc + u_i * v) mod p
    std::vector<WireRef> gated(n);
    for (std::size_t j = 0; j < n; ++j) gated[j] = b.and_(v[j], u[i]);
    std::vector<WireRef> sum = emit_ripple_adder(b, acc, gated);
    acc = emit_mod_reduce(b, sum, modulus);
  }
  return acc;
}

WireRef emit_equality(SegmentBuilder& b, std::span<const WireRef> u, std::span<const WireRef> v) {
  if (u.size() != v.size() || u.empty()) throw WidthMismatch("equality operand widths differ");
  std::vector<WireRef> bits(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    WireRef both = b.and_(u[i], v[i]);
    WireRef nu = b.not_(u[i]);
    WireRef nv = b.not_(v[i]);
    WireRef neither = b.and_(nu, nv);
    bits[i] = b.or_(both, neither);
  }
  WireRef all = b.and_(bits[0], bits[0]);
  for (std::size_t i = 1; i < bits.size(); ++i) all = b.and_(bits[i], all);
  return all;
}

}  // namespace ivc
