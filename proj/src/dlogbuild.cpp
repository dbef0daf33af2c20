#include "ivc/dlogbuild.hpp"

#include <utility>

#include "ivc/oracle.hpp"

namespace ivc {
namespace {

std::string label_of(const char* base, unsigned k) {
  return std::string(base) + "(" + std::to_string(k) + ")";
}

std::string label_of(const char* base, unsigned i, unsigned j) {
  return std::string(base) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// MSB-first n-bit string of v (v < 2^n).
std::string bit_string(const BigInt& v, unsigned n) {
  std::string s(n, '0');
  for (unsigned k = 0; k < n; ++k) {
    if (boost::multiprecision::bit_test(v, n - 1 - k)) s[k] = '1';
  }
  return s;
}

}  // namespace

class DlogBuilder {
 public:
  explicit DlogBuilder(const DlogInstance& inst) : inst_(inst), n_(inst.n) { plan_.n_ = n_; }

  BuildPlan run() {
    stage("inputs", [&] { encode_inputs(); });
    stage("fanout", [&] { build_fanout(); });
    stage("power_rows", [&] { build_power_rows(); });
    stage("gating", [&] { build_gating(); });
    stage("accumulation", [&] { build_accumulation(); });
    stage("equality", [&] { build_equality(); });
    stage("selection", [&] { build_selection(); });
    stage("output", [&] { build_output(); });
    return std::move(plan_);
  }

 private:
  template <typename Fn>
  void stage(const char* name, Fn&& body) {
    auto first = static_cast<std::uint32_t>(plan_.sequence_.length()) + 1;
    body();
    auto last = static_cast<std::uint32_t>(plan_.sequence_.length());
    plan_.stages_.push_back({name, first, last});
  }

  void mark(std::string name, WireRef wire) { plan_.labels_.emplace(std::move(name), wire.index); }

  void mark_word(const char* base, const std::vector<WireRef>& wires) {
    for (unsigned k = 0; k < wires.size(); ++k) mark(label_of(base, k + 1), wires[k]);
  }

  void encode_inputs() {
    auto& ins = plan_.sequence_.instructions;
    ins.push_back(Instruction::firsthalf());
    ins.push_back(Instruction::binary(Opcode::rshift, 1, 1));
    sb_.emplace(plan_.sequence_);
    mark("one", sb_->const_one());
    sb_->const_zero();
    a_ = emit_const_bits(*sb_, bit_string(inst_.a, n_));
    mark_word("a", a_);
    b_ = emit_const_bits(*sb_, bit_string(inst_.b, n_));
    mark_word("b", b_);
    p_ = emit_const_bits(*sb_, bit_string(inst_.p, n_));
    mark_word("p", p_);
  }

  // x(1) = [0,1/2); each further level halves every component with a
  // fractalian product and fills the odd slots with a shifted copy.
  void build_fanout() {
    x_.resize(n_);
    x_[0] = sb_->append(Instruction::binary(Opcode::and_, 1, 1));
    for (unsigned k = 1; k < n_; ++k) {
      WireRef prod = sb_->append(Instruction::binary(Opcode::product, x_[k - 1].index, 1));
      WireRef shifted = sb_->append(Instruction::binary(Opcode::rshift, prod.index, x_[k - 1].index));
      x_[k] = sb_->or_(shifted, prod);
    }
    mark_word("x", x_);
  }

  // rows_[i-1] spells a^(2^(n-i)) mod p on constant wires: row n is the
  // input word, each earlier row the square of its successor.
  void build_power_rows() {
    rows_.resize(n_);
    rows_[n_ - 1] = a_;
    for (unsigned i = n_ - 1; i-- > 0;) {
      rows_[i] = emit_modmul(*sb_, rows_[i + 1], rows_[i + 1], p_);
    }
    for (unsigned i = 1; i <= n_; ++i) {
      for (unsigned j = 1; j <= n_; ++j) mark(label_of("e_row", i, j), rows_[i - 1][j - 1]);
    }
  }

  // Gate row i by x(i): where x_i(r)=0 the word must read as the integer 1,
  // so the last bit gets OR NOT x(i).
  void build_gating() {
    gated_.resize(n_);
    for (unsigned i = 1; i <= n_; ++i) {
      auto& row = gated_[i - 1];
      row.resize(n_);
      for (unsigned j = 1; j < n_; ++j) row[j - 1] = sb_->and_(rows_[i - 1][j - 1], x_[i - 1]);
      WireRef kept = sb_->and_(rows_[i - 1][n_ - 1], x_[i - 1]);
      WireRef off = sb_->not_(x_[i - 1]);
      row[n_ - 1] = sb_->or_(kept, off);
      for (unsigned j = 1; j <= n_; ++j) mark(label_of("c", i, j), row[j - 1]);
    }
  }

  void build_accumulation() {
    acc_.resize(n_);
    acc_[0] = gated_[0];
    for (unsigned i = 2; i <= n_; ++i) {
      acc_[i - 1] = emit_modmul(*sb_, acc_[i - 2], gated_[i - 1], p_);
    }
    for (unsigned i = 1; i <= n_; ++i) {
      for (unsigned j = 1; j <= n_; ++j) mark(label_of("f", i, j), acc_[i - 1][j - 1]);
    }
  }

  void build_equality() {
    WireRef e = emit_equality(*sb_, b_, acc_[n_ - 1]);
    mark("eq", e);
    mark("e", e);
  }

  void build_selection() {
    std::uint32_t z = emit_slice_select(*sb_, plan_.labels_.at("e"), x_[n_ - 1].index);
    mark("z", {z});
  }

  void build_output() {
    std::uint32_t z = plan_.labels_.at("z");
    std::vector<WireRef> digits(n_);
    for (unsigned k = 0; k < n_; ++k) digits[k] = sb_->and_({z}, x_[k]);
    for (unsigned k = 0; k < n_; ++k) {
      WireRef o = sb_->append(Instruction::unary(Opcode::output, digits[k].index));
      mark(label_of("out", k + 1), o);
    }
  }

  const DlogInstance& inst_;
  unsigned n_;
  BuildPlan plan_;
  std::optional<SegmentBuilder> sb_;
  std::vector<WireRef> a_, b_, p_;
  std::vector<WireRef> x_;
  std::vector<std::vector<WireRef>> rows_, gated_, acc_;
};

DlogInstance DlogInstance::make(BigInt a, BigInt b, BigInt p) {
  if (p < 2) throw DegenerateModulus("modulus must be at least 2");
  if (a < 0 || a >= p) throw Error("base must satisfy 0 <= a < p");
  if (b < 0 || b >= p) throw Error("target must satisfy 0 <= b < p");
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(p)) + 1;
  DlogInstance inst{std::move(a), std::move(b), std::move(p), bits < 3 ? 3 : bits};
  return inst;
}

std::uint32_t BuildPlan::label(const std::string& name) const {
  auto it = labels_.find(name);
  if (it == labels_.end()) throw IndexOutOfRange("unknown label " + name);
  return it->second;
}

const StageSpan* BuildPlan::stage(const std::string& name) const {
  for (const auto& s : stages_)
    if (s.name == name) return &s;
  return nullptr;
}

std::uint32_t BuildPlan::a(unsigned k) const { return label(label_of("a", k)); }
std::uint32_t BuildPlan::b(unsigned k) const { return label(label_of("b", k)); }
std::uint32_t BuildPlan::p(unsigned k) const { return label(label_of("p", k)); }
std::uint32_t BuildPlan::x(unsigned k) const { return label(label_of("x", k)); }
std::uint32_t BuildPlan::e_row(unsigned i, unsigned j) const { return label(label_of("e_row", i, j)); }
std::uint32_t BuildPlan::c(unsigned i, unsigned j) const { return label(label_of("c", i, j)); }
std::uint32_t BuildPlan::f(unsigned i, unsigned j) const { return label(label_of("f", i, j)); }
std::uint32_t BuildPlan::out(unsigned k) const { return label(label_of("out", k)); }

std::string BuildPlan::sidecar_text() const {
  std::string out;
  for (const auto& [name, index] : labels_) {
    out += name;
    out += ' ';
    out += std::to_string(index);
    out += '\n';
  }
  return out;
}

// Shifting a value left by its own Flength removes its first component
// exactly when that component starts at 0; shifting back right restores the
// remainder in place.
std::uint32_t strip_head(SegmentBuilder& sb, std::uint32_t src) {
  WireRef off = sb.append(Instruction::binary(Opcode::lshift, src, src));
  return sb.append(Instruction::binary(Opcode::rshift, off.index, src)).index;
}

std::uint32_t emit_first_component_gadget(SegmentBuilder& sb, std::uint32_t src) {
  std::uint32_t gaps = sb.not_({src}).index;
  std::uint32_t inner_gaps = sb.not_({strip_head(sb, gaps)}).index;
  WireRef mask = sb.not_({strip_head(sb, inner_gaps)});
  return sb.append(Instruction::binary(Opcode::and_, src, mask.index)).index;
}

std::uint32_t emit_slice_select(SegmentBuilder& sb, std::uint32_t e, std::uint32_t x_n) {
  std::uint32_t fc = emit_first_component_gadget(sb, e);
  // Rotate by one slice, clip, rotate again: drops the top slice and leaves
  // [0,1/2^n) empty, with the survivor offset one slice to the right.
  WireRef rot = sb.append(Instruction::binary(Opcode::rshift, fc, x_n));
  WireRef clipped = sb.append(Instruction::binary(Opcode::lshift, rot.index, x_n));
  WireRef offset = sb.append(Instruction::binary(Opcode::rshift, clipped.index, x_n));
  WireRef lead_gap = sb.not_(offset);
  WireRef pulled = sb.append(Instruction::binary(Opcode::lshift, offset.index, lead_gap.index));
  WireRef comb = sb.and_(pulled, {x_n});
  std::uint32_t head = emit_first_component_gadget(sb, comb.index);
  WireRef replaced = sb.append(Instruction::binary(Opcode::rshift, head, lead_gap.index));
  WireRef z = sb.append(Instruction::binary(Opcode::lshift, replaced.index, x_n));
  return z.index;
}

BuildPlan build(const DlogInstance& inst) {
  DlogBuilder builder(inst);
  return builder.run();
}

SolveOutcome solve(const DlogInstance& inst, const EvalLimits& limits) {
  BuildPlan plan = build(inst);
  EvalResult result = evaluate(plan.sequence(), limits);
  SolveOutcome outcome;
  outcome.output = result.output;
  outcome.n = inst.n;
  outcome.metrics = result.metrics;
  BigInt x = 0;
  for (char c : result.output) x = (x << 1) + (c == '1' ? 1 : 0);
  if (pow_mod(inst.a, x, inst.p) == inst.b) outcome.x = x;
  return outcome;
}

}  // namespace ivc
