#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ivc/interval_value.hpp"

namespace ivc {

enum class Opcode : std::uint8_t {
  firsthalf,
  and_,
  or_,
  not_,
  lshift,
  rshift,
  product,
  output,
};

inline constexpr std::size_t kOpcodeCount = 8;

std::string_view mnemonic(Opcode op);

/// Number of operands: 0 for FIRSTHALF, 1 for NOT/OUTPUT, 2 otherwise.
unsigned arity(Opcode op);

/// One instruction of a straight-line computation sequence. Operands j,k are
/// 1-based indices of earlier instructions; unused operands stay 0.
struct Instruction {
  Opcode op = Opcode::firsthalf;
  std::uint32_t j = 0;
  std::uint32_t k = 0;

  static Instruction firsthalf() { return {Opcode::firsthalf, 0, 0}; }
  static Instruction unary(Opcode op, std::uint32_t j) { return {op, j, 0}; }
  static Instruction binary(Opcode op, std::uint32_t j, std::uint32_t k) { return {op, j, k}; }

  bool operator==(const Instruction&) const = default;
};

struct ComputationSequence {
  std::vector<Instruction> instructions;

  std::size_t length() const { return instructions.size(); }
  bool operator==(const ComputationSequence&) const = default;
};

struct Violation {
  std::uint32_t index;  // 1-based instruction position
  std::string reason;
};

/// Structural checks: nonempty, FIRSTHALF exactly at position 1, operands
/// reference strictly earlier instructions. Returns all violations found.
std::vector<Violation> validate(const ComputationSequence& seq);

struct EvalLimits {
  std::size_t max_components = kMaxComponents;
  std::uint64_t max_bit_height = std::uint64_t{1} << 20;
};

struct EvalMetrics {
  std::size_t length = 0;
  std::size_t output_length = 0;
  std::uint64_t max_bit_height = 0;
  std::size_t max_components = 0;
  std::array<std::size_t, kOpcodeCount> op_counts{};
};

struct EvalResult {
  std::vector<IntervalValue> values;  // values[i-1] belongs to instruction i
  std::string output;                 // '0'/'1' per OUTPUT instruction
  EvalMetrics metrics;

  const IntervalValue& value(std::uint32_t index) const;  // 1-based
};

/// Incremental evaluator over the per-instruction semantics. step() appends
/// one instruction and computes its value; seed() appends an externally
/// fixed value in place of an instruction, which lets analyses and property
/// tests drive emitted segments from arbitrary starting values. Operand
/// references must point at already-present positions.
class Evaluator {
 public:
  explicit Evaluator(EvalLimits limits = {});

  std::uint32_t step(const Instruction& ins);
  std::uint32_t seed(IntervalValue value);

  const IntervalValue& value(std::uint32_t index) const;  // 1-based
  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
  const std::string& output() const { return output_; }
  const EvalMetrics& metrics() const { return metrics_; }

  EvalResult take_result();

 private:
  void record(const IntervalValue& v);

  EvalLimits limits_;
  std::vector<IntervalValue> values_;
  std::string output_;
  EvalMetrics metrics_;
};

/// Evaluates a validated sequence. Throws ValidationError when validate()
/// reports violations, ResourceLimit when a value exceeds the limits.
EvalResult evaluate(const ComputationSequence& seq, const EvalLimits& limits = {});

/// Metrics of a full evaluation, without the values.
EvalMetrics stats(const ComputationSequence& seq, const EvalLimits& limits = {});

/// Parses the line-oriented program format: one `MNEMONIC [j [k]]` per line,
/// blank lines and lines starting with '#' ignored. Throws ParseError with
/// the offending 1-based line number.
ComputationSequence parse_program(std::istream& in);
ComputationSequence parse_program(std::string_view text);

/// Canonical text form; parse_program(serialize_program(s)) == s.
std::string serialize_program(const ComputationSequence& seq);

}  // namespace ivc
