#include "ivc/program.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace ivc {

std::string_view mnemonic(Opcode op) {
  switch (op) {
    case Opcode::firsthalf: return "FIRSTHALF";
    case Opcode::and_: return "AND";
    case Opcode::or_: return "OR";
    case Opcode::not_: return "NOT";
    case Opcode::lshift: return "LSHIFT";
    case Opcode::rshift: return "RSHIFT";
    case Opcode::product: return "PRODUCT";
    case Opcode::output: return "OUTPUT";
  }
  return "?";
}

unsigned arity(Opcode op) {
  switch (op) {
    case Opcode::firsthalf: return 0;
    case Opcode::not_:
    case Opcode::output: return 1;
    default: return 2;
  }
}

std::vector<Violation> validate(const ComputationSequence& seq) {
  std::vector<Violation> out;
  if (seq.instructions.empty()) {
    out.push_back({0, "sequence is empty"});
    return out;
  }
  for (std::uint32_t i = 1; i <= seq.instructions.size(); ++i) {
    const Instruction& ins = seq.instructions[i - 1];
    if (i == 1 && ins.op != Opcode::firsthalf) {
      out.push_back({i, "first instruction must be FIRSTHALF"});
    }
    if (i > 1 && ins.op == Opcode::firsthalf) {
      out.push_back({i, "FIRSTHALF is only allowed at position 1"});
    }
    unsigned n = arity(ins.op);
    if (n >= 1 && (ins.j < 1 || ins.j >= i)) {
      out.push_back({i, "operand j must reference an earlier instruction"});
    }
    if (n == 2 && (ins.k < 1 || ins.k >= i)) {
      out.push_back({i, "operand k must reference an earlier instruction"});
    }
  }
  return out;
}

const IntervalValue& EvalResult::value(std::uint32_t index) const {
  if (index < 1 || index > values.size()) throw IndexOutOfRange("no value at index " + std::to_string(index));
  return values[index - 1];
}

Evaluator::Evaluator(EvalLimits limits) : limits_(limits) {}

void Evaluator::record(const IntervalValue& v) {
  metrics_.length = values_.size();
  metrics_.max_components = std::max(metrics_.max_components, v.component_count());
  metrics_.max_bit_height = std::max(metrics_.max_bit_height, bit_height(v));
  if (v.component_count() > limits_.max_components)
    throw ResourceLimit("value exceeds component limit");
  if (bit_height(v) > limits_.max_bit_height)
    throw ResourceLimit("value exceeds bit-height limit");
}

std::uint32_t Evaluator::step(const Instruction& ins) {
  unsigned n = arity(ins.op);
  if ((n >= 1 && (ins.j < 1 || ins.j > values_.size())) ||
      (n == 2 && (ins.k < 1 || ins.k > values_.size()))) {
    throw IndexOutOfRange("instruction references a missing value");
  }
  auto operand = [this](std::uint32_t idx) -> const IntervalValue& { return values_[idx - 1]; };
  IntervalValue v;
  switch (ins.op) {
    case Opcode::firsthalf: v = IntervalValue::first_half(); break;
    case Opcode::and_: v = intersect(operand(ins.j), operand(ins.k)); break;
    case Opcode::or_: v = unite(operand(ins.j), operand(ins.k)); break;
    case Opcode::not_: v = complement(operand(ins.j)); break;
    case Opcode::lshift: v = lshift(operand(ins.j), operand(ins.k)); break;
    case Opcode::rshift: v = rshift(operand(ins.j), operand(ins.k)); break;
    case Opcode::product: v = product(operand(ins.j), operand(ins.k)); break;
    case Opcode::output:
      v = operand(ins.j);
      output_.push_back(v.is_empty() ? '0' : '1');
      metrics_.output_length = output_.size();
      break;
  }
  metrics_.op_counts[static_cast<std::size_t>(ins.op)]++;
  values_.push_back(std::move(v));
  record(values_.back());
  return static_cast<std::uint32_t>(values_.size());
}

std::uint32_t Evaluator::seed(IntervalValue value) {
  values_.push_back(std::move(value));
  record(values_.back());
  return static_cast<std::uint32_t>(values_.size());
}

const IntervalValue& Evaluator::value(std::uint32_t index) const {
  if (index < 1 || index > values_.size()) throw IndexOutOfRange("no value at index " + std::to_string(index));
  return values_[index - 1];
}

EvalResult Evaluator::take_result() {
  EvalResult r;
  r.values = std::move(values_);
  r.output = std::move(output_);
  r.metrics = metrics_;
  values_.clear();
  output_.clear();
  return r;
}

EvalResult evaluate(const ComputationSequence& seq, const EvalLimits& limits) {
  std::vector<Violation> violations = validate(seq);
  if (!violations.empty()) {
    throw ValidationError("instruction " + std::to_string(violations.front().index) + ": " +
                          violations.front().reason);
  }
  Evaluator ev(limits);
  for (const Instruction& ins : seq.instructions) ev.step(ins);
  return ev.take_result();
}

EvalMetrics stats(const ComputationSequence& seq, const EvalLimits& limits) {
  return evaluate(seq, limits).metrics;
}

namespace {

bool parse_opcode(std::string_view word, Opcode& op) {
  for (std::size_t i = 0; i < kOpcodeCount; ++i) {
    if (word == mnemonic(static_cast<Opcode>(i))) {
      op = static_cast<Opcode>(i);
      return true;
    }
  }
  return false;
}

}  // namespace

ComputationSequence parse_program(std::istream& in) {
  ComputationSequence seq;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word.front() == '#') continue;
    Opcode op;
    if (!parse_opcode(word, op)) throw ParseError(lineno, "unknown mnemonic '" + word + "'");
    std::uint32_t operands[2] = {0, 0};
    for (unsigned i = 0; i < arity(op); ++i) {
      std::string tok;
      if (!(ls >> tok)) throw ParseError(lineno, "missing operand for " + word);
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(lineno, "non-integer operand '" + tok + "'");
      operands[i] = v;
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
    seq.instructions.push_back({op, operands[0], operands[1]});
  }
  return seq;
}

ComputationSequence parse_program(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_program(in);
}

std::string serialize_program(const ComputationSequence& seq) {
  std::string out;
  for (const Instruction& ins : seq.instructions) {
    out += mnemonic(ins.op);
    if (arity(ins.op) >= 1) {
      out += ' ';
      out += std::to_string(ins.j);
    }
    if (arity(ins.op) == 2) {
      out += ' ';
      out += std::to_string(ins.k);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ivc
