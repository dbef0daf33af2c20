#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ivc/boolcirc.hpp"
#include "ivc/dyadic.hpp"
#include "ivc/program.hpp"

namespace ivc {

/// A discrete-logarithm instance: find x with a^x = b (mod p). The search
/// width is n = max(3, bit length of p) candidate bits.
struct DlogInstance {
  BigInt a, b, p;
  unsigned n = 0;

  /// Validates 2 <= p (DegenerateModulus otherwise) and 0 <= a,b < p.
  static DlogInstance make(BigInt a, BigInt b, BigInt p);
};

struct StageSpan {
  std::string name;
  std::uint32_t first = 0, last = 0;  // 1-based, inclusive
};

/// A generated computation sequence together with the symbolic positions the
/// construction is stated in: one, a(k), b(k), p(k), x(k), e(i,j), c(i,j),
/// f(i,j), eq, e, z, out(k).
class BuildPlan {
 public:
  const ComputationSequence& sequence() const { return sequence_; }
  unsigned n() const { return n_; }

  std::uint32_t label(const std::string& name) const;
  bool has_label(const std::string& name) const { return labels_.count(name) != 0; }
  const std::map<std::string, std::uint32_t>& labels() const { return labels_; }
  const std::vector<StageSpan>& stages() const { return stages_; }
  const StageSpan* stage(const std::string& name) const;

  std::uint32_t one() const { return label("one"); }
  std::uint32_t a(unsigned k) const;
  std::uint32_t b(unsigned k) const;
  std::uint32_t p(unsigned k) const;
  std::uint32_t x(unsigned k) const;
  std::uint32_t e_row(unsigned i, unsigned j) const;
  std::uint32_t c(unsigned i, unsigned j) const;
  std::uint32_t f(unsigned i, unsigned j) const;
  std::uint32_t e() const { return label("e"); }
  std::uint32_t z() const { return label("z"); }
  std::uint32_t out(unsigned k) const;

  /// Sidecar text: one "label index" line, sorted by label.
  std::string sidecar_text() const;

 private:
  friend class DlogBuilder;

  ComputationSequence sequence_;
  std::map<std::string, std::uint32_t> labels_;
  std::vector<StageSpan> stages_;
  unsigned n_ = 0;
};

/// Eight-instruction idiom isolating the left-most component of the value
/// at `src`, for every input including those containing 0: complement,
/// strip the zero-anchored head with a shift pair, complement, strip again,
/// complement, mask with the source.
std::uint32_t emit_first_component_gadget(SegmentBuilder& sb, std::uint32_t src);

/// 24-instruction idiom extracting from the value at `e` (in V_n) the
/// left-most 1/2^n slice of its first component after discarding the top
/// slice [1-1/2^n,1); empty when only the top slice was populated. `x_n`
/// must hold the level-n fan-out value, whose Flength is 1/2^n.
std::uint32_t emit_slice_select(SegmentBuilder& sb, std::uint32_t e, std::uint32_t x_n);

/// Compiles an instance into the complete computation sequence whose output
/// tape spells a solution x in binary (all zeros when none is selected).
/// The sequence length depends on n only.
BuildPlan build(const DlogInstance& inst);

struct SolveOutcome {
  std::optional<BigInt> x;  // present iff host verification a^x = b (mod p) passed
  std::string output;       // raw output tape, n bits
  unsigned n = 0;
  EvalMetrics metrics;

  bool solved() const { return x.has_value(); }
};

/// Builds, evaluates, decodes the output tape and verifies the candidate by
/// host arithmetic.
SolveOutcome solve(const DlogInstance& inst, const EvalLimits& limits = {});

}  // namespace ivc
