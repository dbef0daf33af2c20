#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ivc/dlogbuild.hpp"
#include "ivc/dyadic.hpp"
#include "ivc/interval_value.hpp"

namespace ivc {

/// Square-and-multiply base^exp mod m (host arithmetic; exp 0 gives 1).
BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& mod);

/// All x in [0, 2^n) with a^x = b (mod p), by direct iteration.
std::vector<BigInt> brute_dlog(const BigInt& a, const BigInt& b, const BigInt& p, unsigned n);

/// Fixed-resolution reference representation: 2^m equal cells over [0,1),
/// cell l covering [l/2^m, (l+1)/2^m). Conversion to and from IntervalValue
/// is lossless for values of bit height <= m.
class BitsetValue {
 public:
  explicit BitsetValue(unsigned resolution);

  static BitsetValue from_interval(const IntervalValue& v, unsigned resolution);
  IntervalValue to_interval() const;

  unsigned resolution() const { return resolution_; }
  std::size_t cell_count() const { return cells_.size(); }
  bool cell(std::size_t i) const { return cells_[i]; }
  void set_cell(std::size_t i, bool v) { cells_[i] = v; }

  std::size_t popcount() const;
  /// Cell count of the left-most run of set cells; 0 when no cell is set.
  std::size_t flength_cells() const;

  bool operator==(const BitsetValue&) const = default;

 private:
  unsigned resolution_;
  std::vector<bool> cells_;
};

enum class IvOp {
  complement,
  unite,
  intersect,
  lshift,
  rshift,
  product,
  first_component,
};

inline constexpr IvOp kAllIvOps[] = {
    IvOp::complement, IvOp::unite,   IvOp::intersect,       IvOp::lshift,
    IvOp::rshift,     IvOp::product, IvOp::first_component,
};

std::string_view iv_op_name(IvOp op);
bool iv_op_is_binary(IvOp op);

/// Reference semantics by cell counting: set operations cellwise, shifts by
/// rotating or dropping flength_cells() cells, product by substituting a
/// scaled copy of the pattern into every run of the macro operand (output
/// resolution is the sum). Operands of all other binary ops must share a
/// resolution (ResolutionMismatch).
BitsetValue bitset_apply(IvOp op, const BitsetValue& a, const BitsetValue* b = nullptr);

/// Membership pattern of one grid slice across x(1..n): bit k is whether the
/// slice midpoint lies in the value at x(k), and `value` is the integer the
/// bits spell MSB first.
struct SlicePattern {
  Dyadic r;  // slice midpoint (2l+1)/2^(n+1)
  std::vector<bool> bits;
  BigInt value;
};

SlicePattern slice_pattern(const BuildPlan& plan, const EvalResult& result, std::uint64_t l);

struct DifferentialReport {
  std::size_t cases = 0;
  std::vector<std::string> mismatches;  // "op m seed case#"

  bool ok() const { return mismatches.empty(); }
  std::string to_text() const;
};

/// Random differential run: `cases` pairs of uniformly random resolution-m
/// values, every operator applied on both sides, results compared exactly
/// and at every cell midpoint. Resolution is capped at 12.
DifferentialReport differential_check(std::uint64_t seed, std::size_t cases, unsigned resolution);

/// Exhaustive differential run over all value pairs of the given resolution
/// (capped at 3: 256 values, 65536 pairs).
DifferentialReport differential_exhaustive(unsigned resolution);

}  // namespace ivc
