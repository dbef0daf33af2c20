#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ivc/dyadic.hpp"
#include "ivc/errors.hpp"

namespace ivc {

/// Hard cap on components per value; operations that would exceed it throw
/// ResourceLimit instead of truncating.
inline constexpr std::size_t kMaxComponents = std::size_t{1} << 24;

/// A finite union of half-open dyadic subintervals of [0,1), kept canonical:
/// components are sorted, disjoint and non-adjacent (hi_i < lo_{i+1}), each
/// with lo < hi. The empty list is the empty set. Immutable after
/// construction; all operations below are pure.
class IntervalValue {
 public:
  struct Component {
    Dyadic lo, hi;
    bool operator==(const Component&) const = default;
  };

  IntervalValue() = default;  // empty set

  static IntervalValue empty() { return IntervalValue(); }
  static IntervalValue full();        // [0,1)
  static IntervalValue first_half();  // [0,1/2)

  /// Single interval [lo,hi); empty when lo == hi. Throws MalformedComponent
  /// if lo > hi.
  static IntervalValue span(const Dyadic& lo, const Dyadic& hi);

  /// Canonicalizes an arbitrary component list: drops empty pairs, sorts,
  /// merges overlapping and adjacent intervals. Idempotent. Throws
  /// MalformedComponent if any pair has lo > hi.
  static IntervalValue normalized(std::vector<Component> raw);

  const std::vector<Component>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }
  std::size_t component_count() const { return components_.size(); }

  bool operator==(const IntervalValue&) const = default;

  /// "[lo,hi) [lo,hi) ..." with dyadic endpoints, "{}" for the empty set.
  std::string to_string() const;

  /// Parses the to_string format. Throws MalformedComponent on bad text.
  static IntervalValue parse(std::string_view text);

 private:
  std::vector<Component> components_;
};

IntervalValue complement(const IntervalValue& a);
IntervalValue unite(const IntervalValue& a, const IntervalValue& b);
IntervalValue intersect(const IntervalValue& a, const IntervalValue& b);

/// Length of the left-most maximal component; 0 for the empty set.
Dyadic flength(const IntervalValue& a);

/// Shift left by flength(b), dropping the part pushed below 0.
IntervalValue lshift(const IntervalValue& a, const IntervalValue& b);

/// Circular shift right by flength(b); measure-preserving.
IntervalValue rshift(const IntervalValue& a, const IntervalValue& b);

/// Fractalian product: a scaled copy of `pattern` placed inside every
/// component of `macro`.
IntervalValue product(const IntervalValue& macro, const IntervalValue& pattern);

/// The left-most maximal component as a value; empty for the empty set.
IntervalValue first_component(const IntervalValue& a);

/// Whether r lies in the set. Throws PointOutOfRange unless 0 <= r < 1.
bool membership(const IntervalValue& a, const Dyadic& r);

/// Total length of all components.
Dyadic measure(const IntervalValue& a);

/// Minimal m with every endpoint a multiple of 2^-m (the maximum canonical
/// exponent over all endpoints); 0 for the empty set.
std::uint64_t bit_height(const IntervalValue& a);

}  // namespace ivc
