#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "ivc/errors.hpp"

namespace ivc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binary rational numerator/2^exponent restricted to [0,1].
///
/// Canonical form: the numerator is odd, or the value is 0 as (0,0).
/// The value 1 canonicalizes to (1,0). All arithmetic is exact; operations
/// whose result would leave [0,1] throw MalformedComponent.
class Dyadic {
 public:
  Dyadic() = default;  // zero

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one();
  static Dyadic half();

  /// Builds numerator/2^exponent, canonicalized. Throws MalformedComponent
  /// if the value lies outside [0,1].
  static Dyadic from_ratio(BigInt numerator, std::uint64_t exponent);
  static Dyadic from_ratio(std::uint64_t numerator, std::uint64_t exponent);

  const BigInt& numerator() const { return num_; }
  std::uint64_t exponent() const { return expo_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return expo_ == 0 && num_ == 1; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.expo_ == b.expo_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  /// floor(value * scale); exact integer arithmetic.
  std::uint64_t scaled_floor(std::uint64_t scale) const;

  /// "num/2^m" in canonical form, e.g. "3/2^3".
  std::string to_string() const;

  /// Parses the to_string format. Returns nullopt on malformed text;
  /// throws MalformedComponent if the value lies outside [0,1].
  static std::optional<Dyadic> parse(std::string_view text);

 private:
  static int compare(const Dyadic& a, const Dyadic& b);

  BigInt num_ = 0;
  std::uint64_t expo_ = 0;
};

}  // namespace ivc
