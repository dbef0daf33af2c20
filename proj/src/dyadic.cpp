#include "ivc/dyadic.hpp"

#include <charconv>

namespace ivc {
namespace {

// Bit length of a positive integer.
std::uint64_t bit_length(const BigInt& v) {
  return boost::multiprecision::msb(v) + 1;
}

}  // namespace

Dyadic Dyadic::one() {
  Dyadic d;
  d.num_ = 1;
  d.expo_ = 0;
  return d;
}

Dyadic Dyadic::half() {
  Dyadic d;
  d.num_ = 1;
  d.expo_ = 1;
  return d;
}

Dyadic Dyadic::from_ratio(BigInt numerator, std::uint64_t exponent) {
  if (numerator < 0) throw MalformedComponent("dyadic numerator is negative");
  Dyadic d;
  if (numerator == 0) return d;
  std::uint64_t bits = bit_length(numerator);
  if (bits > exponent + 1 ||
      (bits == exponent + 1 && (numerator & (numerator - 1)) != 0)) {
    throw MalformedComponent("dyadic value exceeds 1");
  }
  std::uint64_t trailing = boost::multiprecision::lsb(numerator);
  std::uint64_t shift = trailing < exponent ? trailing : exponent;
  d.num_ = numerator >> shift;
  d.expo_ = exponent - shift;
  return d;
}

Dyadic Dyadic::from_ratio(std::uint64_t numerator, std::uint64_t exponent) {
  Dyadic d;
  if (numerator == 0) return d;
  std::uint64_t bits = 64 - static_cast<std::uint64_t>(__builtin_clzll(numerator));
  if (bits > exponent + 1 ||
      (bits == exponent + 1 && (numerator & (numerator - 1)) != 0)) {
    throw MalformedComponent("dyadic value exceeds 1");
  }
  std::uint64_t trailing = static_cast<std::uint64_t>(__builtin_ctzll(numerator));
  std::uint64_t shift = trailing < exponent ? trailing : exponent;
  d.num_ = numerator >> shift;
  d.expo_ = exponent - shift;
  return d;
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
  if (a.num_ == 0) return b.num_ == 0 ? 0 : -1;
  if (b.num_ == 0) return 1;
  if (a.expo_ == b.expo_) return a.num_.compare(b.num_);
  // Compare a.num * 2^b.expo with b.num * 2^a.expo; decide by bit length
  // first so the shift below stays small.
  std::uint64_t la = bit_length(a.num_) + b.expo_;
  std::uint64_t lb = bit_length(b.num_) + a.expo_;
  if (la != lb) return la < lb ? -1 : 1;
  if (a.expo_ < b.expo_) {
    BigInt lhs = a.num_ << (b.expo_ - a.expo_);
    return lhs.compare(b.num_);
  }
  BigInt rhs = b.num_ << (a.expo_ - b.expo_);
  return a.num_.compare(rhs);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  std::uint64_t m = a.expo_ > b.expo_ ? a.expo_ : b.expo_;
  BigInt num = (a.num_ << (m - a.expo_)) + (b.num_ << (m - b.expo_));
  return Dyadic::from_ratio(std::move(num), m);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  std::uint64_t m = a.expo_ > b.expo_ ? a.expo_ : b.expo_;
  BigInt lhs = a.num_ << (m - a.expo_);
  BigInt rhs = b.num_ << (m - b.expo_);
  if (lhs < rhs) throw MalformedComponent("dyadic difference is negative");
  return Dyadic::from_ratio(lhs - rhs, m);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic::from_ratio(a.num_ * b.num_, a.expo_ + b.expo_);
}

std::uint64_t Dyadic::scaled_floor(std::uint64_t scale) const {
  BigInt v = (num_ * scale) >> expo_;
  return v.convert_to<std::uint64_t>();
}

std::string Dyadic::to_string() const {
  return num_.str() + "/2^" + std::to_string(expo_);
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
  auto sep = text.find("/2^");
  if (sep == std::string_view::npos || sep == 0) return std::nullopt;
  std::string_view num_part = text.substr(0, sep);
  std::string_view exp_part = text.substr(sep + 3);
  if (exp_part.empty()) return std::nullopt;
  for (char c : num_part)
    if (c < '0' || c > '9') return std::nullopt;
  std::uint64_t expo = 0;
  auto [p, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), expo);
  if (ec != std::errc() || p != exp_part.data() + exp_part.size()) return std::nullopt;
  BigInt num{std::string(num_part)};
  return from_ratio(std::move(num), expo);
}

}  // namespace ivc
