#include "ivc/interval_value.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ivc {
namespace {

void check_cap(std::size_t count) {
  if (count > kMaxComponents) throw ResourceLimit("component count exceeds cap");
}

// Merges an ascending, possibly overlapping/adjacent component list in place.
void coalesce(std::vector<IntervalValue::Component>& comps) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (out > 0 && comps[i].lo <= comps[out - 1].hi) {
      if (comps[out - 1].hi < comps[i].hi) comps[out - 1].hi = comps[i].hi;
    } else {
      comps[out++] = comps[i];
    }
  }
  comps.resize(out);
}

}  // namespace

IntervalValue IntervalValue::full() {
  return span(Dyadic::zero(), Dyadic::one());
}

IntervalValue IntervalValue::first_half() {
  return span(Dyadic::zero(), Dyadic::half());
}

IntervalValue IntervalValue::span(const Dyadic& lo, const Dyadic& hi) {
  if (lo > hi) throw MalformedComponent("interval has lo > hi");
  IntervalValue v;
  if (lo < hi) v.components_.push_back({lo, hi});
  return v;
}

IntervalValue IntervalValue::normalized(std::vector<Component> raw) {
  for (const Component& c : raw) {
    if (c.lo > c.hi) throw MalformedComponent("interval has lo > hi");
  }
  std::erase_if(raw, [](const Component& c) { return c.lo == c.hi; });
  auto before = [](const Component& a, const Component& b) {
    return a.lo == b.lo ? a.hi < b.hi : a.lo < b.lo;
  };
  if (!std::is_sorted(raw.begin(), raw.end(), before)) std::sort(raw.begin(), raw.end(), before);
  coalesce(raw);
  check_cap(raw.size());
  IntervalValue v;
  v.components_ = std::move(raw);
  return v;
}

std::string IntervalValue::to_string() const {
  if (components_.empty()) return "{}";
  std::ostringstream os;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) os << ' ';
    os << '[' << components_[i].lo.to_string() << ',' << components_[i].hi.to_string() << ')';
  }
  return os.str();
}

IntervalValue IntervalValue::parse(std::string_view text) {
  auto fail = [](const std::string& why) -> IntervalValue {
    throw MalformedComponent("bad interval text: " + why);
  };
  // Trim.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n')) text.remove_suffix(1);
  if (text == "{}") return empty();
  std::vector<Component> comps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '[') return fail("expected '['");
    auto comma = text.find(',', pos);
    auto close = text.find(')', pos);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
      return fail("expected '[lo,hi)'");
    auto lo = Dyadic::parse(text.substr(pos + 1, comma - pos - 1));
    auto hi = Dyadic::parse(text.substr(comma + 1, close - comma - 1));
    if (!lo || !hi) return fail("bad endpoint");
    comps.push_back({*lo, *hi});
    pos = close + 1;
  }
  if (comps.empty()) return fail("no components");
  return normalized(std::move(comps));
}

IntervalValue complement(const IntervalValue& a) {
  std::vector<IntervalValue::Component> out;
  out.reserve(a.component_count() + 1);
  Dyadic prev = Dyadic::zero();
  for (const auto& c : a.components()) {
    if (prev < c.lo) out.push_back({prev, c.lo});
    prev = c.hi;
  }
  if (prev < Dyadic::one()) out.push_back({prev, Dyadic::one()});
  IntervalValue v = IntervalValue::normalized(std::move(out));
  return v;
}

IntervalValue unite(const IntervalValue& a, const IntervalValue& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  std::vector<IntervalValue::Component> merged;
  merged.reserve(a.component_count() + b.component_count());
  std::merge(a.components().begin(), a.components().end(), b.components().begin(),
             b.components().end(), std::back_inserter(merged),
             [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return IntervalValue::normalized(std::move(merged));
}

IntervalValue intersect(const IntervalValue& a, const IntervalValue& b) {
  std::vector<IntervalValue::Component> out;
  std::size_t i = 0, j = 0;
  const auto& ca = a.components();
  const auto& cb = b.components();
  while (i < ca.size() && j < cb.size()) {
    const Dyadic& lo = ca[i].lo > cb[j].lo ? ca[i].lo : cb[j].lo;
    const Dyadic& hi = ca[i].hi < cb[j].hi ? ca[i].hi : cb[j].hi;
    if (lo < hi) out.push_back({lo, hi});
    if (ca[i].hi < cb[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  check_cap(out.size());
  return IntervalValue::normalized(std::move(out));
}

Dyadic flength(const IntervalValue& a) {
  if (a.is_empty()) return Dyadic::zero();
  const auto& c = a.components().front();
  return c.hi - c.lo;
}

IntervalValue lshift(const IntervalValue& a, const IntervalValue& b) {
  Dyadic d = flength(b);
  if (d.is_zero()) return a;
  std::vector<IntervalValue::Component> out;
  out.reserve(a.component_count());
  for (const auto& c : a.components()) {
    if (c.hi <= d) continue;
    Dyadic lo = c.lo <= d ? Dyadic::zero() : c.lo - d;
    out.push_back({std::move(lo), c.hi - d});
  }
  return IntervalValue::normalized(std::move(out));
}

IntervalValue rshift(const IntervalValue& a, const IntervalValue& b) {
  Dyadic d = flength(b);
  if (d.is_zero()) return a;
  Dyadic cut = Dyadic::one() - d;  // points at or above wrap around
  std::vector<IntervalValue::Component> low, high;
  for (const auto& c : a.components()) {
    if (c.hi <= cut) {
      high.push_back({c.lo + d, c.hi + d});
    } else if (c.lo >= cut) {
      low.push_back({c.lo - cut, c.hi - cut});
    } else {
      high.push_back({c.lo + d, Dyadic::one()});
      low.push_back({Dyadic::zero(), c.hi - cut});
    }
  }
  low.insert(low.end(), high.begin(), high.end());
  return IntervalValue::normalized(std::move(low));
}

IntervalValue product(const IntervalValue& macro, const IntervalValue& pattern) {
  std::size_t raw = macro.component_count() * pattern.component_count();
  if (macro.component_count() != 0 && raw / macro.component_count() != pattern.component_count())
    throw ResourceLimit("component count exceeds cap");
  check_cap(raw);
  // Endpoints as integers over the common grids 2^-mb and 2^-ma, so each
  // output endpoint costs one multiply-add and one canonicalization.
  std::uint64_t mb = bit_height(macro);
  std::uint64_t ma = bit_height(pattern);
  auto lift = [](const Dyadic& d, std::uint64_t m) { return d.numerator() << (m - d.exponent()); };
  std::vector<IntervalValue::Component> out;
  out.reserve(raw);
  for (const auto& b : macro.components()) {
    BigInt blo = lift(b.lo, mb);
    BigInt width = lift(b.hi, mb) - blo;
    BigInt base = blo << ma;
    for (const auto& a : pattern.components()) {
      out.push_back({Dyadic::from_ratio(base + lift(a.lo, ma) * width, ma + mb),
                     Dyadic::from_ratio(base + lift(a.hi, ma) * width, ma + mb)});
    }
  }
  return IntervalValue::normalized(std::move(out));
}

IntervalValue first_component(const IntervalValue& a) {
  if (a.is_empty()) return IntervalValue::empty();
  const auto& c = a.components().front();
  return IntervalValue::span(c.lo, c.hi);
}

bool membership(const IntervalValue& a, const Dyadic& r) {
  if (r >= Dyadic::one()) throw PointOutOfRange("membership point not in [0,1)");
  const auto& comps = a.components();
  auto it = std::upper_bound(comps.begin(), comps.end(), r,
                             [](const Dyadic& v, const IntervalValue::Component& c) { return v < c.lo; });
  if (it == comps.begin()) return false;
  --it;
  return r < it->hi;
}

Dyadic measure(const IntervalValue& a) {
  Dyadic total = Dyadic::zero();
  for (const auto& c : a.components()) total = total + (c.hi - c.lo);
  return total;
}

std::uint64_t bit_height(const IntervalValue& a) {
  std::uint64_t m = 0;
  for (const auto& c : a.components()) {
    m = std::max({m, c.lo.exponent(), c.hi.exponent()});
  }
  return m;
}

}  // namespace ivc
