#include "ivc/oracle.hpp"

#include <random>

namespace ivc {

BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& mod) {
  if (mod < 2) throw DegenerateModulus("modulus must be at least 2");
  return boost::multiprecision::powm(base, exp, mod);
}

std::vector<BigInt> brute_dlog(const BigInt& a, const BigInt& b, const BigInt& p, unsigned n) {
  if (p < 2) throw DegenerateModulus("modulus must be at least 2");
  std::vector<BigInt> out;
  BigInt cur = 1 % p;
  BigInt bound = BigInt(1) << n;
  for (BigInt x = 0; x < bound; ++x) {
    if (cur == b) out.push_back(x);
    cur = cur * a % p;
  }
  return out;
}

BitsetValue::BitsetValue(unsigned resolution)
    : resolution_(resolution), cells_(std::size_t{1} << resolution, false) {
  if (resolution > 24) throw ResolutionMismatch("bitset resolution too large");
}

BitsetValue BitsetValue::from_interval(const IntervalValue& v, unsigned resolution) {
  if (bit_height(v) > resolution)
    throw ResolutionMismatch("value does not fit the bitset resolution");
  BitsetValue out(resolution);
  for (const auto& c : v.components()) {
    std::uint64_t lo = c.lo.scaled_floor(std::uint64_t{1} << resolution);
    std::uint64_t hi = c.hi.scaled_floor(std::uint64_t{1} << resolution);
    for (std::uint64_t i = lo; i < hi; ++i) out.cells_[i] = true;
  }
  return out;
}

IntervalValue BitsetValue::to_interval() const {
  std::vector<IntervalValue::Component> comps;
  std::size_t i = 0;
  while (i < cells_.size()) {
    if (!cells_[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cells_.size() && cells_[j]) ++j;
    comps.push_back({Dyadic::from_ratio(std::uint64_t{i}, resolution_),
                     Dyadic::from_ratio(std::uint64_t{j}, resolution_)});
    i = j;
  }
  return IntervalValue::normalized(std::move(comps));
}

std::size_t BitsetValue::popcount() const {
  std::size_t n = 0;
  for (bool c : cells_) n += c;
  return n;
}

std::size_t BitsetValue::flength_cells() const {
  std::size_t i = 0;
  while (i < cells_.size() && !cells_[i]) ++i;
  std::size_t j = i;
  while (j < cells_.size() && cells_[j]) ++j;
  return j - i;
}

std::string_view iv_op_name(IvOp op) {
  switch (op) {
    case IvOp::complement: return "complement";
    case IvOp::unite: return "unite";
    case IvOp::intersect: return "intersect";
    case IvOp::lshift: return "lshift";
    case IvOp::rshift: return "rshift";
    case IvOp::product: return "product";
    case IvOp::first_component: return "first_component";
  }
  return "?";
}

bool iv_op_is_binary(IvOp op) {
  return op != IvOp::complement && op != IvOp::first_component;
}

BitsetValue bitset_apply(IvOp op, const BitsetValue& a, const BitsetValue* b) {
  if (iv_op_is_binary(op)) {
    if (b == nullptr) throw ResolutionMismatch("binary operator needs two operands");
    if (op != IvOp::product && a.resolution() != b->resolution())
      throw ResolutionMismatch("bitset resolutions differ");
  }
  std::size_t cells = a.cell_count();
  switch (op) {
    case IvOp::complement: {
      BitsetValue out(a.resolution());
      for (std::size_t i = 0; i < cells; ++i) out.set_cell(i, !a.cell(i));
      return out;
    }
    case IvOp::unite: {
      BitsetValue out(a.resolution());
      for (std::size_t i = 0; i < cells; ++i) out.set_cell(i, a.cell(i) || b->cell(i));
      return out;
    }
    case IvOp::intersect: {
      BitsetValue out(a.resolution());
      for (std::size_t i = 0; i < cells; ++i) out.set_cell(i, a.cell(i) && b->cell(i));
      return out;
    }
    case IvOp::lshift: {
      BitsetValue out(a.resolution());
      std::size_t d = b->flength_cells();
      for (std::size_t i = 0; i + d < cells; ++i) out.set_cell(i, a.cell(i + d));
      return out;
    }
    case IvOp::rshift: {
      BitsetValue out(a.resolution());
      std::size_t d = b->flength_cells();
      for (std::size_t i = 0; i < cells; ++i) out.set_cell((i + d) % cells, a.cell(i));
      return out;
    }
    case IvOp::product: {
      // A scaled copy of b goes into every maximal run of a.
      BitsetValue out(a.resolution() + b->resolution());
      std::size_t inner = b->cell_count();
      std::size_t i = 0;
      while (i < cells) {
        if (!a.cell(i)) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < cells && a.cell(j)) ++j;
        std::size_t run = j - i;  // run spans run*inner output cells
        for (std::size_t t = 0; t < inner; ++t) {
          if (!b->cell(t)) continue;
          for (std::size_t s = 0; s < run; ++s) out.set_cell(i * inner + t * run + s, true);
        }
        i = j;
      }
      return out;
    }
    case IvOp::first_component: {
      BitsetValue out(a.resolution());
      std::size_t i = 0;
      while (i < cells && !a.cell(i)) ++i;
      while (i < cells && a.cell(i)) {
        out.set_cell(i, true);
        ++i;
      }
      return out;
    }
  }
  throw ResolutionMismatch("unknown operator");
}

SlicePattern slice_pattern(const BuildPlan& plan, const EvalResult& result, std::uint64_t l) {
  unsigned n = plan.n();
  if (l >= (std::uint64_t{1} << n)) throw IndexOutOfRange("slice index out of range");
  SlicePattern out;
  out.r = Dyadic::from_ratio(BigInt(2 * l + 1), n + 1);
  out.bits.resize(n);
  out.value = 0;
  for (unsigned k = 1; k <= n; ++k) {
    bool bit = membership(result.value(plan.x(k)), out.r);
    out.bits[k - 1] = bit;
    out.value = (out.value << 1) + (bit ? 1 : 0);
  }
  return out;
}

std::string DifferentialReport::to_text() const {
  std::string out;
  for (const auto& m : mismatches) {
    out += m;
    out += '\n';
  }
  return out;
}

namespace {

// Memoized (2l+1)/2^(m+1) tables; the checker touches every cell of every
// reference value.
const std::vector<Dyadic>& midpoints(unsigned resolution) {
  static std::vector<std::vector<Dyadic>> tables(16);
  auto& table = tables.at(resolution);
  if (table.empty()) {
    std::size_t cells = std::size_t{1} << resolution;
    table.reserve(cells);
    for (std::size_t l = 0; l < cells; ++l)
      table.push_back(Dyadic::from_ratio(std::uint64_t{2 * l + 1}, resolution + 1));
  }
  return table;
}

// One operator applied on both sides; returns false and appends a report
// line on disagreement (exact value and every-midpoint membership).
bool check_one(IvOp op, const BitsetValue& a, const BitsetValue* b, const IntervalValue& ia,
               const IntervalValue& ib, unsigned m, std::uint64_t seed, std::size_t case_no,
               DifferentialReport& report) {
  IntervalValue got;
  switch (op) {
    case IvOp::complement: got = complement(ia); break;
    case IvOp::unite: got = unite(ia, ib); break;
    case IvOp::intersect: got = intersect(ia, ib); break;
    case IvOp::lshift: got = lshift(ia, ib); break;
    case IvOp::rshift: got = rshift(ia, ib); break;
    case IvOp::product: got = product(ia, ib); break;
    case IvOp::first_component: got = first_component(ia); break;
  }
  BitsetValue ref = bitset_apply(op, a, b);
  bool ok = got == ref.to_interval();
  if (ok && ref.resolution() <= 10) {
    // Midpoint agreement at the reference resolution.
    const auto& mids = midpoints(ref.resolution());
    for (std::size_t l = 0; l < ref.cell_count(); ++l) {
      if (membership(got, mids[l]) != ref.cell(l)) {
        ok = false;
        break;
      }
    }
  }
  if (!ok) {
    report.mismatches.push_back(std::string(iv_op_name(op)) + " " + std::to_string(m) + " " +
                                std::to_string(seed) + " " + std::to_string(case_no));
  }
  return ok;
}

void check_all_ops(const BitsetValue& a, const BitsetValue& b, unsigned m, std::uint64_t seed,
                   std::size_t case_no, DifferentialReport& report) {
  IntervalValue ia = a.to_interval();
  IntervalValue ib = b.to_interval();
  for (IvOp op : kAllIvOps) {
    check_one(op, a, iv_op_is_binary(op) ? &b : nullptr, ia, ib, m, seed, case_no, report);
  }
  // Scalar views: flength and measure against cell counts.
  bool scalars_ok =
      flength(ia) == Dyadic::from_ratio(BigInt(a.flength_cells()), m) &&
      measure(ia) == Dyadic::from_ratio(BigInt(a.popcount()), m) && bit_height(ia) <= m;
  if (!scalars_ok) {
    report.mismatches.push_back("scalars " + std::to_string(m) + " " + std::to_string(seed) +
                                " " + std::to_string(case_no));
  }
  report.cases += 1;
}

}  // namespace

DifferentialReport differential_check(std::uint64_t seed, std::size_t cases, unsigned resolution) {
  if (resolution > 12) throw ResolutionMismatch("differential resolution capped at 12");
  std::mt19937_64 rng(seed);
  DifferentialReport report;
  std::size_t cells = std::size_t{1} << resolution;
  for (std::size_t c = 0; c < cases; ++c) {
    BitsetValue a(resolution), b(resolution);
    for (std::size_t i = 0; i < cells; ++i) {
      a.set_cell(i, (rng() & 1) != 0);
      b.set_cell(i, (rng() & 1) != 0);
    }
    check_all_ops(a, b, resolution, seed, c, report);
  }
  return report;
}

DifferentialReport differential_exhaustive(unsigned resolution) {
  if (resolution > 3) throw ResolutionMismatch("exhaustive differential capped at resolution 3");
  DifferentialReport report;
  std::size_t cells = std::size_t{1} << resolution;
  std::size_t values = std::size_t{1} << cells;
  for (std::size_t pa = 0; pa < values; ++pa) {
    for (std::size_t pb = 0; pb < values; ++pb) {
      BitsetValue a(resolution), b(resolution);
      for (std::size_t i = 0; i < cells; ++i) {
        a.set_cell(i, (pa >> i) & 1);
        b.set_cell(i, (pb >> i) & 1);
      }
      check_all_ops(a, b, resolution, 0, pa * values + pb, report);
    }
  }
  return report;
}

}  // namespace ivc
