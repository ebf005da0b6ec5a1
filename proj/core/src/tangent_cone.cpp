#include "numsem/tangent_cone.hpp"

#include <algorithm>
#include <stdexcept>

namespace numsem {

LadderStats ladder_stats(std::span<const Int> values) {
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] > values[i + 1]) {
      throw std::domain_error("numsem: ladder must be non-decreasing");
    }
  }
  LadderStats stats;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[i]) ++j;
    if (j > i) stats.landings.push_back(Landing{i, j});
    i = j + 1;
  }
  if (stats.landings.empty()) {
    // strictly increasing: trivial landing {0}, free shift 0
    return stats;
  }
  stats.p = static_cast<Int>(stats.landings.size()) - 1;
  stats.free_shift = static_cast<Int>(stats.landings.back().end);
  for (std::size_t j = 1; j < stats.landings.size(); ++j) {
    const Int b = static_cast<Int>(stats.landings[j - 1].end);
    const Int c = static_cast<Int>(stats.landings[j].start) - b;
    stats.torsion.push_back(TorsionSummand{b, c});
  }
  return stats;
}

CZDecomposition cz_decompose(const AperyTable& table) {
  CZDecomposition out;
  const std::size_t a = table.rows.front().size();
  std::vector<Int> column(table.rows.size());
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t s = 0; s < table.rows.size(); ++s) {
      column[s] = table.rows[s][i];
    }
    LadderStats stats = ladder_stats(column);
    out.free_shifts.push_back(stats.free_shift);
    out.torsion.insert(out.torsion.end(), stats.torsion.begin(),
                       stats.torsion.end());
  }
  std::sort(out.free_shifts.begin(), out.free_shifts.end());
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

bool is_tangent_cone_cm(const CZDecomposition& d) { return d.torsion.empty(); }

GorensteinReport gorenstein_condition(const NumericalSemigroup& s) {
  const Int a = s.multiplicity();
  const Int max_gen = s.generators().back();
  const Int frob = frobenius(s);
  const Int reduction = apery_table(s).reduction_number();
  LengthOracle oracle(s);

  GorensteinReport report;
  for (Int n = 1; n <= reduction; ++n) {
    const Int window = frob + (n + 2) * max_gen;
    oracle.ensure(window + a);
    bool holds = true;
    for (Int x = 0; x <= window && holds; ++x) {
      const bool lhs = oracle.max_length(x) >= n && oracle.max_length(x + a) >= n + 2;
      const bool rhs = oracle.max_length(x) >= n + 1;
      holds = (lhs == rhs);
    }
    report.per_power.emplace_back(n, holds);
    report.overall = report.overall && holds;
  }
  return report;
}

HilbertSeries hilbert_from_decomposition(const CZDecomposition& d) {
  Int degree = 0;
  for (Int f : d.free_shifts) degree = std::max(degree, f);
  for (const auto& t : d.torsion) degree = std::max(degree, t.shift + t.length);
  HilbertSeries h;
  h.numerator.assign(static_cast<std::size_t>(degree) + 1, 0);
  for (Int f : d.free_shifts) h.numerator[static_cast<std::size_t>(f)] += 1;
  for (const auto& t : d.torsion) {
    h.numerator[static_cast<std::size_t>(t.shift)] += 1;
    h.numerator[static_cast<std::size_t>(t.shift + t.length)] -= 1;
  }
  while (h.numerator.size() > 1 && h.numerator.back() == 0) h.numerator.pop_back();
  return h;
}

std::vector<Int> hilbert_series_prefix(const HilbertSeries& h, std::size_t count) {
  std::vector<Int> out(count, 0);
  Int acc = 0;
  for (std::size_t n = 0; n < count; ++n) {
    if (n < h.numerator.size()) acc += h.numerator[n];
    out[n] = acc;
  }
  return out;
}

bool unique_expression_check(const NumericalSemigroup& s, const AperySet& ap) {
  for (Int w : ap.elements) {
    if (w == 0) continue;
    if (factorizations(s, w).size() != 1) return false;
  }
  return true;
}

}  // namespace numsem
