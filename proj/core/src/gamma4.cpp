#include "numsem/gamma4.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace numsem {

Gamma4Params::Gamma4Params(Int a_, Int d_) : a(a_), d(d_) {
  if (a < 7) {
    throw std::invalid_argument("numsem: gamma4 requires a >= 7, got " +
                                std::to_string(a));
  }
  if (d < 1) {
    throw std::invalid_argument("numsem: gamma4 requires d >= 1");
  }
  if (std::gcd(a, d) != 1) {
    throw std::invalid_argument("numsem: gamma4 requires gcd(a, d) = 1");
  }
}

std::array<Int, 4> gamma4_generators(const Gamma4Params& p) {
  return {p.a, 2 * p.a + p.d, 3 * p.a + 3 * p.d, 4 * p.a + 6 * p.d};
}

NumericalSemigroup gamma4_semigroup(const Gamma4Params& p) {
  const auto g = gamma4_generators(p);
  return NumericalSemigroup(std::vector<Int>(g.begin(), g.end()));
}

Gamma4AperyEntry gamma4_apery_entry(const Gamma4Params& p, Int i) {
  Gamma4AperyEntry e;
  e.i = i;
  e.mu = i / 6;
  const Int qi = i % 6;
  if (qi >= 3) {
    e.nu = 1;
    e.xi = qi - 3;
  } else {
    e.nu = 0;
    e.xi = qi;
  }
  e.omega = (4 * e.mu + 3 * e.nu + 2 * e.xi) * p.a + i * p.d;
  return e;
}

std::vector<Gamma4AperyEntry> gamma4_apery(const Gamma4Params& p) {
  std::vector<Gamma4AperyEntry> out;
  out.reserve(static_cast<std::size_t>(p.a) - 1);
  for (Int i = 1; i < p.a; ++i) out.push_back(gamma4_apery_entry(p, i));
  return out;
}

namespace {

std::vector<Int> pf_indices(const Gamma4Params& p) {
  const Int a = p.a;
  switch (p.q()) {
    case 0: return {a - 1};
    case 1: return {a - 1, a - 2};
    case 2: return {a - 1, a - 3};
    case 3: return {a - 1, a - 4};
    case 4: return {a - 1, a - 2, a - 5};
    default: return {a - 1, a - 3, a - 6};
  }
}

}  // namespace

std::vector<Int> gamma4_pf(const Gamma4Params& p) {
  std::vector<Int> out;
  for (Int i : pf_indices(p)) out.push_back(gamma4_apery_entry(p, i).omega - p.a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Int> gamma4_pf_omega_listing(const Gamma4Params& p) {
  std::vector<Int> out;
  for (Int i : pf_indices(p)) out.push_back(gamma4_apery_entry(p, i).omega);
  return out;
}

Int gamma4_frobenius(const Gamma4Params& p) { return gamma4_pf(p).back(); }

Gamma4FrobeniusGuards gamma4_frobenius_guard_report(const Gamma4Params& p) {
  const auto omega = [&](Int i) { return gamma4_apery_entry(p, i).omega; };
  const Int a = p.a;
  const Int d = p.d;

  Int idx_written = a - 1;
  Int idx_amended = a - 1;
  switch (p.q()) {
    case 1:
      idx_written = idx_amended = (3 * a > d) ? a - 2 : a - 1;
      break;
    case 2:
      idx_written = (a > 2) ? a - 3 : a - 1;
      idx_amended = (a > 2 * d) ? a - 3 : a - 1;
      break;
    case 4:
      idx_written = idx_amended = (a > d) ? a - 2 : a - 1;
      break;
    default:
      break;  // q in {0, 3, 5}: omega(a-1) unconditionally
  }

  Gamma4FrobeniusGuards rep;
  rep.frobenius = gamma4_frobenius(p);
  rep.guard_as_written = omega(idx_written) - a;
  rep.guard_amended = omega(idx_amended) - a;
  rep.as_written_agrees = rep.guard_as_written == rep.frobenius;
  rep.amended_agrees = rep.guard_amended == rep.frobenius;
  return rep;
}

std::vector<Int> gamma4_tk_unadjusted(const Gamma4Params& p) {
  const Int mu = p.m();
  const Int q = p.q();
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(mu) + 3);
  for (Int k = 0; k <= mu + 2; ++k) {
    Int v;
    if (k == 0) {
      v = 1;
    } else if (k == 1) {
      v = 3;
    } else if (k == mu + 2) {
      v = q <= 2 ? 1 : (q <= 4 ? 2 : 3);
    } else if (k == 2 && mu == 1) {
      v = q / 2 + 2;
    } else if (k == mu + 1) {
      v = q / 2 + 3;
    } else if (k == 2) {
      v = 5;
    } else {
      v = 6;  // 3 <= k <= mu
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Int> gamma4_tk(const Gamma4Params& p) {
  std::vector<Int> out = gamma4_tk_unadjusted(p);
  if (p.q() == 0) {
    // (m, 0, 0) encodes i = a, outside 0..a-1
    out[static_cast<std::size_t>(p.m())] -= 1;
  }
  return out;
}

HilbertSeries gamma4_hilbert_series(const Gamma4Params& p) {
  return HilbertSeries{gamma4_tk(p)};
}

AperyTable gamma4_apery_table(const Gamma4Params& p) {
  const Int a = p.a;
  const Int reduction = p.m() + 2;
  AperyTable table;
  table.modulus = a;
  table.rows.assign(static_cast<std::size_t>(reduction) + 1,
                    std::vector<Int>(static_cast<std::size_t>(a), 0));
  for (Int t = 0; t < a; ++t) {
    const Gamma4AperyEntry e =
        t == 0 ? Gamma4AperyEntry{0, 0, 0, 0, 0} : gamma4_apery_entry(p, t);
    const Int k = e.mu + e.nu + e.xi;
    const auto col = static_cast<std::size_t>((t * p.d) % a);
    for (Int s = 0; s <= reduction; ++s) {
      table.rows[static_cast<std::size_t>(s)][col] =
          s <= k ? e.omega : (3 * e.mu + 2 * e.nu + e.xi + s) * a + t * p.d;
    }
  }
  return table;
}

std::vector<Int> derivation_exponents(const Gamma4Params& p) {
  std::vector<Int> out = gamma4_pf(p);
  for (Int& v : out) v += 1;
  return out;
}

}  // namespace numsem
