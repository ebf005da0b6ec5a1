#pragma once

#include <string>
#include <vector>

#include "numsem/gamma4.hpp"
#include "numsem/geo.hpp"
#include "numsem/ideal.hpp"

namespace numsem {

/// One mismatch between a closed-form rule and the oracle engine (or between
/// the two readings of a rule). Non-fatal records flag known issues with the
/// closed-form case tables without failing the run; fatal records fail it.
struct DiscrepancyRecord {
  std::string params;
  std::string claim;
  std::string computed;
  std::string expected;
  bool fatal = true;
};

struct InstanceReport {
  std::string params;
  std::vector<DiscrepancyRecord> records;

  bool pass() const;
};

/// Full closed-form vs oracle comparison for one (a, d): Apery set,
/// pseudo-Frobenius set, Frobenius number, Apery table, reduction number,
/// t_k histogram, uniqueness of Apery expressions, minimality, tangent-cone
/// freeness and Hilbert numerator. The Frobenius case guards and the
/// Gorenstein colon condition are evaluated and reported, never trusted.
InstanceReport verify_gamma4_instance(const Gamma4Params& p);

/// Ideal + resolution checks for one (a, d): homogeneity of H_q, the
/// standard-monomial count, degree-multiset agreement with the
/// factorization-graph oracle, |H_q| against beta_1, and the resolution
/// complex checks (zero products, minimality, gradedness, rank signature).
InstanceReport verify_gamma4_ideal(const Gamma4Params& p);

/// Closed-form vs oracle comparison for one geometric-family instance,
/// including the digit-sum minimality route and the tangent-cone checks.
InstanceReport verify_geo_instance(const GeoParams& p);

struct SweepOutcome {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<InstanceReport> reports;  // instance order is deterministic
  std::vector<std::string> notes;       // skipped instances with the reason

  /// All records across instances, instance order preserved.
  std::vector<DiscrepancyRecord> all_records() const;
};

struct Gamma4SweepSpec {
  Int a_lo = 7, a_hi = 50;
  Int d_lo = 1, d_hi = 40;
  bool include_ideal = false;
};

struct GeoSweepSpec {
  Int a_lo = 7, a_hi = 30;
  Int r_lo = 2, r_hi = 3;
  Int h_lo = 1, h_hi = 2;
  Int n_lo = 1, n_hi = 3;
  // d runs over h*n*(r-1) + 1 .. h*n*(r-1) + d_span when d_auto, else
  // d_lo..d_hi; gcd filters apply either way.
  bool d_auto = true;
  Int d_span = 20;
  Int d_lo = 0, d_hi = 0;
};

/// Run the verification over the (gcd-filtered) parameter grid. Instances run
/// concurrently on `threads` workers (0 = hardware concurrency); aggregation
/// is ordered by parameters, so output is deterministic.
SweepOutcome sweep_gamma4(const Gamma4SweepSpec& spec, unsigned threads = 0);
SweepOutcome sweep_geo(const GeoSweepSpec& spec, unsigned threads = 0);

}  // namespace numsem
