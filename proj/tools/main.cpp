// numsem CLI: oracle engine and closed forms for the two semigroup families,
// with cross-verification sweeps. Exit codes: 0 success, 1 verification
// mismatch, 2 invalid parameters.

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "render.hpp"

namespace {

using namespace numsem;
using render::Json;

struct Output {
  std::string format = "text";
  std::string path;

  int write(const std::string& payload) const {
    if (path.empty()) {
      std::cout << payload;
      return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "numsem: cannot open output path " << path << "\n";
      return 2;
    }
    file << payload;
    return 0;
  }
};

std::vector<Int> parse_generators(const std::string& csv) {
  std::vector<Int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) {
    throw std::invalid_argument("numsem: empty generator list");
  }
  return out;
}

std::pair<Int, Int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    const Int v = std::stoll(text);
    return {v, v};
  }
  return {std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
}

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    const Int e = m.exponents[k];
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(k + 1);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string polynomial_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : p.terms()) {
    const Int abs = coeff < 0 ? -coeff : coeff;
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (abs != 1) out += std::to_string(abs) + "*";
    out += monomial_text(mono);
  }
  return out;
}

std::string binomial_text(const Binomial& b) {
  return monomial_text(b.plus) + " - " + monomial_text(b.minus);
}

std::string series_text(const HilbertSeries& h) {
  std::string num;
  for (std::size_t k = 0; k < h.numerator.size(); ++k) {
    const Int c = h.numerator[k];
    if (c == 0) continue;
    const Int abs = c < 0 ? -c : c;
    if (num.empty()) {
      if (c < 0) num += "-";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    if (abs != 1 || k == 0) num += std::to_string(abs);
    if (k >= 1) {
      num += "x";
      if (k >= 2) num += "^" + std::to_string(k);
    }
  }
  if (num.empty()) num = "0";
  return "(" + num + ")/(1-x)";
}

std::string matrix_text(const std::string& name, const PolyMatrix& m) {
  std::ostringstream os;
  os << name << " (" << m.rows() << "x" << m.cols() << "):\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [ ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << " | ";
      os << polynomial_text(m.at(r, c));
    }
    os << " ]\n";
  }
  return os.str();
}

int emit_json(const Output& out, Json params, Json result,
              const std::vector<DiscrepancyRecord>& records) {
  Json doc{{"params", std::move(params)},
           {"result", std::move(result)},
           {"discrepancies", render::records_json(records)}};
  return out.write(doc.dump(2) + "\n");
}

template <typename Range>
std::string joined(const Range& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += " ";
    out += std::to_string(v);
  }
  return out;
}

int run_core(const Output& out, const std::string& gens_csv,
             const std::string& what, Int wrt, Int of) {
  const NumericalSemigroup s(parse_generators(gens_csv));
  Json params{{"generators", s.generators()}};
  std::ostringstream text;

  if (what == "apery") {
    const Int a = wrt > 0 ? wrt : s.multiplicity();
    const AperySet ap = apery_set(s, a);
    if (out.format == "json") return emit_json(out, params, render::apery_json(ap), {});
    text << "modulus: " << ap.modulus << "\n";
    text << "elements by residue: " << joined(ap.elements) << "\n";
  } else if (what == "frobenius") {
    const Int f = frobenius(s);
    if (out.format == "json") return emit_json(out, params, Json(f), {});
    text << f << "\n";
  } else if (what == "pf") {
    const auto pf = pseudo_frobenius(s);
    if (out.format == "json") return emit_json(out, params, Json(pf), {});
    text << joined(pf) << "\n";
  } else if (what == "table") {
    const AperyTable t = apery_table(s);
    if (out.format == "json") return emit_json(out, params, render::table_json(t), {});
    if (out.format == "csv") return out.write(render::table_csv(t));
    text << render::table_text(t);
  } else if (what == "factorizations") {
    if (of < 0) {
      std::cerr << "numsem: factorizations needs --of N\n";
      return 2;
    }
    const auto fs = factorizations(s, of);
    if (out.format == "json") {
      return emit_json(out, params, render::factorizations_json(fs), {});
    }
    for (const auto& f : fs) {
      text << "(" << joined(f.exponents) << ") length " << f.length() << "\n";
    }
  } else {  // betti
    const auto degrees = betti_degrees(s);
    if (out.format == "json") {
      Json result = Json::object();
      for (const auto& [deg, cnt] : degrees) result[std::to_string(deg)] = cnt;
      return emit_json(out, params, result, {});
    }
    for (const auto& [deg, cnt] : degrees) text << deg << " x" << cnt << "\n";
  }
  if (out.format == "csv") {
    std::cerr << "numsem: csv output is only defined for tables\n";
    return 2;
  }
  return out.write(text.str());
}

int run_gamma4(const Output& out, Int a, Int d, const std::string& what,
               bool verify, bool omega_convention) {
  const Gamma4Params p(a, d);
  Json params{{"a", a}, {"d", d}, {"m", p.m()}, {"q", p.q()}};

  std::vector<DiscrepancyRecord> records;
  if (verify) {
    InstanceReport rep = verify_gamma4_instance(p);
    records = rep.records;
    if (what == "ideal" || what == "resolution" || what == "all") {
      InstanceReport ideal = verify_gamma4_ideal(p);
      records.insert(records.end(), ideal.records.begin(), ideal.records.end());
    }
  }
  const bool fatal = std::any_of(records.begin(), records.end(),
                                 [](const auto& r) { return r.fatal; });

  const auto gens = gamma4_generators(p);
  Json result = Json::object();
  std::ostringstream text;
  const bool all = what == "all";

  if (all) {
    result["generators"] = gens;
    text << "generators: " << joined(gens) << "\n";
  }
  if (all || what == "apery") {
    const auto entries = gamma4_apery(p);
    result["apery"] = render::gamma4_apery_json(entries);
    std::vector<Int> row{0};
    for (const auto& e : entries) row.push_back(e.omega);
    result["omega_row"] = row;
    text << "omega row (i = 0.." << a - 1 << "): " << joined(row) << "\n";
  }
  if (all || what == "pf") {
    result["pf"] = gamma4_pf(p);
    text << "pf: " << joined(gamma4_pf(p)) << "\n";
    if (omega_convention) {
      result["pf_omega_listing"] = gamma4_pf_omega_listing(p);
      text << "omega listing: " << joined(gamma4_pf_omega_listing(p)) << "\n";
    }
    result["derivation_exponents"] = derivation_exponents(p);
    text << "derivation exponents: " << joined(derivation_exponents(p)) << "\n";
  }
  if (all || what == "frobenius") {
    result["frobenius"] = gamma4_frobenius(p);
    text << "frobenius: " << gamma4_frobenius(p) << "\n";
  }
  if (all || what == "table") {
    const AperyTable t = gamma4_apery_table(p);
    result["table"] = render::table_json(t);
    if (out.format == "csv") return out.write(render::table_csv(t));
    text << render::table_text(t);
  }
  if (all || what == "tk") {
    result["tk"] = gamma4_tk(p);
    text << "tk: " << joined(gamma4_tk(p)) << "\n";
  }
  if (all || what == "hilbert") {
    result["hilbert"] = render::hilbert_json(gamma4_hilbert_series(p));
    text << "hilbert series: " << series_text(gamma4_hilbert_series(p)) << "\n";
  }
  if (all) {
    const CZDecomposition cz = cz_decompose(gamma4_apery_table(p));
    result["decomposition"] = render::decomposition_json(cz);
    text << "free shifts: " << joined(cz.free_shifts)
         << (cz.torsion.empty() ? " (no torsion)" : " (torsion present)") << "\n";
    const GorensteinReport gor = gorenstein_condition(gamma4_semigroup(p));
    result["gorenstein_condition"] = render::gorenstein_json(gor);
    text << "gorenstein colon condition: " << (gor.overall ? "holds" : "fails")
         << "\n";
  }
  if (all || what == "ideal") {
    const auto hq = hq_generators(p);
    result["ideal"] = render::binomials_json(hq);
    text << "ideal generators (" << hq.size() << "):\n";
    const WeightVector w{gens[0], gens[1], gens[2], gens[3]};
    for (const auto& b : hq) {
      text << "  " << binomial_text(b) << "  [degree "
           << weighted_degree(b.plus, w) << "]\n";
    }
  }
  if (all || what == "resolution") {
    const auto res = resolution_matrices(p);
    result["resolution"] = render::resolution_json(res, p.q());
    const auto sig = betti_signature(p.q());
    text << "betti signature: " << joined(sig) << "\n";
    text << matrix_text("phi1", res.phi1) << matrix_text("phi2", res.phi2)
         << matrix_text("phi3", res.phi3);
  }

  if (out.format == "csv") {
    std::cerr << "numsem: csv output is only defined for tables\n";
    return 2;
  }
  int rc = 0;
  if (out.format == "json") {
    rc = emit_json(out, params, result, records);
  } else {
    for (const auto& r : records) text << render::record_text(r) << "\n";
    rc = out.write(text.str());
  }
  if (rc != 0) return rc;
  return fatal ? 1 : 0;
}

int run_geo(const Output& out, Int a, Int d, Int r, Int h, Int n,
            const std::string& what, bool verify) {
  const GeoParams p(a, d, r, h, n);
  Json params{{"a", a}, {"d", d}, {"r", r}, {"h", h}, {"n", n}};

  std::vector<DiscrepancyRecord> records;
  if (verify) records = verify_geo_instance(p).records;
  const bool fatal = std::any_of(records.begin(), records.end(),
                                 [](const auto& rec) { return rec.fatal; });

  Json result = Json::object();
  std::ostringstream text;
  if (what == "apery") {
    const auto entries = geo_apery(p);
    result = render::geo_apery_json(entries);
    std::vector<Int> row;
    for (const auto& e : entries) row.push_back(e.omega);
    text << "omega row (i = 0.." << a - 1 << "): " << joined(row) << "\n";
  } else if (what == "table") {
    const AperyTable t = geo_apery_table(p);
    result = render::table_json(t);
    if (out.format == "csv") return out.write(render::table_csv(t));
    text << render::table_text(t);
  } else {  // hilbert
    const CZDecomposition cz = cz_decompose(geo_apery_table(p));
    result = render::hilbert_json(hilbert_from_decomposition(cz));
    text << "hilbert series: " << series_text(hilbert_from_decomposition(cz))
         << "\n";
  }

  if (out.format == "csv") {
    std::cerr << "numsem: csv output is only defined for tables\n";
    return 2;
  }
  int rc = 0;
  if (out.format == "json") {
    rc = emit_json(out, params, result, records);
  } else {
    for (const auto& rec : records) text << render::record_text(rec) << "\n";
    rc = out.write(text.str());
  }
  if (rc != 0) return rc;
  return fatal ? 1 : 0;
}

int run_sweep(const Output& out, const std::string& family,
              const std::string& a_range, const std::string& d_range,
              const std::string& r_range, const std::string& h_range,
              const std::string& n_range, bool include_ideal,
              unsigned threads) {
  SweepOutcome outcome;
  Json params{{"family", family}};
  if (family == "gamma4") {
    Gamma4SweepSpec spec;
    std::tie(spec.a_lo, spec.a_hi) = parse_range(a_range);
    std::tie(spec.d_lo, spec.d_hi) = parse_range(d_range);
    spec.include_ideal = include_ideal;
    params["a"] = a_range;
    params["d"] = d_range;
    params["ideal"] = include_ideal;
    outcome = sweep_gamma4(spec, threads);
  } else {
    GeoSweepSpec spec;
    std::tie(spec.a_lo, spec.a_hi) = parse_range(a_range);
    std::tie(spec.r_lo, spec.r_hi) = parse_range(r_range);
    std::tie(spec.h_lo, spec.h_hi) = parse_range(h_range);
    std::tie(spec.n_lo, spec.n_hi) = parse_range(n_range);
    if (d_range == "auto") {
      spec.d_auto = true;
    } else {
      spec.d_auto = false;
      std::tie(spec.d_lo, spec.d_hi) = parse_range(d_range);
    }
    params["a"] = a_range;
    params["d"] = d_range;
    params["r"] = r_range;
    params["h"] = h_range;
    params["n"] = n_range;
    outcome = sweep_geo(spec, threads);
  }

  int rc = 0;
  if (out.format == "json") {
    rc = emit_json(out, params, render::sweep_json(outcome),
                   outcome.all_records());
  } else if (out.format == "csv") {
    std::cerr << "numsem: csv output is only defined for tables\n";
    return 2;
  } else {
    std::ostringstream text;
    text << "family: " << family << "\n";
    text << "instances: " << outcome.total << "  passed: " << outcome.passed
         << "  failed: " << outcome.failed << "  skipped: " << outcome.skipped
         << "\n";
    std::size_t fatal_count = 0;
    std::map<std::string, std::size_t> by_claim;
    for (const auto& rep : outcome.reports) {
      for (const auto& rec : rep.records) {
        by_claim[rec.claim] += 1;
        if (rec.fatal) ++fatal_count;
      }
    }
    text << "records: fatal " << fatal_count << "\n";
    for (const auto& [claim, count] : by_claim) {
      text << "  " << claim << " x" << count << "\n";
    }
    std::size_t shown = 0;
    for (const auto& rep : outcome.reports) {
      for (const auto& rec : rep.records) {
        if (!rec.fatal) continue;
        if (++shown > 50) break;
        text << render::record_text(rec) << "\n";
      }
    }
    for (const auto& note : outcome.notes) text << "skipped: " << note << "\n";
    rc = out.write(text.str());
  }
  if (rc != 0) return rc;
  return outcome.failed > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup invariants: oracle engine, closed forms, sweeps"};
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out.path, "write output to a file instead of stdout");

  auto* core = app.add_subcommand("core", "oracle operations on any semigroup");
  std::string core_gens, core_what;
  Int core_wrt = 0, core_of = -1;
  core->add_option("--gens", core_gens, "comma-separated generators")->required();
  core->add_option("what", core_what, "operation")
      ->required()
      ->check(CLI::IsMember(
          {"apery", "frobenius", "pf", "table", "factorizations", "betti"}));
  core->add_option("--wrt", core_wrt, "Apery modulus (default: multiplicity)");
  core->add_option("--of", core_of, "element to factor");

  auto* g4 = app.add_subcommand("gamma4", "closed forms for the arithmetic family");
  Int g4_a = 0, g4_d = 0;
  std::string g4_what;
  bool g4_verify = false, g4_omega = false;
  g4->add_option("--a", g4_a, "multiplicity a >= 7")->required();
  g4->add_option("--d", g4_d, "progression difference")->required();
  g4->add_option("what", g4_what, "what to emit")
      ->required()
      ->check(CLI::IsMember({"apery", "pf", "frobenius", "table", "hilbert",
                             "tk", "ideal", "resolution", "all"}));
  g4->add_flag("--verify", g4_verify, "cross-check against the oracle engine");
  g4->add_flag("--omega-convention", g4_omega,
               "list pseudo-Frobenius data as raw Apery elements omega(i)");

  auto* geo = app.add_subcommand("geo", "closed forms for the geometric family");
  geo->set_help_flag("--help", "print help");  // frees --h for the family parameter
  Int geo_a = 0, geo_d = 0, geo_r = 0, geo_h = 0, geo_n = 0;
  std::string geo_what;
  bool geo_verify = false;
  geo->add_option("--a", geo_a)->required();
  geo->add_option("--d", geo_d)->required();
  geo->add_option("--r", geo_r)->required();
  geo->add_option("--h", geo_h)->required();
  geo->add_option("--n", geo_n)->required();
  geo->add_option("what", geo_what, "what to emit")
      ->required()
      ->check(CLI::IsMember({"apery", "table", "hilbert"}));
  geo->add_flag("--verify", geo_verify, "cross-check against the oracle engine");

  auto* sweep = app.add_subcommand("sweep", "grid verification runs");
  sweep->set_help_flag("--help", "print help");  // frees --h for the geo range
  std::string sw_family;
  std::string sw_a, sw_d, sw_r = "2..3", sw_h = "1..2", sw_n = "1..3";
  bool sw_ideal = false;
  unsigned sw_threads = 0;
  sweep->add_option("family", sw_family)->required()
      ->check(CLI::IsMember({"gamma4", "geo"}));
  sweep->add_option("--a", sw_a, "range lo..hi");
  sweep->add_option("--d", sw_d, "range lo..hi, or auto (geo)");
  sweep->add_option("--r", sw_r, "range lo..hi");
  sweep->add_option("--h", sw_h, "range lo..hi");
  sweep->add_option("--n", sw_n, "range lo..hi");
  sweep->add_flag("--ideal", sw_ideal, "include ideal and resolution checks");
  sweep->add_option("--threads", sw_threads, "worker count (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (core->parsed()) {
      return run_core(out, core_gens, core_what, core_wrt, core_of);
    }
    if (g4->parsed()) {
      return run_gamma4(out, g4_a, g4_d, g4_what, g4_verify, g4_omega);
    }
    if (geo->parsed()) {
      return run_geo(out, geo_a, geo_d, geo_r, geo_h, geo_n, geo_what,
                     geo_verify);
    }
    if (sweep->parsed()) {
      if (sw_a.empty()) sw_a = sw_family == "gamma4" ? "7..50" : "7..30";
      if (sw_d.empty()) sw_d = sw_family == "gamma4" ? "1..40" : "auto";
      return run_sweep(out, sw_family, sw_a, sw_d, sw_r, sw_h, sw_n, sw_ideal,
                       sw_threads);
    }
  } catch (const std::exception& e) {
    std::cerr << "numsem: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
