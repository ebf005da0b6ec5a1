#include "render.hpp"

#include <map>
#include <sstream>

namespace numsem::render {

Json apery_json(const AperySet& ap) {
  return Json{{"modulus", ap.modulus}, {"elements", ap.elements}};
}

Json table_json(const AperyTable& t) {
  return Json{{"modulus", t.modulus},
              {"reduction_number", t.reduction_number()},
              {"rows", t.rows}};
}

Json factorizations_json(const std::vector<Factorization>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) {
    out.push_back(Json{{"exponents", f.exponents}, {"length", f.length()}});
  }
  return out;
}

Json gamma4_apery_json(const std::vector<Gamma4AperyEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back(Json{{"i", e.i}, {"mu", e.mu}, {"nu", e.nu}, {"xi", e.xi},
                       {"omega", e.omega}});
  }
  return out;
}

Json geo_apery_json(const std::vector<GeoAperyEntry>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) {
    out.push_back(Json{{"i", e.i}, {"ell", e.ell}, {"omega", e.omega}});
  }
  return out;
}

Json hilbert_json(const HilbertSeries& h) {
  return Json{{"numerator", h.numerator}, {"denominator", "1-x"}};
}

Json decomposition_json(const CZDecomposition& d) {
  Json torsion = Json::array();
  for (const auto& t : d.torsion) {
    torsion.push_back(Json{{"shift", t.shift}, {"length", t.length}});
  }
  return Json{{"free_shifts", d.free_shifts},
              {"torsion", torsion},
              {"cohen_macaulay", is_tangent_cone_cm(d)},
              {"buchsbaum", is_tangent_cone_cm(d)}};
}

Json gorenstein_json(const GorensteinReport& g) {
  Json per = Json::array();
  for (const auto& [n, ok] : g.per_power) {
    per.push_back(Json{{"n", n}, {"holds", ok}});
  }
  return Json{{"per_power", per}, {"overall", g.overall}};
}

namespace {

Json term_json(const Monomial& m, Int coefficient) {
  return Json{{"exponents", m.exponents}, {"coefficient", coefficient}};
}

Json polynomial_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    out.push_back(term_json(mono, coeff));
  }
  return out;
}

}  // namespace

Json binomials_json(const std::vector<Binomial>& gens) {
  Json out = Json::array();
  for (const Binomial& b : gens) {
    out.push_back(Json::array({term_json(b.plus, 1), term_json(b.minus, -1)}));
  }
  return out;
}

Json matrix_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(polynomial_json(m.at(r, c)));
    }
    out.push_back(row);
  }
  return out;
}

Json resolution_json(const ResolutionMatrices& r, Int q) {
  return Json{{"betti", betti_signature(q)},
              {"phi1", matrix_json(r.phi1)},
              {"phi2", matrix_json(r.phi2)},
              {"phi3", matrix_json(r.phi3)}};
}

Json record_json(const DiscrepancyRecord& r) {
  return Json{{"params", r.params},
              {"claim", r.claim},
              {"computed", r.computed},
              {"expected", r.expected},
              {"fatal", r.fatal}};
}

Json records_json(const std::vector<DiscrepancyRecord>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(record_json(r));
  return out;
}

Json sweep_json(const SweepOutcome& s) {
  Json by_claim = Json::object();
  std::map<std::string, Int> counts;
  for (const auto& rep : s.reports) {
    for (const auto& rec : rep.records) counts[rec.claim] += 1;
  }
  for (const auto& [claim, count] : counts) by_claim[claim] = count;
  return Json{{"total", s.total},       {"passed", s.passed},
              {"failed", s.failed},     {"skipped", s.skipped},
              {"records_by_claim", by_claim}, {"notes", s.notes}};
}

std::string table_csv(const AperyTable& t) {
  std::ostringstream os;
  os << "s";
  for (Int r = 0; r < t.modulus; ++r) os << "," << r;
  os << "\n";
  for (std::size_t s = 0; s < t.rows.size(); ++s) {
    os << s;
    for (Int v : t.rows[s]) os << "," << v;
    os << "\n";
  }
  return os.str();
}

std::string table_text(const AperyTable& t) {
  std::ostringstream os;
  os << "reduction number: " << t.reduction_number() << "\n";
  for (std::size_t s = 0; s < t.rows.size(); ++s) {
    os << "row " << s << ":";
    for (Int v : t.rows[s]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

std::string record_text(const DiscrepancyRecord& r) {
  std::ostringstream os;
  os << (r.fatal ? "MISMATCH " : "note     ") << r.params << " " << r.claim
     << ": computed " << r.computed << ", expected " << r.expected;
  return os.str();
}

}  // namespace numsem::render
