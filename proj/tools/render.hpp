#pragma once

#include <string>

#include "json.hpp"
#include "numsem/gamma4.hpp"
#include "numsem/geo.hpp"
#include "numsem/ideal.hpp"
#include "numsem/tangent_cone.hpp"
#include "numsem/verify.hpp"

namespace numsem::render {

using Json = nlohmann::ordered_json;

Json apery_json(const AperySet& ap);
Json table_json(const AperyTable& t);
Json factorizations_json(const std::vector<Factorization>& fs);
Json gamma4_apery_json(const std::vector<Gamma4AperyEntry>& entries);
Json geo_apery_json(const std::vector<GeoAperyEntry>& entries);
Json hilbert_json(const HilbertSeries& h);
Json decomposition_json(const CZDecomposition& d);
Json gorenstein_json(const GorensteinReport& g);
Json binomials_json(const std::vector<Binomial>& gens);
Json matrix_json(const PolyMatrix& m);
Json resolution_json(const ResolutionMatrices& r, Int q);
Json record_json(const DiscrepancyRecord& r);
Json records_json(const std::vector<DiscrepancyRecord>& rs);
Json sweep_json(const SweepOutcome& s);

/// rows = s, columns = residues; header row "s,0,1,...,a-1".
std::string table_csv(const AperyTable& t);

std::string table_text(const AperyTable& t);
std::string record_text(const DiscrepancyRecord& r);

}  // namespace numsem::render
