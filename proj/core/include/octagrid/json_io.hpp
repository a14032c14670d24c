#pragma once

// JSON interchange for labelings, reports and certificates. Key order is
// fixed (ordered_json) so identical inputs produce byte-identical output.

#include <string>

#include <json.hpp>

#include "octagrid/labeling.hpp"
#include "octagrid/lemmas.hpp"
#include "octagrid/solver.hpp"

namespace octagrid {

using Json = nlohmann::ordered_json;

// { "h": int, "k": int, "edges": [ { "a": [x,y], "b": [x,y], "color": int } ] }
Json labeling_to_json(const Labeling& lab);
Labeling labeling_from_json(const Json& j);

// { "h": int, "k": int, "period": [px,py],
//   "labels": [ { "anchor": [x,y], "class": "H"|"V"|"R"|"L", "color": int } ] }
Json periodic_to_json(const PeriodicLabeling& plab);
PeriodicLabeling periodic_from_json(const Json& j);

/// True iff the document carries a periodic labeling (has a "period" key).
bool is_periodic_document(const Json& j);

Json violations_to_json(const ViolationReport& report);
Json lemma_report_to_json(const LemmaReport& report);
Json audit_to_json(const PigeonholeAudit& audit);
Json certificate_to_json(const SearchCertificate& cert);
Json certificate_to_json(const PeriodicSearchCertificate& cert);
Json min_span_to_json(const MinSpanResult& result);

Json load_json_file(const std::string& path);          // throws on parse errors
void save_json_file(const std::string& path, const Json& j);

}  // namespace octagrid
