#ifndef NILORBIT_JSON_IO_HPP
#define NILORBIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "nilorbit/centralizer.hpp"
#include "nilorbit/oblak.hpp"
#include "nilorbit/verifier.hpp"

namespace nilorbit {

/// Pattern file schema: { "n": int, "ordering": "prec"|"delta",
///   "entries": [{"row": r, "col": c, "coord": id}, ...] }
/// Ties are implicit through shared coordinate ids.
nlohmann::json pattern_to_json(const PatternMatrix& p);
PatternMatrix pattern_from_json(const nlohmann::json& j);

void save_pattern(const PatternMatrix& p, const std::string& path);
PatternMatrix load_pattern(const std::string& path);

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json exhaustive_to_json(const ExhaustiveResult& r);
nlohmann::json trace_level_to_json(const QTraceLevel& level);

nlohmann::json partition_to_json(const Partition& b);
Partition partition_from_json(const nlohmann::json& j);

}  // namespace nilorbit

#endif
