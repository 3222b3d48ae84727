#include "nilorbit/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace nilorbit {

using nlohmann::json;

json partition_to_json(const Partition& b) { return json(b.parts()); }

Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

json pattern_to_json(const PatternMatrix& p) {
    json entries = json::array();
    for (int r = 0; r < p.n; ++r)
        for (int c = 0; c < p.n; ++c)
            if (!p.is_zero(r, c))
                entries.push_back({{"row", r}, {"col", c}, {"coord", p.coord(r, c)}});
    return json{{"n", p.n},
                {"ordering", p.ordering.kind == OrderKind::DeltaBPrec ? "prec" : "delta"},
                {"entries", entries}};
}

PatternMatrix pattern_from_json(const json& j) {
    PatternMatrix p;
    p.n = j.at("n").get<int>();
    if (p.n < 0) throw std::invalid_argument("pattern: negative dimension");
    p.ordering.kind =
        j.at("ordering").get<std::string>() == "delta" ? OrderKind::DeltaB : OrderKind::DeltaBPrec;
    p.cells.assign(static_cast<size_t>(p.n) * static_cast<size_t>(p.n), -1);
    int32_t max_id = -1;
    for (const json& e : j.at("entries")) {
        const int r = e.at("row").get<int>(), c = e.at("col").get<int>();
        const int32_t id = e.at("coord").get<int32_t>();
        if (r < 0 || r >= p.n || c < 0 || c >= p.n || id < 0)
            throw std::invalid_argument("pattern: entry out of range");
        p.cells[static_cast<size_t>(r) * static_cast<size_t>(p.n) + static_cast<size_t>(c)] = id;
        max_id = std::max(max_id, id);
    }
    p.coordinate_count = max_id + 1;
    return p;
}

void save_pattern(const PatternMatrix& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << pattern_to_json(p).dump(2) << '\n';
}

PatternMatrix load_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    in >> j;
    return pattern_from_json(j);
}

json report_to_json(const VerificationReport& r) {
    json observed = json::array();
    for (const auto& [type, count] : r.observed)
        observed.push_back({{"type", partition_to_json(type)}, {"count", count}});
    json max_observed = json::array();
    for (const Partition& t : r.max_observed) max_observed.push_back(partition_to_json(t));
    return json{{"partition", partition_to_json(r.b)},
                {"prime", r.prime},
                {"samples", r.samples},
                {"q", partition_to_json(r.q)},
                {"observed", observed},
                {"max_observed", max_observed},
                {"attained", r.attained},
                {"violations", r.violations},
                {"seed", r.seed}};
}

json exhaustive_to_json(const ExhaustiveResult& r) {
    json observed = json::array();
    for (const auto& [type, count] : r.observed)
        observed.push_back({{"type", partition_to_json(type)}, {"count", count}});
    return json{{"partition", partition_to_json(r.b)},
                {"prime", r.prime},
                {"total", r.total},
                {"q", partition_to_json(r.q)},
                {"observed", observed},
                {"attained", r.attained},
                {"violations", r.violations}};
}

json trace_level_to_json(const QTraceLevel& level) {
    json cands = json::array();
    for (const OblakCandidate& c : level.level_candidates)
        cands.push_back({{"i", c.i}, {"eps", c.eps}, {"value", c.value}});
    return json{{"b", partition_to_json(level.b)},
                {"candidates", cands},
                {"chosen", {{"i", level.i_tilde}, {"eps", level.eps_tilde}}},
                {"omega1", level.omega1},
                {"b_hat", partition_to_json(level.b_hat)}};
}

}  // namespace nilorbit
