#include "parthodge/json_io.hpp"

#include <string>

namespace parthodge {

void to_json(nlohmann::json& j, const DistinctPartition& p)
{
    j = nlohmann::json{{"kind", "distinct"}, {"parts", p.parts()}};
}

void to_json(nlohmann::json& j, const BlockPartition& p)
{
    auto blocks = nlohmann::json::array();
    for (const auto& b : p.blocks()) blocks.push_back({b.part, b.multiplicity});
    j = nlohmann::json{{"kind", "ordinary"}, {"blocks", std::move(blocks)}};
}

void to_json(nlohmann::json& j, const TruncatedSeries& s)
{
    auto coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
    j = nlohmann::json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

void to_json(nlohmann::json& j, const HodgeReport& r)
{
    auto harmonic = nlohmann::json::object();
    auto counts = nlohmann::json::object();
    for (int l = 1; l <= r.max_length(); ++l) {
        counts[std::to_string(l)] = r.counts[l];
        if (!r.harmonic[l].empty()) harmonic[std::to_string(l)] = r.harmonic[l];
    }
    auto pairs = nlohmann::json::array();
    for (const auto& [sigma, image] : r.pairs) pairs.push_back({sigma, image});
    j = nlohmann::json{{"n", r.n},
                       {"kind", to_string(r.kind)},
                       {"chi", r.euler_characteristic},
                       {"harmonic", std::move(harmonic)},
                       {"pairs", std::move(pairs)},
                       {"counts", std::move(counts)}};
}

}  // namespace parthodge
