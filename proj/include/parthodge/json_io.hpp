#ifndef PARTHODGE_JSON_IO_HPP
#define PARTHODGE_JSON_IO_HPP

#include <json.hpp>

#include "parthodge/hodge.hpp"
#include "parthodge/partitions.hpp"
#include "parthodge/qseries.hpp"

/* ADL hooks for nlohmann::json. Shapes:
 *   distinct   {"kind":"distinct","parts":[4,2,1]}
 *   ordinary   {"kind":"ordinary","blocks":[[3,3],[2,2]]}
 *   series     {"order":4,"coeffs":["1","-1","-1","0","0"]}   (decimal strings)
 *   report     {"n":4,"kind":"ordinary","chi":1,"harmonic":{"2":["2^2"]},
 *               "pairs":[["4","3,1"]],"counts":{"1":1,...}}
 */
namespace parthodge {

void to_json(nlohmann::json& j, const DistinctPartition& p);
void to_json(nlohmann::json& j, const BlockPartition& p);
void to_json(nlohmann::json& j, const TruncatedSeries& s);
void to_json(nlohmann::json& j, const HodgeReport& r);

}  // namespace parthodge

#endif
