#ifndef RSUM_JSON_IO_HPP
#define RSUM_JSON_IO_HPP

#include <json.hpp>

#include "rsum/closure.hpp"
#include "rsum/reach.hpp"
#include "rsum/reduction.hpp"
#include "rsum/semilinear.hpp"
#include "rsum/sim.hpp"

namespace rsum {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Top-level wrapper carried by every machine-readable output.
json envelope(const std::string& kind, json payload);

json vec_json(const Vec& v);
json reaction_json(const Reaction& r, const std::vector<std::string>& names);
json reactions_json(const std::vector<Reaction>& rs,
                    const std::vector<std::string>& names);

json network_json(const ReactionNetwork& net);

json closure_json(const ClosureSet& c, const std::vector<std::string>& names);
json reach_json(const ReachResult& r);
json leads_to_json(const LeadsToResult& r);

json eliminable_json(const EliminableVerdict& v,
                     const std::vector<std::string>& names);
json reduced_json(const ReducedNetwork& red,
                  const std::vector<std::string>& names);
json star_json(const StarConditionReport& rep,
               const std::vector<std::string>& names);
json reversibility_json(const ReversibilityReport& rep);
json reach_preservation_json(const ReachPreservationReport& rep);

json trajectory_json(const Trajectory& t);

json semilinear_to_json(const SemiLinearSet& s);
SemiLinearSet semilinear_from_json(const json& j);

}  // namespace rsum

#endif
