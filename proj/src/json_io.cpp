#include "rsum/json_io.hpp"

#include "rsum/parser.hpp"

namespace rsum {

json envelope(const std::string& kind, json payload) {
  json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = kind;
  out["result"] = std::move(payload);
  return out;
}

json vec_json(const Vec& v) { return json(v); }

json reaction_json(const Reaction& r, const std::vector<std::string>& names) {
  json out;
  out["reactant"] = r.reactant;
  out["product"] = r.product;
  if (!names.empty()) out["text"] = print_reaction(r, names);
  return out;
}

json reactions_json(const std::vector<Reaction>& rs,
                    const std::vector<std::string>& names) {
  json out = json::array();
  for (const Reaction& r : rs) out.push_back(reaction_json(r, names));
  return out;
}

json network_json(const ReactionNetwork& net) {
  json out;
  out["species"] = net.species_names();
  out["reactions"] = reactions_json(net.reactions(), net.species_names());
  return out;
}

json closure_json(const ClosureSet& c, const std::vector<std::string>& names) {
  json out;
  out["elements"] = json::array();
  for (const Reaction& r : c.elements)
    out["elements"].push_back(reaction_json(r, names));
  out["saturated"] = c.saturated;
  out["max_summands"] = c.config.max_summands;
  if (c.config.coord_cap)
    out["coord_cap"] = *c.config.coord_cap;
  else
    out["coord_cap"] = nullptr;
  return out;
}

json reach_json(const ReachResult& r) {
  json out;
  out["states"] = json::array();
  for (const Vec& s : r.states) out["states"].push_back(s);
  out["count"] = r.states.size();
  out["frontier_clipped"] = r.frontier_clipped;
  return out;
}

json leads_to_json(const LeadsToResult& r) {
  json out;
  out["verdict"] = r.reachable ? "YES" : "NO_WITHIN_BOX";
  out["witness"] = r.witness;
  out["frontier_clipped"] = r.frontier_clipped;
  return out;
}

json eliminable_json(const EliminableVerdict& v,
                     const std::vector<std::string>& names) {
  json out;
  switch (v.kind) {
    case EliminableKind::TrueExact:
      out["verdict"] = "TRUE_EXACT";
      break;
    case EliminableKind::TrueUpToBound:
      out["verdict"] = "TRUE_UP_TO_BOUND";
      break;
    case EliminableKind::FalseExact:
      out["verdict"] = "FALSE_EXACT";
      break;
    case EliminableKind::CandidateCounterexample:
      out["verdict"] = "CANDIDATE_COUNTEREXAMPLE";
      break;
  }
  out["qualification"] = v.qualification();
  out["used_token_graph"] = v.used_token_graph;
  if (!v.stuck_tokens.empty()) {
    json stuck = json::array();
    for (std::size_t t : v.stuck_tokens)
      stuck.push_back(names.empty() ? std::to_string(t) : names.at(t));
    out["stuck_tokens"] = stuck;
  }
  if (v.counterexample) {
    out["counterexample"] = {
        {"r0", reaction_json(v.counterexample->first, names)},
        {"r1", reaction_json(v.counterexample->second, names)}};
  }
  return out;
}

json reduced_json(const ReducedNetwork& red,
                  const std::vector<std::string>& names) {
  json out;
  out["base"] = reactions_json(red.base, names);
  out["generated"] = reactions_json(red.generated, names);
  out["truncated"] = red.truncated;
  json derivs = json::array();
  for (const Derivation& d : red.derivations) {
    json dj;
    dj["initial"] = reaction_json(d.initial, names);
    dj["fast_sequence"] = reactions_json(d.fast_sequence, names);
    derivs.push_back(std::move(dj));
  }
  out["derivations"] = std::move(derivs);
  return out;
}

json star_json(const StarConditionReport& rep,
               const std::vector<std::string>& names) {
  json out;
  out["holds"] = rep.holds();
  out["qualification"] = rep.qualification();
  out["first_clause"] = rep.first_clause;
  out["inverted_entries"] = reactions_json(rep.lhs, names);
  out["fast_minus_producers"] = reactions_json(rep.rhs, names);
  out["second_clause_essential"] = rep.second_clause.holds();
  out["second_clause_qualification"] = rep.second_clause.qualification();
  return out;
}

json reversibility_json(const ReversibilityReport& rep) {
  json out;
  out["star_holds"] = rep.star.holds();
  out["star_qualification"] = rep.star.qualification();
  out["union_reversible"] = rep.union_reversible;
  out["r0_reversible"] = rep.r0_reversible;
  out["r0_weakly_reversible"] = rep.r0_weakly_reversible;
  out["generated_reversible"] = rep.generated_reversible;
  out["reduced_reversible"] = rep.reduced_reversible;
  out["reduced_weakly_reversible"] = rep.reduced_weakly_reversible;
  out["truncated"] = rep.truncated;
  if (rep.f0_union_weakly_reversible)
    out["f0_union_weakly_reversible"] = *rep.f0_union_weakly_reversible;
  out["violations"] = rep.violations;
  return out;
}

json reach_preservation_json(const ReachPreservationReport& rep) {
  json out;
  out["forward_expansion_ok"] = rep.forward_expansion_ok;
  out["expansions_checked"] = rep.expansions_checked;
  out["reduced_subset_of_original"] = rep.reduced_subset_of_original;
  out["equality"] = rep.equality;
  out["clause2_hypotheses"] = rep.clause2_hypotheses;
  out["pairs_checked"] = rep.pairs_checked;
  json gaps = json::array();
  for (const auto& [x, t] : rep.only_in_original)
    gaps.push_back({{"from", x}, {"to", t}});
  out["only_in_original"] = std::move(gaps);
  json extra = json::array();
  for (const auto& [x, t] : rep.only_in_reduced)
    extra.push_back({{"from", x}, {"to", t}});
  out["only_in_reduced"] = std::move(extra);
  return out;
}

json trajectory_json(const Trajectory& t) {
  json out;
  out["initial"] = t.initial;
  out["seed"] = t.seed;
  out["rng"] = t.rng_id;
  switch (t.stop) {
    case StopReason::Absorbed:
      out["stop"] = "absorbed";
      break;
    case StopReason::TimeLimit:
      out["stop"] = "time_limit";
      break;
    case StopReason::JumpLimit:
      out["stop"] = "jump_limit";
      break;
  }
  json jumps = json::array();
  for (const Jump& j : t.jumps)
    jumps.push_back({{"time", j.time}, {"reaction", j.reaction},
                     {"state", j.state}});
  out["jumps"] = std::move(jumps);
  return out;
}

json semilinear_to_json(const SemiLinearSet& s) {
  json comps = json::array();
  for (const LinearSet& c : s.components) {
    json periods = json::array();
    for (const Vec& p : c.periods) periods.push_back(p);
    comps.push_back({{"base", c.base}, {"periods", std::move(periods)}});
  }
  json out;
  out["components"] = std::move(comps);
  return out;
}

SemiLinearSet semilinear_from_json(const json& j) {
  const json& root = j.contains("components")
                         ? j
                         : (j.contains("result") ? j["result"] : j);
  if (!root.contains("components"))
    throw ValidationError("semi-linear JSON: missing 'components'");
  SemiLinearSet out;
  for (const json& comp : root["components"]) {
    LinearSet c;
    c.base = comp.at("base").get<Vec>();
    for (const json& p : comp.at("periods")) c.periods.push_back(p.get<Vec>());
    out.components.push_back(std::move(c));
  }
  validate(out);
  return out;
}

}  // namespace rsum
