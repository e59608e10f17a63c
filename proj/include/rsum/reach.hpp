#ifndef RSUM_REACH_HPP
#define RSUM_REACH_HPP

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "rsum/closure.hpp"
#include "rsum/network.hpp"

namespace rsum {

// Componentwise cap on explored states.
struct StateBox {
  Vec upper;

  bool contains(const Vec& x) const {
    return is_nonneg(x) && leq(x, upper);
  }
};

// x + net(r) when x >= reactant(r), otherwise blocked.
std::optional<Vec> fire(const Vec& x, const Reaction& r);

// Every prefix firing succeeds. Equivalent to x >= reactant of the
// sequence sum; the equivalence is asserted in debug builds.
bool is_active_sequence(const Vec& x, std::span<const Reaction> rs);

struct LeadsToResult {
  bool reachable = false;
  std::vector<std::size_t> witness;  // reaction indices, first found in BFS
  bool frontier_clipped = false;     // some successor exceeded the box

  // a NO is only valid within the box
  bool no_within_box() const { return !reachable; }
};

LeadsToResult leads_to(const std::vector<Reaction>& reactions, const Vec& x,
                       const Vec& target, const StateBox& box);
inline LeadsToResult leads_to(const ReactionNetwork& net, const Vec& x,
                              const Vec& target, const StateBox& box) {
  return leads_to(net.reactions(), x, target, box);
}

struct ReachResult {
  std::set<Vec> states;
  bool frontier_clipped = false;
};

ReachResult reachable_set(const std::vector<Reaction>& reactions, const Vec& x,
                          const StateBox& box);
inline ReachResult reachable_set(const ReactionNetwork& net, const Vec& x,
                                 const StateBox& box) {
  return reachable_set(net.reactions(), x, box);
}

// Some (y,y') in the closure has x >= y and target - x = y' - y.
bool leads_to_via_closure(const ClosureSet& closure, const Vec& x,
                          const Vec& target);

struct IdentityVerdict {
  bool identical = true;
  bool clipped = false;
  std::optional<Vec> witness_state;   // reach sets differ from this state
  std::optional<Vec> witness_target;  // reachable in exactly one network
};

// Box-restricted comparison of reachable sets from every state in the box.
IdentityVerdict structurally_identical(const ReactionNetwork& net1,
                                       const ReactionNetwork& net2,
                                       const StateBox& box);

struct SymmetryVerdict {
  bool symmetric = true;
  bool clipped = false;
  // x leads to x' within the box but not back
  std::optional<std::pair<Vec, Vec>> witness;
};

// Box-restricted symmetry of the reachability relation (the reachability
// characterization of essential). Implemented by SCC condensation of the
// in-box firing graph: the relation is symmetric iff no edge crosses
// components.
SymmetryVerdict essential_by_symmetry(const std::vector<Reaction>& reactions,
                                      const StateBox& box);
inline SymmetryVerdict essential_by_symmetry(const ReactionNetwork& net,
                                             const StateBox& box) {
  return essential_by_symmetry(net.reactions(), box);
}

// Odometer over all states with 0 <= x <= upper, ascending canonical order.
void for_each_in_box(const Vec& upper,
                     const std::function<void(const Vec&)>& fn);

}  // namespace rsum

#endif
