#ifndef RSUM_REDUCTION_HPP
#define RSUM_REDUCTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsum/closure.hpp"
#include "rsum/network.hpp"
#include "rsum/reach.hpp"

namespace rsum {

struct NotNonInteracting : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotEliminable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (U, F) elimination input plus the search bounds used when U interacts.
struct EliminationSpec {
  SpeciesSet u;
  std::vector<Reaction> fast;  // must be a subset of R_U
  ClosureConfig bounds{16, std::nullopt};
  Coord product_cap = 8;  // per-coordinate cap on enumerated reduced reactions
};

void validate(const ReactionNetwork& net, const EliminationSpec& spec);

// Digraph on the u-species plus an exit node, encoding the single-token
// chain structure of fast-reaction sequences when u is non-interacting:
// each fast reaction consumes exactly one token and produces at most one.
struct TokenGraph {
  static constexpr std::size_t kExit = static_cast<std::size_t>(-1);

  struct Edge {
    std::size_t from;  // species index in u
    std::size_t to;    // species index in u, or kExit
    Reaction via;
  };

  std::vector<std::size_t> tokens;   // sorted u indices
  std::vector<Edge> edges;           // in canonical reaction order
  std::vector<std::size_t> entries;  // tokens produced by R'_U \ R_U

  std::vector<std::size_t> reachable_from_entries() const;
  bool token_can_exit(std::size_t token) const;
};

TokenGraph build_token_graph(const ReactionNetwork& net,
                             const EliminationSpec& spec);

enum class EliminableKind {
  TrueExact,
  TrueUpToBound,
  FalseExact,
  CandidateCounterexample
};

struct EliminableVerdict {
  EliminableKind kind = EliminableKind::TrueExact;
  bool used_token_graph = false;
  // tokens reachable from an entry with no path to exit (token-graph route)
  std::vector<std::size_t> stuck_tokens;
  // (r0, r1) with no r2 found (general route); exact when certified by the
  // net-cone pre-filter
  std::optional<std::pair<Reaction, Reaction>> counterexample;

  bool eliminable() const {
    return kind == EliminableKind::TrueExact ||
           kind == EliminableKind::TrueUpToBound;
  }
  std::string qualification() const;
};

EliminableVerdict is_eliminable(const ReactionNetwork& net,
                                const EliminationSpec& spec);

// How a generated reduced reaction was obtained: initial (+) fold of the
// fast sequence.
struct Derivation {
  Reaction initial;                    // element of R'_U \ R_U
  std::vector<Reaction> fast_sequence; // elements of F
};

struct ReducedNetwork {
  std::vector<Reaction> base;       // R_0
  std::vector<Reaction> generated;  // enumerated R_{U,F}, canonical order
  std::vector<Derivation> derivations;  // parallel to generated (shortest)
  bool truncated = false;
  SpeciesSet u_eliminated;

  // base and generated merged, deduplicated, canonical order
  std::vector<Reaction> all() const;
};

ReducedNetwork reduce(const ReactionNetwork& net, const EliminationSpec& spec,
                      bool force = false);

struct DisjointUnionReport {
  bool applicable = false;  // overlap precondition verified
  std::string detail;
  EliminableVerdict first;
  EliminableVerdict second;
  EliminableVerdict combined;
  bool ok = false;  // combined eliminability confirmed
};

DisjointUnionReport check_disjoint_union_eliminability(
    const ReactionNetwork& net, const SpeciesSet& u1,
    const std::vector<Reaction>& f1, const SpeciesSet& u2,
    const std::vector<Reaction>& f2, const ClosureConfig& bounds,
    Coord product_cap);

struct SequentialReport {
  bool applicable = false;  // non-interacting + disjointness hypotheses
  std::string detail;
  EliminableVerdict stage1;          // u1 in the full network w.r.t. f1
  EliminableVerdict stage2;          // u2 in the reduced network w.r.t. f2
  EliminableVerdict combined;        // u1 u u2 w.r.t. f1 u R_{u2}
  bool stage2_bound_qualified = false;  // stage-2 ran on a truncated reduction
  bool ok = false;
};

SequentialReport check_sequential_eliminability(const ReactionNetwork& net,
                                                const SpeciesSet& u1,
                                                const std::vector<Reaction>& f1,
                                                const SpeciesSet& u2,
                                                const ClosureConfig& bounds,
                                                Coord product_cap);

// (*) condition: (R'_U \ R_U)^{-1} = F \ R'_U, and F n R'_U is essential.
struct StarConditionReport {
  bool first_clause = false;
  std::vector<Reaction> lhs;  // (R'_U \ R_U)^{-1}
  std::vector<Reaction> rhs;  // F \ R'_U
  EssentialVerdict second_clause;

  bool holds() const { return first_clause && second_clause.holds(); }
  bool exact() const {
    return second_clause.kind != EssentialKind::TrueUpToBound;
  }
  std::string qualification() const { return exact() ? "EXACT" : "UP_TO_BOUND"; }
};

StarConditionReport check_star_condition(const ReactionNetwork& net,
                                         const EliminationSpec& spec);

// Evaluation of the reversibility transfer statements on an enumerated
// reduction. Checkable hypotheses are evaluated, conclusions verified on
// the (possibly truncated) enumeration, and any hypothesis-holds-but-
// conclusion-fails case is listed as a violation.
struct ReversibilityReport {
  StarConditionReport star;
  bool union_reversible = false;      // (R'_U \ R_U) u F reversible
  bool r0_reversible = false;
  bool r0_weakly_reversible = false;
  bool generated_reversible = false;
  bool reduced_reversible = false;
  bool reduced_weakly_reversible = false;
  bool truncated = false;
  // user-supplied F0 route: (R \ R_U) u F0 weakly reversible
  std::optional<bool> f0_union_weakly_reversible;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ReversibilityReport reversibility_report(
    const ReactionNetwork& net, const EliminationSpec& spec,
    const ReducedNetwork& reduced,
    const std::optional<std::vector<Reaction>>& f0 = std::nullopt);

struct ReachPreservationReport {
  // every reduced witness sequence expands to an active original sequence
  // with the same endpoints (exact, box-free)
  bool forward_expansion_ok = true;
  std::size_t expansions_checked = 0;
  // box-restricted inclusion / equality on u-free endpoints
  bool reduced_subset_of_original = true;
  bool equality = true;
  bool clause2_hypotheses = false;  // intermediate u and F = R_U
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Vec, Vec>> only_in_original;
  std::vector<std::pair<Vec, Vec>> only_in_reduced;
};

// Explores within `box`; start states and compared endpoints are drawn
// from `endpoint_box` (defaults to `box`). A strict sub-box leaves room
// for transient excursions of either network.
ReachPreservationReport reachability_preservation(
    const ReactionNetwork& net, const EliminationSpec& spec,
    const ReducedNetwork& reduced, const StateBox& box,
    const std::optional<StateBox>& endpoint_box = std::nullopt);

}  // namespace rsum

#endif
