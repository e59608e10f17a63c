#ifndef RSUM_CLOSURE_HPP
#define RSUM_CLOSURE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsum/reaction.hpp"

namespace rsum {

// Bounds for closure enumeration. max_summands caps the sequence length;
// coord_cap, when present, caps every coordinate of every prefix partial
// sum (left-fold intermediates).
struct ClosureConfig {
  std::size_t max_summands = 16;
  std::optional<Coord> coord_cap;

  bool operator==(const ClosureConfig&) const = default;
};

// Enumerated fragment of cl(A). saturated means one more summand adds no
// new element; with a coordinate cap this certifies only the capped
// fragment.
struct ClosureSet {
  std::set<Reaction> elements;
  ClosureConfig config;
  bool saturated = false;
  std::size_t dimension = 0;

  bool contains(const Reaction& r) const { return elements.count(r) > 0; }
};

ClosureSet closure(const std::vector<Reaction>& a, std::size_t dim,
                   const ClosureConfig& cfg);

// Same enumeration, but each element keeps one shortest generating
// sequence over A.
struct ClosureWithDerivations {
  std::map<Reaction, std::vector<Reaction>> elements;
  ClosureConfig config;
  bool saturated = false;
};

ClosureWithDerivations closure_with_derivations(const std::vector<Reaction>& a,
                                                std::size_t dim,
                                                const ClosureConfig& cfg);

// Closed under inverse.
bool is_reversible(const std::vector<Reaction>& a);

// Every element can be undone by a chained sum within the set. The chain
// requirement makes this a path query on the digraph whose nodes are the
// complexes of A and whose edges are the elements of A.
bool is_weakly_reversible(const std::vector<Reaction>& a);

// Chain of elements of A whose chained sum equals inverse(r), if one
// exists. Deterministic: shortest chain, BFS in canonical edge order.
std::optional<std::vector<Reaction>> weak_reversibility_witness(
    const std::vector<Reaction>& a, const Reaction& r);

// Is target a nonnegative *rational* combination of the generators?
// Exact arithmetic; used as a sound pre-filter: a reaction whose negated
// net lies outside this cone can never be inverted by any finite sum.
bool rational_cone_contains(const std::vector<Vec>& generators,
                            const Vec& target);

enum class EssentialKind { TrueExact, TrueUpToBound, Counterexample };

struct EssentialVerdict {
  EssentialKind kind = EssentialKind::TrueUpToBound;
  std::optional<Reaction> counterexample;
  // Counterexample certified by the net-cone pre-filter (no bound caveat).
  bool counterexample_exact = false;

  bool holds() const { return kind != EssentialKind::Counterexample; }
  std::string qualification() const;
};

// Decides whether cl(A) is reversible, up to the given enumeration bounds.
// Reversible or weakly reversible inputs short-circuit to an exact TRUE.
EssentialVerdict is_essential_bounded(const std::vector<Reaction>& a,
                                      std::size_t dim,
                                      const ClosureConfig& cfg,
                                      const ClosureConfig& inverse_cfg);

}  // namespace rsum

#endif
