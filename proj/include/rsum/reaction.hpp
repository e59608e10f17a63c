#ifndef RSUM_REACTION_HPP
#define RSUM_REACTION_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "rsum/vec.hpp"

namespace rsum {

// An ordered pair (reactant, product) of nonnegative count vectors.
// The default three-way comparison gives the canonical total order:
// lexicographic on the reactant, then on the product.
struct Reaction {
  Vec reactant;
  Vec product;

  Reaction() = default;
  Reaction(Vec y, Vec yp) : reactant(std::move(y)), product(std::move(yp)) {}

  std::size_t dimension() const { return reactant.size(); }

  auto operator<=>(const Reaction&) const = default;
};

// Identity element (0,0) of the given dimension.
inline Reaction identity_reaction(std::size_t n) {
  return Reaction(zero_vec(n), zero_vec(n));
}

// The sum of two reactions fired in succession:
//   y  = y1 + 0 v (y2 - y1')
//   y' = y2' + 0 v (y1' - y2)
Reaction oplus(const Reaction& r1, const Reaction& r2);

// Signed net gain: product - reactant.
Vec net(const Reaction& r);

// True iff the two reactions have the same net gain.
bool equivalent(const Reaction& r1, const Reaction& r2);

inline bool is_net_zero(const Reaction& r) { return r.reactant == r.product; }

// (y, y') -> (y', y)
inline Reaction inverse(const Reaction& r) {
  return Reaction(r.product, r.reactant);
}

// Left fold by oplus; the empty sequence gives (0,0).
Reaction sum_sequence(std::span<const Reaction> rs, std::size_t dim);

// Right cancellation r1 (+) r2 = r1~ (+) r2 => r1 = r1~ is valid when the
// reactant of r2 is strictly below the product of r1 in every component.
inline bool right_cancel_valid(const Reaction& r2, const Reaction& r1) {
  return ll(r2.reactant, r1.product);
}

// Left cancellation r2 (+) r1 = r2 (+) r1~ => r1 = r1~, valid when the
// product of r2 is strictly below the reactant of r1 in every component
// (the mirror of the right-hand condition under inversion).
inline bool left_cancel_valid(const Reaction& r2, const Reaction& r1) {
  return ll(r2.product, r1.reactant);
}

struct ReactionHash {
  std::size_t operator()(const Reaction& r) const noexcept {
    VecHash h;
    return h(r.reactant) * 1000003u ^ h(r.product);
  }
};

// Reaction as a flat 2n-vector (reactant then product), the embedding used
// for semi-linear membership.
Vec flatten(const Reaction& r);
Reaction unflatten(const Vec& v);

}  // namespace rsum

#endif
