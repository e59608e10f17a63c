#ifndef RSUM_SEMILINEAR_HPP
#define RSUM_SEMILINEAR_HPP

#include <optional>
#include <vector>

#include "rsum/closure.hpp"
#include "rsum/reach.hpp"

namespace rsum {

// L(b, p) = { b + sum lambda_i p_i : lambda in N0^k }. Periods are
// restricted to nonzero nonnegative vectors, which makes membership
// decidable by bounded search.
struct LinearSet {
  Vec base;
  std::vector<Vec> periods;
};

void validate(const LinearSet& s);

struct SemiLinearSet {
  std::vector<LinearSet> components;  // empty list denotes the empty set
};

void validate(const SemiLinearSet& s);

bool contains(const LinearSet& s, const Vec& v);
bool contains(const SemiLinearSet& s, const Vec& v);

// Multiplicities lambda with v = b + sum lambda_i p_i, lexicographically
// first, if any.
std::optional<Vec> member_witness(const LinearSet& s, const Vec& v);

// The slice { (a,b) in s : a = x } for a set of even dimension 2n, built
// by the constructive route: periods with nontrivial projection onto the
// first n coordinates are enumerated into a finite anchor set, periods
// with zero projection are kept.
SemiLinearSet slice(const SemiLinearSet& s, const Vec& x);

struct ClosureSemilinearReport {
  bool closure_subset = true;   // every closure element lies in s
  bool box_converse = true;     // every s-member in the box is in the closure
  std::optional<Reaction> escapee;  // closure element outside s
  std::optional<Vec> missing;       // s-member (flat) not in the closure
  bool converse_qualified = false;  // closure not saturated: converse skipped
};

// Checks closure elements against a semi-linear description, both ways;
// the converse direction runs over the given 2n-dimensional box and only
// when the closure enumeration is saturated.
ClosureSemilinearReport check_closure_in_semilinear(const ClosureSet& closure,
                                                    const SemiLinearSet& s,
                                                    const StateBox& box2n);

}  // namespace rsum

#endif
