#ifndef RSUM_SIM_HPP
#define RSUM_SIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rsum/network.hpp"

namespace rsum {

// Positive per-reaction rate constants, parallel to the network's
// canonical reaction order.
struct RateAssignment {
  std::vector<double> rates;
};

void validate(const ReactionNetwork& net, const RateAssignment& rates);

// Stochastic mass-action intensity: kappa * x!/(x-y)! when x >= y, else 0.
// The falling factorial is computed in checked integer arithmetic.
double propensity(const Vec& x, const Reaction& r, double kappa);

struct Jump {
  double time;
  std::size_t reaction;  // index into the network's canonical order
  Vec state;             // post-jump state
};

enum class StopReason { Absorbed, TimeLimit, JumpLimit };

struct Trajectory {
  Vec initial;
  std::vector<Jump> jumps;
  std::uint64_t seed = 0;
  std::string rng_id;  // generator + sampling scheme identifier
  StopReason stop = StopReason::Absorbed;
};

// Exact next-jump simulation: exponential holding time at the total
// propensity, categorical reaction choice. Reproducible given the seed:
// uniforms are derived from raw mt19937_64 output, not from
// implementation-defined distributions.
Trajectory simulate(const ReactionNetwork& net, const RateAssignment& rates,
                    const Vec& x0, double t_max, std::size_t max_jumps,
                    std::uint64_t seed);

// Stream seed for run `index` of a batch with base seed `seed`.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

struct ActiveCheckReport {
  std::size_t runs = 0;
  std::size_t jumps = 0;
  std::size_t violations = 0;  // observed prefix that is not active

  bool ok() const { return violations == 0; }
};

// Samples trajectories and verifies that every observed reaction prefix is
// an active sequence on the initial state.
ActiveCheckReport empirical_active_check(const ReactionNetwork& net,
                                         const RateAssignment& rates,
                                         const Vec& x0, std::size_t n_runs,
                                         std::size_t jumps_per_run,
                                         std::uint64_t seed);

}  // namespace rsum

#endif
