#include "rsum/sim.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "rsum/reach.hpp"

namespace rsum {

namespace {

constexpr const char* kRngId = "mt19937_64/inverse-cdf";

// uniform in [0,1) from the top 53 bits of a raw draw
double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

void validate(const ReactionNetwork& net, const RateAssignment& rates) {
  if (rates.rates.size() != net.reactions().size())
    throw ValidationError("rate table size differs from reaction count");
  for (double k : rates.rates)
    if (!(k > 0.0) || !std::isfinite(k))
      throw ValidationError("rate constants must be positive and finite");
}

double propensity(const Vec& x, const Reaction& r, double kappa) {
  require_same_dim(x, r.reactant);
  if (!leq(r.reactant, x)) return 0.0;
  Coord ff = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (Coord v = x[i]; v > x[i] - r.reactant[i]; --v)
      ff = checked_mul(ff, v);
  }
  double p = kappa * static_cast<double>(ff);
  if (!std::isfinite(p)) throw OverflowError("propensity overflow");
  return p;
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step over seed + index
  std::uint64_t z = seed + index * 0x9e3779b97f4a7c15ull + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Trajectory simulate(const ReactionNetwork& net, const RateAssignment& rates,
                    const Vec& x0, double t_max, std::size_t max_jumps,
                    std::uint64_t seed) {
  validate(net, rates);
  if (x0.size() != net.dimension())
    throw DimensionMismatch("simulate: initial state dimension mismatch");
  if (!is_nonneg(x0))
    throw ValidationError("simulate: initial state must be nonnegative");

  Trajectory traj;
  traj.initial = x0;
  traj.seed = seed;
  traj.rng_id = kRngId;

  std::mt19937_64 gen(seed);
  Vec x = x0;
  double t = 0.0;
  const auto& reactions = net.reactions();
  std::vector<double> props(reactions.size());

  while (traj.jumps.size() < max_jumps) {
    double total = 0.0;
    for (std::size_t k = 0; k < reactions.size(); ++k) {
      props[k] = propensity(x, reactions[k], rates.rates[k]);
      total += props[k];
    }
    if (total <= 0.0) {
      traj.stop = StopReason::Absorbed;
      return traj;
    }
    double u = uniform01(gen);
    t += -std::log1p(-u) / total;
    if (t > t_max) {
      traj.stop = StopReason::TimeLimit;
      return traj;
    }
    double pick = uniform01(gen) * total;
    std::size_t chosen = reactions.size() - 1;
    double acc = 0.0;
    for (std::size_t k = 0; k < reactions.size(); ++k) {
      acc += props[k];
      if (pick < acc) {
        chosen = k;
        break;
      }
    }
    x = add(x, rsum::net(reactions[chosen]));
    traj.jumps.push_back({t, chosen, x});
  }
  traj.stop = StopReason::JumpLimit;
  return traj;
}

ActiveCheckReport empirical_active_check(const ReactionNetwork& net,
                                         const RateAssignment& rates,
                                         const Vec& x0, std::size_t n_runs,
                                         std::size_t jumps_per_run,
                                         std::uint64_t seed) {
  ActiveCheckReport rep;
  const double t_inf = std::numeric_limits<double>::infinity();
  for (std::size_t run = 0; run < n_runs; ++run) {
    Trajectory traj = simulate(net, rates, x0, t_inf, jumps_per_run,
                               derive_stream_seed(seed, run));
    ++rep.runs;
    rep.jumps += traj.jumps.size();
    std::vector<Reaction> prefix;
    prefix.reserve(traj.jumps.size());
    for (const Jump& j : traj.jumps) {
      prefix.push_back(net.reactions()[j.reaction]);
      if (!is_active_sequence(x0, prefix)) ++rep.violations;
    }
  }
  return rep;
}

}  // namespace rsum
