#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rsum/reach.hpp"
#include "rsum/sim.hpp"

using namespace rsum;
namespace fx = rsum::fixtures;

TEST_CASE("mass-action propensity") {
  CHECK(propensity({3}, Reaction({2}, {0}), 1.0) == doctest::Approx(6.0));
  CHECK(propensity({1}, Reaction({2}, {0}), 1.0) == 0.0);
  CHECK(propensity({5, 7}, Reaction({0, 0}, {1, 0}), 2.5) ==
        doctest::Approx(2.5));
  CHECK(propensity({4, 2}, Reaction({2, 1}, {0, 0}), 0.5) ==
        doctest::Approx(0.5 * 4 * 3 * 2));
}

TEST_CASE("propensity positive exactly when the reactant fits") {
  oracle::Rng rng(71);
  for (int i = 0; i < 5000; ++i) {
    std::size_t n = 1 + rng() % 3;
    Vec x = oracle::random_vec(rng, n, 6);
    Reaction r = oracle::random_reaction(rng, n, 4);
    double p = propensity(x, r, 1.0);
    REQUIRE((p > 0.0) == leq(r.reactant, x));
  }
}

TEST_CASE("rate validation") {
  ReactionNetwork net = fx::single_gene();
  CHECK_THROWS_AS(validate(net, RateAssignment{{1.0}}), ValidationError);
  CHECK_THROWS_AS(validate(net, RateAssignment{{1.0, 1.0, 0.0, 1.0}}),
                  ValidationError);
  CHECK_NOTHROW(validate(net, RateAssignment{{1.0, 2.0, 3.0, 4.0}}));
}

TEST_CASE("pure death absorbs after exactly the initial count") {
  ReactionNetwork net = fx::from_text("species P\nP -> 0\n");
  Trajectory t = simulate(net, RateAssignment{{1.0}}, {5}, 1e18, 1000, 99);
  CHECK(t.jumps.size() == 5);
  CHECK(t.stop == StopReason::Absorbed);
  CHECK(t.jumps.back().state == Vec{0});
  for (std::size_t k = 1; k < t.jumps.size(); ++k)
    CHECK(t.jumps[k].time > t.jumps[k - 1].time);
}

TEST_CASE("absorbing start produces no jumps") {
  ReactionNetwork net = fx::from_text("species P\nP -> 0\n");
  Trajectory t = simulate(net, RateAssignment{{1.0}}, {0}, 1e18, 1000, 7);
  CHECK(t.jumps.empty());
  CHECK(t.stop == StopReason::Absorbed);
}

TEST_CASE("seed determinism and stream separation") {
  ReactionNetwork net = fx::single_gene();
  RateAssignment rates{{1.0, 2.0, 0.5, 1.5}};
  Trajectory a = simulate(net, rates, {0, 0}, 1e18, 200, 42);
  Trajectory b = simulate(net, rates, {0, 0}, 1e18, 200, 42);
  REQUIRE(a.jumps.size() == b.jumps.size());
  for (std::size_t k = 0; k < a.jumps.size(); ++k) {
    CHECK(a.jumps[k].time == b.jumps[k].time);  // bit-identical
    CHECK(a.jumps[k].reaction == b.jumps[k].reaction);
    CHECK(a.jumps[k].state == b.jumps[k].state);
  }
  CHECK(a.rng_id == "mt19937_64/inverse-cdf");

  Trajectory c = simulate(net, rates, {0, 0}, 1e18, 200,
                          derive_stream_seed(42, 1));
  bool differs = c.jumps.size() != a.jumps.size();
  for (std::size_t k = 0; !differs && k < c.jumps.size(); ++k)
    differs = c.jumps[k].reaction != a.jumps[k].reaction ||
              c.jumps[k].time != a.jumps[k].time;
  CHECK(differs);
}

TEST_CASE("trajectories are valid walks of the discrete semantics") {
  ReactionNetwork net = fx::single_gene();
  RateAssignment rates{{1.0, 1.0, 1.0, 1.0}};
  Trajectory t = simulate(net, rates, {0, 0}, 1e18, 500, 4242);
  Vec cur{0, 0};
  for (const Jump& j : t.jumps) {
    const Reaction& r = net.reactions()[j.reaction];
    REQUIRE(leq(r.reactant, cur));  // compatibility at every jump
    cur = add(cur, rsum::net(r));
    REQUIRE(is_nonneg(cur));
    REQUIRE(j.state == cur);
  }

  // every visited state is reachable in the graph semantics
  StateBox box{Vec{40, 40}};
  ReachResult reach = reachable_set(net, Vec{0, 0}, box);
  for (const Jump& j : t.jumps)
    if (box.contains(j.state)) REQUIRE(reach.states.count(j.state));
}

TEST_CASE("observed prefixes are always active sequences") {
  ReactionNetwork net = fx::single_gene();
  RateAssignment rates{{1.0, 2.0, 0.7, 1.3}};
  ActiveCheckReport rep =
      empirical_active_check(net, rates, {0, 0}, 50, 20, 2024);
  CHECK(rep.runs == 50);
  CHECK(rep.violations == 0);
  CHECK(rep.jumps > 0);
}

TEST_CASE("a sequence the sum criterion rejects never shows up as a prefix") {
  ReactionNetwork net = fx::single_gene();
  RateAssignment rates{{1.0, 1.0, 1.0, 1.0}};
  // from (0,0), producing P before any R is inactive
  std::vector<Reaction> bad{fx::r(net, "R -> R + P")};
  REQUIRE_FALSE(is_active_sequence(Vec{0, 0}, bad));
  for (std::uint64_t run = 0; run < 50; ++run) {
    Trajectory t = simulate(net, rates, {0, 0}, 1e18, 20,
                            derive_stream_seed(555, run));
    REQUIRE(!t.jumps.empty());
    CHECK(net.reactions()[t.jumps[0].reaction] != bad[0]);
  }
}
