#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rsum/reach.hpp"

using namespace rsum;
namespace fx = rsum::fixtures;

namespace {

Reaction rx(Vec y, Vec yp) { return Reaction(std::move(y), std::move(yp)); }

}  // namespace

TEST_CASE("fire") {
  // x=(0,l), 0->R over (R,P)
  CHECK(fire(Vec{0, 7}, rx({0, 0}, {1, 0})) == Vec{1, 7});
  CHECK_FALSE(fire(Vec{0, 0}, rx({1, 0}, {1, 1})).has_value());
  // minimal firing state maps reactant to product
  Reaction r = rx({2, 1}, {0, 4});
  CHECK(fire(r.reactant, r) == r.product);

  oracle::Rng rng(51);
  for (int i = 0; i < 3000; ++i) {
    Vec x = oracle::random_vec(rng, 3, 6);
    Reaction q = oracle::random_reaction(rng, 3, 4);
    auto out = fire(x, q);
    if (out) REQUIRE(is_nonneg(*out));
  }
}

TEST_CASE("active sequences: iterative firing equals the sum criterion") {
  // gene-expression walk from (0, l)
  std::vector<Reaction> walk{rx({0, 0}, {1, 0}), rx({1, 0}, {1, 1}),
                             rx({1, 0}, {0, 0})};
  CHECK(is_active_sequence(Vec{0, 5}, walk));
  CHECK(sum_sequence(walk, 2).reactant == Vec{0, 0});

  CHECK_FALSE(is_active_sequence(Vec{0, 0},
                                 std::vector<Reaction>{rx({1, 0}, {1, 1})}));

  oracle::Rng rng(52);
  for (int i = 0; i < 10000; ++i) {
    std::size_t n = 1 + rng() % 3;
    std::size_t len = 1 + rng() % 8;
    std::vector<Reaction> seq;
    for (std::size_t k = 0; k < len; ++k)
      seq.push_back(oracle::random_reaction(rng, n, 3));
    Vec x = oracle::random_vec(rng, n, 8);

    bool iterative = true;
    Vec cur = x;
    for (const Reaction& r : seq) {
      auto nxt = fire(cur, r);
      if (!nxt) {
        iterative = false;
        break;
      }
      cur = *nxt;
    }
    bool by_sum = leq(sum_sequence(seq, n).reactant, x);
    REQUIRE(iterative == by_sum);
  }
}

TEST_CASE("leads_to") {
  ReactionNetwork net = fx::single_gene();
  StateBox box{Vec{4, 8}};

  LeadsToResult up = leads_to(net, Vec{0, 3}, Vec{0, 4}, box);
  CHECK(up.reachable);
  // replaying the witness lands on the target
  Vec cur{0, 3};
  for (std::size_t k : up.witness) cur = *fire(cur, net.reactions()[k]);
  CHECK(cur == Vec{0, 4});

  CHECK(leads_to(net, Vec{2, 2}, Vec{2, 2}, box).reachable);
  CHECK(leads_to(net, Vec{2, 2}, Vec{2, 2}, box).witness.empty());

  CHECK_THROWS_AS(leads_to(net, Vec{9, 9}, Vec{0, 0}, box), ValidationError);
}

TEST_CASE("leads_to witness on the chained-intermediate network") {
  ReactionNetwork net = fx::reach_gap();
  StateBox box{Vec(6, 6)};
  Vec s1 = net.species_set({"S1"}).contains(0) ? Vec{1, 0, 0, 0, 0, 0} : Vec{};
  Vec s5{0, 0, 0, 0, 1, 0};
  LeadsToResult r = leads_to(net, s1, s5, box);
  REQUIRE(r.reachable);
  std::vector<std::string> names = net.species_names();
  std::vector<std::string> seq;
  for (std::size_t k : r.witness)
    seq.push_back(print_reaction(net.reactions()[k], names));
  CHECK(seq == std::vector<std::string>{"S1 -> S2 + U", "S2 -> S4",
                                        "S4 + U -> S5"});
}

TEST_CASE("reachable_set") {
  ReactionNetwork net = fx::single_gene();
  ReachResult r = reachable_set(net, Vec{0, 0}, StateBox{Vec{3, 3}});
  CHECK(r.states.size() == 16);  // the whole box
  CHECK(r.frontier_clipped);

  ReachResult lone = reachable_set(std::vector<Reaction>{}, Vec{2, 2},
                                   StateBox{Vec{3, 3}});
  CHECK(lone.states == std::set<Vec>{Vec{2, 2}});

  ReactionNetwork swap1 = fx::from_text("S1 -> S2\n");
  ReachResult two = reachable_set(swap1, Vec{1, 0}, StateBox{Vec{1, 1}});
  CHECK(two.states == std::set<Vec>{Vec{1, 0}, Vec{0, 1}});
}

TEST_CASE("reachable_set monotone in the box") {
  oracle::Rng rng(53);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + rng() % 3;
    ReactionNetwork net = oracle::random_network(rng, n, 1 + rng() % 4, 2);
    Vec x = oracle::random_vec(rng, n, 2);
    ReachResult small = reachable_set(net, x, StateBox{Vec(n, 3)});
    ReachResult big = reachable_set(net, x, StateBox{Vec(n, 5)});
    for (const Vec& s : small.states) REQUIRE(big.states.count(s));
  }
}

TEST_CASE("leads_to_via_closure") {
  std::vector<Reaction> pair{rx({1, 0}, {0, 1}), rx({0, 1}, {1, 0})};
  ClosureSet c = closure(pair, 2, {32, Coord{4}});
  REQUIRE(c.saturated);
  CHECK(leads_to_via_closure(c, Vec{1, 0}, Vec{0, 1}));
  CHECK(leads_to_via_closure(c, Vec{3, 1}, Vec{3, 1}));  // via (0,0)
  CHECK_FALSE(leads_to_via_closure(c, Vec{1, 0}, Vec{0, 2}));
}

TEST_CASE("closure route agrees with BFS on random networks") {
  // closure capped at C; BFS box E + C, so every closure witness fired from
  // an endpoint is visited
  oracle::Rng rng(54);
  const Coord E = 3, C = 6;
  for (int i = 0; i < 25; ++i) {
    std::size_t n = 1 + rng() % 3;
    ReactionNetwork net = oracle::random_network(rng, n, 1 + rng() % 5, 2);
    ClosureSet c = closure(net.reactions(), n, {64, C});
    REQUIRE(c.saturated);
    StateBox bfs_box{Vec(n, E + C)};

    for (int trial = 0; trial < 20; ++trial) {
      Vec x = oracle::random_vec(rng, n, E);
      Vec t = oracle::random_vec(rng, n, E);
      bool via_closure = leads_to_via_closure(c, x, t);
      bool via_bfs = leads_to(net, x, t, bfs_box).reachable;
      if (via_closure) REQUIRE(via_bfs);
      if (via_bfs && !via_closure) {
        // possible only when every witness needs prefix sums beyond C
        FAIL_CHECK("BFS reached a state the capped closure cannot explain");
      }
    }
  }
}

TEST_CASE("structural identity") {
  ReactionNetwork a = fx::from_text("S1 -> S2\n");
  ReactionNetwork a2 = fx::from_text("S1 -> S2\n2 S1 -> 2 S2\n");
  StateBox box{Vec{4, 4}};
  CHECK(structurally_identical(a, a, box).identical);
  CHECK(structurally_identical(a, a2, box).identical);
  // the doubled move is the square of the single one
  ClosureSet ca = closure(a.reactions(), 2, {16, Coord{4}});
  ClosureSet ca2 = closure(a2.reactions(), 2, {16, Coord{4}});
  CHECK(ca.elements == ca2.elements);

  ReactionNetwork b = fx::from_text("S1 -> 2 S2\n");
  IdentityVerdict diff = structurally_identical(a, b, box);
  CHECK_FALSE(diff.identical);
  CHECK(diff.witness_state.has_value());
}

TEST_CASE("catalytic counterexample to the closure-reach equivalence") {
  // same reach sets but different closures; possible since S1 is catalytic
  ReactionNetwork r1 = fx::from_text("species S1, P\nS1 -> S1 + P\n");
  ReactionNetwork r2 =
      fx::from_text("species S1, P\nS1 -> S1 + P\n2 S1 -> 2 S1 + P\n");
  CHECK(has_catalytic_species(r1));
  StateBox box{Vec{3, 5}};
  CHECK(structurally_identical(r1, r2, box).identical);
  ClosureSet c1 = closure(r1.reactions(), 2, {16, Coord{4}});
  ClosureSet c2 = closure(r2.reactions(), 2, {16, Coord{4}});
  CHECK(c1.elements != c2.elements);
}

TEST_CASE("reach symmetry as the essential characterization") {
  CHECK(essential_by_symmetry(fx::from_text("S1 <=> S2\n"), StateBox{Vec{5, 5}})
            .symmetric);

  SymmetryVerdict one =
      essential_by_symmetry(fx::from_text("S1 -> S2\n"), StateBox{Vec{3, 3}});
  CHECK_FALSE(one.symmetric);
  REQUIRE(one.witness.has_value());
  // the witness really is one-way
  StateBox box{Vec{3, 3}};
  ReactionNetwork net = fx::from_text("S1 -> S2\n");
  CHECK(leads_to(net, one.witness->first, one.witness->second, box).reachable);
  CHECK_FALSE(
      leads_to(net, one.witness->second, one.witness->first, box).reachable);

  CHECK(essential_by_symmetry(fx::wr_loss(), StateBox{Vec(6, 2)}).symmetric);
}

TEST_CASE("symmetry verdict cross-checked against the bounded essential check") {
  oracle::Rng rng(55);
  std::size_t cross_checked = 0;
  for (int i = 0; i < 120; ++i) {
    std::size_t n = 1 + rng() % 2;
    ReactionNetwork net = oracle::random_network(rng, n, 1 + rng() % 3, 2);
    StateBox box{Vec(n, 4)};
    bool sym = essential_by_symmetry(net, box).symmetric;
    EssentialVerdict ess = is_essential_bounded(net.reactions(), n,
                                                {6, Coord{6}}, {6, Coord{6}});
    // A cone-certified counterexample (y,y') means y' can never lead back
    // to y. If the box still looks symmetric, the forward trip must not
    // fit the box either.
    if (sym && ess.kind == EssentialKind::Counterexample &&
        ess.counterexample_exact) {
      const Reaction& ce = *ess.counterexample;
      if (box.contains(ce.reactant) && box.contains(ce.product)) {
        ++cross_checked;
        REQUIRE_FALSE(
            leads_to(net, ce.reactant, ce.product, box).reachable);
      }
    }
  }
  (void)cross_checked;
}
