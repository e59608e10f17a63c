#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rsum/network.hpp"

using namespace rsum;
namespace fx = rsum::fixtures;

TEST_CASE("network construction validates") {
  CHECK_THROWS_AS(ReactionNetwork({"A", "A"}, {}), ValidationError);
  CHECK_THROWS_AS(ReactionNetwork({"A"}, {Reaction({1}, {1})}),
                  ValidationError);
  CHECK_THROWS_AS(ReactionNetwork({"A"}, {Reaction({1, 0}, {0, 1})}),
                  ValidationError);

  // duplicates collapse, canonical order
  ReactionNetwork net({"A", "B"}, {Reaction({0, 1}, {1, 0}),
                                   Reaction({1, 0}, {0, 1}),
                                   Reaction({1, 0}, {0, 1})});
  CHECK(net.reactions().size() == 2);
  CHECK(net.reactions()[0] < net.reactions()[1]);
}

TEST_CASE("support") {
  CHECK(support(Vec{1, 1, 0, 0, 0, 0}).indices() ==
        std::vector<std::size_t>{0, 1});
  CHECK(support(Vec{0, 0}).empty());
  CHECK(support(Vec{0, 3}).indices() == std::vector<std::size_t>{1});
}

TEST_CASE("partition of the two-state gene model") {
  ReactionNetwork net = fx::gene_model();
  SpeciesSet u = net.species_set({"G'"});
  Partition p = partition(net, u);

  auto texts = [&](const std::vector<Reaction>& rs) {
    std::set<std::string> out;
    for (const Reaction& r : rs)
      out.insert(print_reaction(r, net.species_names()));
    return out;
  };
  CHECK(texts(p.r_u) == std::set<std::string>{"G' -> G", "G' -> G' + P"});
  CHECK(texts(p.r_u_prime) ==
        std::set<std::string>{"G -> G'", "G' -> G' + P"});
  CHECK(texts(p.r_0) == std::set<std::string>{"P -> 0"});
}

TEST_CASE("partition trivial cases") {
  ReactionNetwork net = fx::gene_model();
  Partition empty = partition(net, SpeciesSet{});
  CHECK(empty.r_u.empty());
  CHECK(empty.r_u_prime.empty());
  CHECK(empty.r_0.size() == net.reactions().size());

  SpeciesSet all({0, 1, 2});
  Partition full = partition(net, all);
  CHECK(full.r_0.empty());
  // P -> 0 has no species in the product, G -> G' none in... every reactant
  // here is nonempty, so r_u is everything
  CHECK(full.r_u.size() == net.reactions().size());
}

TEST_CASE("partition is exhaustive and consistent, fuzzed") {
  oracle::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + rng() % 4;
    ReactionNetwork net = oracle::random_network(rng, n, 1 + rng() % 6, 3);
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (rng() % 2) idx.push_back(k);
    SpeciesSet u(idx);
    Partition p = partition(net, u);
    std::set<Reaction> in_u(p.r_u.begin(), p.r_u.end());
    std::set<Reaction> in_up(p.r_u_prime.begin(), p.r_u_prime.end());
    std::set<Reaction> covered;
    covered.insert(p.r_u.begin(), p.r_u.end());
    covered.insert(p.r_u_prime.begin(), p.r_u_prime.end());
    for (const Reaction& r : p.r_0) {
      REQUIRE(!in_u.count(r));
      REQUIRE(!in_up.count(r));
      covered.insert(r);
    }
    REQUIRE(covered.size() == net.reactions().size());
  }
}

TEST_CASE("catalytic species") {
  ReactionNetwork rp = fx::from_text("R -> R + P\n");
  CHECK(has_catalytic_species(rp));
  CHECK_FALSE(has_catalytic_species(fx::from_text("S1 -> S2\n")));
  CHECK_FALSE(has_catalytic_species(fx::two_substrate()));
}

TEST_CASE("non-interacting species") {
  ReactionNetwork ts = fx::two_substrate();
  CHECK(is_non_interacting(ts, ts.species_set({"EA", "EQ"})));

  ReactionNetwork pair = fx::interacting_pair();
  CHECK_FALSE(is_non_interacting(pair, pair.species_set({"U1", "U2"})));

  CHECK(is_non_interacting(ts, SpeciesSet{}));

  ReactionNetwork mrna = fx::mrna_model();
  CHECK_FALSE(is_non_interacting(mrna, mrna.species_set({"G'", "R"})));
}

TEST_CASE("intermediate species") {
  ReactionNetwork ts = fx::two_substrate();
  CHECK(is_intermediate(ts, ts.species_set({"EQ"})));
  CHECK_FALSE(is_intermediate(ts, ts.species_set({"EA"})));

  ReactionNetwork gene = fx::gene_model();
  CHECK_FALSE(is_intermediate(gene, gene.species_set({"G'"})));
  CHECK(is_non_interacting(gene, gene.species_set({"G'"})));
}

TEST_CASE("intermediate implies non-interacting, fuzzed") {
  oracle::Rng rng(32);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 1 + rng() % 4;
    ReactionNetwork net = oracle::random_network(rng, n, 1 + rng() % 5, 2);
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (rng() % 2) idx.push_back(k);
    SpeciesSet u(idx);
    if (is_intermediate(net, u)) REQUIRE(is_non_interacting(net, u));
  }
}

TEST_CASE("non-interacting reactions consuming u carry one unit token") {
  oracle::Rng rng(33);
  std::size_t seen = 0;
  for (int i = 0; i < 800; ++i) {
    std::size_t n = 2 + rng() % 3;
    ReactionNetwork net = oracle::random_network(rng, n, 1 + rng() % 5, 2);
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < n; ++k)
      if (rng() % 2) idx.push_back(k);
    SpeciesSet u(idx);
    if (!is_non_interacting(net, u)) continue;
    for (const Reaction& r : partition(net, u).r_u) {
      ++seen;
      REQUIRE(coeff_sum(r.reactant, u) == 1);
    }
  }
  CHECK(seen > 0);
}
