#ifndef RSUM_TESTS_FIXTURES_HPP
#define RSUM_TESTS_FIXTURES_HPP

#include <string>

#include "rsum/parser.hpp"

namespace rsum::fixtures {

inline ReactionNetwork from_text(const std::string& text) {
  return parse_document(text).to_network();
}

// mRNA/protein model with free mRNA production
inline ReactionNetwork single_gene() {
  return from_text(
      "species R, P\n"
      "0 <=> R\n"
      "R -> R + P\n"
      "P -> 0\n");
}

// two-state gene with protein production from the active state
inline ReactionNetwork gene_model() {
  return from_text(
      "species G, G', P\n"
      "G <=> G'\n"
      "G' -> G' + P\n"
      "P -> 0\n");
}

// gene -> mRNA -> protein cascade
inline ReactionNetwork mrna_model() {
  return from_text(
      "species G, G', R, P\n"
      "G <=> G'\n"
      "G' -> G' + R\n"
      "R -> R + P\n"
      "R -> 0\n"
      "P -> 0\n");
}

// two-substrate enzyme mechanism
inline ReactionNetwork two_substrate() {
  return from_text(
      "species E, A, EA, P, EQ, Q\n"
      "E + A <=> EA\n"
      "EA + P -> EQ\n"
      "EQ -> E + Q\n");
}

// three-species cycle through one intermediate
inline ReactionNetwork cycle_with_intermediate() {
  return from_text(
      "species S1, S2, U1\n"
      "S1 -> U1\n"
      "U1 -> S2\n"
      "S2 -> S1\n");
}

// two intermediates chained through a bimolecular step
inline ReactionNetwork chained_intermediates() {
  return from_text(
      "species S1, S2, S3, S4, U1, U2\n"
      "S1 + S2 -> S3 + S4\n"
      "S3 -> U1\n"
      "S4 + U1 -> S1 + U2\n"
      "U2 -> S2\n");
}

// weakly reversible network whose reduction loses weak reversibility
inline ReactionNetwork wr_loss() {
  return from_text(
      "species S1, S2, S3, S4, U1, U2\n"
      "S1 -> U1\n"
      "U1 -> S2\n"
      "S2 -> U2\n"
      "U2 -> S1\n"
      "S3 + U2 <=> S4\n");
}

// interacting pair of u-species; reversible but reduction is not
inline ReactionNetwork interacting_pair() {
  return from_text(
      "species S1, S2, S3, U1, U2\n"
      "S1 <=> U1 + U2\n"
      "S2 <=> U1\n"
      "S3 <=> U2\n");
}

// reachability is not preserved: u is non-interacting but not intermediate
inline ReactionNetwork reach_gap() {
  return from_text(
      "species S1, S2, S3, S4, S5, U\n"
      "S1 -> S2 + U\n"
      "S2 + U -> S3\n"
      "S2 -> S4\n"
      "S4 + U -> S5\n");
}

// u1 and u2 eliminable separately but not jointly
inline ReactionNetwork token_trap() {
  return from_text(
      "species S1, U1, U2\n"
      "S1 -> U1\n"
      "U1 <=> U2\n");
}

// bundled vector-addition-system style fixtures with complex reach sets;
// only bounded reachable fragments are ever computed here
inline ReactionNetwork deep_reach() {
  return from_text(
      "species S0, S1, S2, S3, S4\n"
      "S0 + S2 -> S0 + S1\n"
      "S0 -> S3\n"
      "S3 + S1 -> S3 + 2 S2\n"
      "S3 -> S0 + S4\n");
}

inline ReactionNetwork deep_reach_seeded() {
  return from_text(
      "species S0, S1, S2, S3, S4, S5\n"
      "S5 -> S0 + S2\n"
      "S0 + S2 -> S0 + S1\n"
      "S0 -> S3\n"
      "S3 + S1 -> S3 + 2 S2\n"
      "S3 -> S0 + S4\n");
}

inline Reaction r(const ReactionNetwork& net, const std::string& text) {
  NetworkDocument doc;
  std::string decl = "species ";
  for (std::size_t i = 0; i < net.species_names().size(); ++i) {
    if (i) decl += ", ";
    decl += net.species_names()[i];
  }
  doc = parse_document(decl + "\n" + text + "\n");
  return doc.reactions.at(0);
}

inline std::vector<Reaction> rs(const ReactionNetwork& net,
                                const std::vector<std::string>& texts) {
  std::vector<Reaction> out;
  for (const auto& t : texts) out.push_back(r(net, t));
  return out;
}

}  // namespace rsum::fixtures

#endif
