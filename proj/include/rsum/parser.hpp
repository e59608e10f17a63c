#ifndef RSUM_PARSER_HPP
#define RSUM_PARSER_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsum/network.hpp"
#include "rsum/sim.hpp"

namespace rsum {

struct ParseError : std::runtime_error {
  std::size_t line;
  std::size_t column;
  ParseError(std::size_t line_, std::size_t column_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + what_),
        line(line_),
        column(column_) {}
};

// Text format:
//   species A, B, C          optional declaration; otherwise inferred in
//                            order of first appearance
//   set slow = A, B          named species set
//   2 A + B -> C @ 0.5       reaction with optional rate annotation
//   A <=> B @ 1.0, 2.0       expands to two reactions
//   0 -> P                   0 denotes the empty complex
//   # comment
// Species names match [A-Za-z_][A-Za-z0-9_']*.
struct NetworkDocument {
  std::vector<std::string> species;
  std::vector<Reaction> reactions;  // document order, <=> expanded
  std::vector<std::optional<double>> rates;  // parallel to reactions
  std::map<std::string, std::vector<std::string>> sets;
  std::vector<std::string> warnings;

  ReactionNetwork to_network() const;
};

NetworkDocument parse_document(std::string_view text);

// Reactions given as separate snippets (CLI arguments) sharing one
// inferred species table.
NetworkDocument parse_reaction_args(const std::vector<std::string>& args);

// Rates for the network's canonical order; annotated values from the
// document, default_rate elsewhere.
RateAssignment build_rate_assignment(const NetworkDocument& doc,
                                     const ReactionNetwork& net,
                                     double default_rate = 1.0);

std::string print_complex(const Vec& v,
                          const std::vector<std::string>& names);
std::string print_reaction(const Reaction& r,
                           const std::vector<std::string>& names);

// species line plus one reaction per line in canonical order; a fixed
// point of parse . print.
std::string print_canonical(const ReactionNetwork& net);

}  // namespace rsum

#endif
