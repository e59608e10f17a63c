#ifndef RSUM_NETWORK_HPP
#define RSUM_NETWORK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsum/reaction.hpp"

namespace rsum {

// A subset of the species indices {0, ..., n-1}, kept sorted and unique.
class SpeciesSet {
 public:
  SpeciesSet() = default;
  explicit SpeciesSet(std::vector<std::size_t> indices);

  bool contains(std::size_t i) const;
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  const std::vector<std::size_t>& indices() const { return indices_; }

  SpeciesSet united(const SpeciesSet& other) const;
  bool disjoint_from(const SpeciesSet& other) const;

  auto operator<=>(const SpeciesSet&) const = default;

 private:
  std::vector<std::size_t> indices_;
};

// supp(x): indices of strictly positive components.
SpeciesSet support(const Vec& x);

bool supp_intersects(const Vec& x, const SpeciesSet& u);

// Sum of the coordinates of x over the indices in u.
Coord coeff_sum(const Vec& x, const SpeciesSet& u);

// Reactant or product is free of u-species on both sides.
inline bool u_free(const Reaction& r, const SpeciesSet& u) {
  return !supp_intersects(r.reactant, u) && !supp_intersects(r.product, u);
}

// A finite reaction network over named species. Reactions are stored in
// canonical order with duplicates removed; net-zero reactions are rejected.
class ReactionNetwork {
 public:
  ReactionNetwork(std::vector<std::string> species_names,
                  std::vector<Reaction> reactions);

  std::size_t dimension() const { return species_names_.size(); }
  const std::vector<std::string>& species_names() const {
    return species_names_;
  }
  const std::vector<Reaction>& reactions() const { return reactions_; }

  std::optional<std::size_t> species_index(std::string_view name) const;
  SpeciesSet species_set(const std::vector<std::string>& names) const;

  bool operator==(const ReactionNetwork&) const = default;

 private:
  std::vector<std::string> species_names_;
  std::vector<Reaction> reactions_;
};

// R_U / R'_U / R_0 split: reactions touching u in the reactant, in the
// product, and in neither. The first two may overlap.
struct Partition {
  std::vector<Reaction> r_u;
  std::vector<Reaction> r_u_prime;
  std::vector<Reaction> r_0;
};

Partition partition(const std::vector<Reaction>& reactions,
                    const SpeciesSet& u);
inline Partition partition(const ReactionNetwork& net, const SpeciesSet& u) {
  return partition(net.reactions(), u);
}

bool has_catalytic_species(const Reaction& r);
bool has_catalytic_species(const ReactionNetwork& net);

// Every reaction has coefficient sum over u of at most one on each side.
bool is_non_interacting(const std::vector<Reaction>& reactions,
                        const SpeciesSet& u);
inline bool is_non_interacting(const ReactionNetwork& net,
                               const SpeciesSet& u) {
  return is_non_interacting(net.reactions(), u);
}

// Non-interacting, and u-species only ever occur as bare complexes.
bool is_intermediate(const std::vector<Reaction>& reactions,
                     const SpeciesSet& u);
inline bool is_intermediate(const ReactionNetwork& net, const SpeciesSet& u) {
  return is_intermediate(net.reactions(), u);
}

}  // namespace rsum

#endif
