#include "rsum/network.hpp"

#include <algorithm>
#include <set>

namespace rsum {

SpeciesSet::SpeciesSet(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()),
                 indices_.end());
}

bool SpeciesSet::contains(std::size_t i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

SpeciesSet SpeciesSet::united(const SpeciesSet& other) const {
  std::vector<std::size_t> merged = indices_;
  merged.insert(merged.end(), other.indices_.begin(), other.indices_.end());
  return SpeciesSet(std::move(merged));
}

bool SpeciesSet::disjoint_from(const SpeciesSet& other) const {
  for (std::size_t i : indices_)
    if (other.contains(i)) return false;
  return true;
}

SpeciesSet support(const Vec& x) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > 0) idx.push_back(i);
  return SpeciesSet(std::move(idx));
}

bool supp_intersects(const Vec& x, const SpeciesSet& u) {
  for (std::size_t i : u.indices()) {
    if (i < x.size() && x[i] > 0) return true;
  }
  return false;
}

Coord coeff_sum(const Vec& x, const SpeciesSet& u) {
  Coord s = 0;
  for (std::size_t i : u.indices())
    if (i < x.size()) s = checked_add(s, x[i]);
  return s;
}

namespace {

std::string render_raw(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

ReactionNetwork::ReactionNetwork(std::vector<std::string> species_names,
                                 std::vector<Reaction> reactions)
    : species_names_(std::move(species_names)),
      reactions_(std::move(reactions)) {
  std::set<std::string_view> seen;
  for (const auto& name : species_names_) {
    if (name.empty()) throw ValidationError("empty species name");
    if (!seen.insert(name).second)
      throw ValidationError("duplicate species name: " + name);
  }
  const std::size_t n = dimension();
  for (std::size_t k = 0; k < reactions_.size(); ++k) {
    const Reaction& r = reactions_[k];
    if (r.reactant.size() != n || r.product.size() != n)
      throw ValidationError("reaction " + std::to_string(k) +
                            " has dimension different from species count");
    if (!is_nonneg(r.reactant) || !is_nonneg(r.product))
      throw ValidationError("reaction " + std::to_string(k) +
                            " has a negative coordinate");
    if (is_net_zero(r))
      throw ValidationError("reaction " + std::to_string(k) +
                            " has zero net gain: " + render_raw(r.reactant) +
                            " -> " + render_raw(r.product));
  }
  std::sort(reactions_.begin(), reactions_.end());
  reactions_.erase(std::unique(reactions_.begin(), reactions_.end()),
                   reactions_.end());
}

std::optional<std::size_t> ReactionNetwork::species_index(
    std::string_view name) const {
  for (std::size_t i = 0; i < species_names_.size(); ++i)
    if (species_names_[i] == name) return i;
  return std::nullopt;
}

SpeciesSet ReactionNetwork::species_set(
    const std::vector<std::string>& names) const {
  std::vector<std::size_t> idx;
  for (const auto& name : names) {
    auto i = species_index(name);
    if (!i) throw ValidationError("unknown species: " + name);
    idx.push_back(*i);
  }
  return SpeciesSet(std::move(idx));
}

Partition partition(const std::vector<Reaction>& reactions,
                    const SpeciesSet& u) {
  Partition p;
  for (const Reaction& r : reactions) {
    bool in_reactant = supp_intersects(r.reactant, u);
    bool in_product = supp_intersects(r.product, u);
    if (in_reactant) p.r_u.push_back(r);
    if (in_product) p.r_u_prime.push_back(r);
    if (!in_reactant && !in_product) p.r_0.push_back(r);
  }
  return p;
}

bool has_catalytic_species(const Reaction& r) {
  for (std::size_t i = 0; i < r.reactant.size(); ++i)
    if (r.reactant[i] > 0 && r.product[i] > 0) return true;
  return false;
}

bool has_catalytic_species(const ReactionNetwork& net) {
  for (const Reaction& r : net.reactions())
    if (has_catalytic_species(r)) return true;
  return false;
}

bool is_non_interacting(const std::vector<Reaction>& reactions,
                        const SpeciesSet& u) {
  for (const Reaction& r : reactions) {
    if (coeff_sum(r.reactant, u) > 1) return false;
    if (coeff_sum(r.product, u) > 1) return false;
  }
  return true;
}

bool is_intermediate(const std::vector<Reaction>& reactions,
                     const SpeciesSet& u) {
  if (!is_non_interacting(reactions, u)) return false;
  for (const Reaction& r : reactions) {
    for (std::size_t i : u.indices()) {
      if (i < r.reactant.size() && r.reactant[i] == 1) {
        Vec unit = zero_vec(r.reactant.size());
        unit[i] = 1;
        if (r.reactant != unit) return false;
      }
      if (i < r.product.size() && r.product[i] == 1) {
        Vec unit = zero_vec(r.product.size());
        unit[i] = 1;
        if (r.product != unit) return false;
      }
    }
  }
  return true;
}

}  // namespace rsum
