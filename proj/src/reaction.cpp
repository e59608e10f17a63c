#include "rsum/reaction.hpp"

namespace rsum {

Reaction oplus(const Reaction& r1, const Reaction& r2) {
  require_same_dim(r1.reactant, r2.reactant);
  Vec y = add(r1.reactant, pos_diff(r2.reactant, r1.product));
  Vec yp = add(r2.product, pos_diff(r1.product, r2.reactant));
  return Reaction(std::move(y), std::move(yp));
}

Vec net(const Reaction& r) { return sub(r.product, r.reactant); }

bool equivalent(const Reaction& r1, const Reaction& r2) {
  require_same_dim(r1.reactant, r2.reactant);
  return net(r1) == net(r2);
}

Reaction sum_sequence(std::span<const Reaction> rs, std::size_t dim) {
  Reaction acc = identity_reaction(dim);
  for (const Reaction& r : rs) {
    if (r.dimension() != dim)
      throw DimensionMismatch("sum_sequence: element dimension mismatch");
    acc = oplus(acc, r);
  }
  return acc;
}

Vec flatten(const Reaction& r) {
  Vec v = r.reactant;
  v.insert(v.end(), r.product.begin(), r.product.end());
  return v;
}

Reaction unflatten(const Vec& v) {
  if (v.size() % 2 != 0)
    throw DimensionMismatch("unflatten: odd-length vector");
  std::size_t n = v.size() / 2;
  return Reaction(Vec(v.begin(), v.begin() + n), Vec(v.begin() + n, v.end()));
}

}  // namespace rsum
