#include "rsum/semilinear.hpp"

#include <algorithm>

namespace rsum {

void validate(const LinearSet& s) {
  if (!is_nonneg(s.base))
    throw ValidationError("linear set: base must be nonnegative");
  for (const Vec& p : s.periods) {
    require_same_dim(p, s.base);
    if (!is_nonneg(p))
      throw ValidationError("linear set: periods must be nonnegative");
    if (is_zero(p)) throw ValidationError("linear set: zero period");
  }
}

void validate(const SemiLinearSet& s) {
  for (const LinearSet& c : s.components) validate(c);
  for (std::size_t i = 1; i < s.components.size(); ++i)
    require_same_dim(s.components[i].base, s.components[0].base);
}

std::optional<Vec> member_witness(const LinearSet& s, const Vec& v) {
  validate(s);
  require_same_dim(v, s.base);
  if (!leq(s.base, v)) return std::nullopt;
  Vec remainder = sub(v, s.base);
  Vec lambdas = zero_vec(s.periods.size());
  // plain nested search, lexicographic smallest lambda first
  struct Rec {
    const std::vector<Vec>& periods;
    bool run(std::size_t idx, Vec& rem, Vec& lam) {
      if (idx == periods.size()) return is_zero(rem);
      const Vec& p = periods[idx];
      Coord bound = -1;
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p[j] > 0) {
          Coord b = rem[j] / p[j];
          if (bound < 0 || b < bound) bound = b;
        }
      if (bound < 0) bound = 0;  // zero period cannot occur (validated)
      Vec saved = rem;
      for (Coord take = 0; take <= bound; ++take) {
        if (run(idx + 1, rem, lam)) {
          lam[idx] = take;
          return true;
        }
        for (std::size_t j = 0; j < p.size(); ++j) rem[j] -= p[j];
      }
      rem = saved;
      return false;
    }
  } rec{s.periods};
  if (rec.run(0, remainder, lambdas)) return lambdas;
  return std::nullopt;
}

bool contains(const LinearSet& s, const Vec& v) {
  return member_witness(s, v).has_value();
}

bool contains(const SemiLinearSet& s, const Vec& v) {
  for (const LinearSet& c : s.components)
    if (contains(c, v)) return true;
  return false;
}

namespace {

void enumerate_anchors(const Vec& base, const std::vector<Vec>& projecting,
                       std::size_t n, const Vec& x, std::size_t idx,
                       Vec& current, std::vector<Vec>& out) {
  // current carries base + chosen multiples; first n coordinates must end
  // exactly at x
  if (idx == projecting.size()) {
    for (std::size_t j = 0; j < n; ++j)
      if (current[j] != x[j]) return;
    out.push_back(current);
    return;
  }
  const Vec& p = projecting[idx];
  Coord bound = -1;
  for (std::size_t j = 0; j < n; ++j) {
    if (p[j] > 0) {
      Coord room = x[j] - current[j];
      if (room < 0) return;  // already overshot
      Coord b = room / p[j];
      if (bound < 0 || b < bound) bound = b;
    }
  }
  if (bound < 0) bound = 0;  // cannot happen: projection is nontrivial
  Vec saved = current;
  for (Coord take = 0; take <= bound; ++take) {
    enumerate_anchors(base, projecting, n, x, idx + 1, current, out);
    for (std::size_t j = 0; j < p.size(); ++j) current[j] += p[j];
  }
  current = saved;
}

}  // namespace

SemiLinearSet slice(const SemiLinearSet& s, const Vec& x) {
  SemiLinearSet out;
  for (const LinearSet& comp : s.components) {
    if (comp.base.size() % 2 != 0 || comp.base.size() != 2 * x.size())
      throw DimensionMismatch("slice: set dimension must be twice |x|");
    const std::size_t n = x.size();

    std::vector<Vec> projecting, zero_proj;
    for (const Vec& p : comp.periods) {
      bool nontrivial = false;
      for (std::size_t j = 0; j < n; ++j)
        if (p[j] != 0) nontrivial = true;
      (nontrivial ? projecting : zero_proj).push_back(p);
    }

    std::vector<Vec> anchors;
    Vec current = comp.base;
    enumerate_anchors(comp.base, projecting, n, x, 0, current, anchors);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    for (Vec& c : anchors)
      out.components.push_back(LinearSet{std::move(c), zero_proj});
  }
  return out;
}

ClosureSemilinearReport check_closure_in_semilinear(const ClosureSet& closure,
                                                    const SemiLinearSet& s,
                                                    const StateBox& box2n) {
  ClosureSemilinearReport rep;
  for (const Reaction& r : closure.elements) {
    if (!contains(s, flatten(r))) {
      rep.closure_subset = false;
      rep.escapee = r;
      break;
    }
  }
  if (!closure.saturated) {
    rep.converse_qualified = true;
    return rep;
  }
  for_each_in_box(box2n.upper, [&](const Vec& v) {
    if (!rep.box_converse) return;
    if (!contains(s, v)) return;
    Reaction r = unflatten(v);
    if (closure.config.coord_cap &&
        (max_coord(r.reactant) > *closure.config.coord_cap ||
         max_coord(r.product) > *closure.config.coord_cap))
      return;  // outside the enumerated fragment
    if (!closure.contains(r)) {
      rep.box_converse = false;
      rep.missing = v;
    }
  });
  return rep;
}

}  // namespace rsum
