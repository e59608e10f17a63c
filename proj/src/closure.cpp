#include "rsum/closure.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <queue>

namespace rsum {

namespace {

bool within_cap(const Reaction& r, const std::optional<Coord>& cap) {
  if (!cap) return true;
  return max_coord(r.reactant) <= *cap && max_coord(r.product) <= *cap;
}

}  // namespace

ClosureSet closure(const std::vector<Reaction>& a, std::size_t dim,
                   const ClosureConfig& cfg) {
  if (cfg.max_summands < 1)
    throw ValidationError("closure: max_summands must be >= 1");
  ClosureSet out;
  out.config = cfg;
  out.dimension = dim;
  const Reaction id = identity_reaction(dim);
  out.elements.insert(id);

  std::vector<Reaction> gens;
  for (const Reaction& r : a) {
    if (r.dimension() != dim)
      throw DimensionMismatch("closure: generator dimension mismatch");
    if (within_cap(r, cfg.coord_cap)) gens.push_back(r);
  }

  std::vector<Reaction> frontier{id};
  std::size_t level = 0;
  while (level < cfg.max_summands && !frontier.empty()) {
    std::vector<Reaction> next;
    for (const Reaction& f : frontier) {
      for (const Reaction& g : gens) {
        Reaction c = oplus(f, g);
        if (!within_cap(c, cfg.coord_cap)) continue;
        if (out.elements.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
    ++level;
  }

  if (frontier.empty()) {
    out.saturated = true;
  } else {
    // probe: would one more summand add anything new within the cap?
    out.saturated = true;
    for (const Reaction& f : frontier) {
      for (const Reaction& g : gens) {
        Reaction c = oplus(f, g);
        if (within_cap(c, cfg.coord_cap) && !out.elements.count(c)) {
          out.saturated = false;
          break;
        }
      }
      if (!out.saturated) break;
    }
  }
  return out;
}

ClosureWithDerivations closure_with_derivations(const std::vector<Reaction>& a,
                                                std::size_t dim,
                                                const ClosureConfig& cfg) {
  if (cfg.max_summands < 1)
    throw ValidationError("closure: max_summands must be >= 1");
  ClosureWithDerivations out;
  out.config = cfg;
  const Reaction id = identity_reaction(dim);
  out.elements.emplace(id, std::vector<Reaction>{});

  std::vector<Reaction> gens;
  for (const Reaction& r : a) {
    if (r.dimension() != dim)
      throw DimensionMismatch("closure: generator dimension mismatch");
    if (within_cap(r, cfg.coord_cap)) gens.push_back(r);
  }

  std::vector<Reaction> frontier{id};
  std::size_t level = 0;
  while (level < cfg.max_summands && !frontier.empty()) {
    std::vector<Reaction> next;
    for (const Reaction& f : frontier) {
      const auto& seq = out.elements.at(f);
      for (const Reaction& g : gens) {
        Reaction c = oplus(f, g);
        if (!within_cap(c, cfg.coord_cap)) continue;
        if (out.elements.count(c)) continue;
        std::vector<Reaction> cseq = seq;
        cseq.push_back(g);
        out.elements.emplace(c, std::move(cseq));
        next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
    ++level;
  }

  if (frontier.empty()) {
    out.saturated = true;
  } else {
    out.saturated = true;
    for (const Reaction& f : frontier) {
      for (const Reaction& g : gens) {
        Reaction c = oplus(f, g);
        if (within_cap(c, cfg.coord_cap) && !out.elements.count(c)) {
          out.saturated = false;
          break;
        }
      }
      if (!out.saturated) break;
    }
  }
  return out;
}

bool is_reversible(const std::vector<Reaction>& a) {
  std::set<Reaction> set(a.begin(), a.end());
  for (const Reaction& r : a)
    if (!set.count(inverse(r))) return false;
  return true;
}

std::optional<std::vector<Reaction>> weak_reversibility_witness(
    const std::vector<Reaction>& a, const Reaction& r) {
  // Diagonal elements are their own inverse and their own one-element chain.
  if (r.reactant == r.product) {
    for (const Reaction& e : a)
      if (e == r) return std::vector<Reaction>{r};
    return std::nullopt;
  }
  // BFS over the complex digraph from r.product to r.reactant.
  std::map<Vec, std::vector<const Reaction*>> adj;
  for (const Reaction& e : a) adj[e.reactant].push_back(&e);

  std::map<Vec, const Reaction*> via;  // complex -> edge that reached it
  std::map<Vec, Vec> prev;
  std::deque<Vec> queue;
  queue.push_back(r.product);
  while (!queue.empty()) {
    Vec cur = queue.front();
    queue.pop_front();
    auto it = adj.find(cur);
    if (it == adj.end()) continue;
    for (const Reaction* e : it->second) {
      const Vec& nxt = e->product;
      if (via.count(nxt) || nxt == r.product) continue;
      via[nxt] = e;
      prev[nxt] = cur;
      if (nxt == r.reactant) {
        std::vector<Reaction> chain;
        Vec c = nxt;
        while (c != r.product) {
          chain.push_back(*via[c]);
          c = prev[c];
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

bool is_weakly_reversible(const std::vector<Reaction>& a) {
  for (const Reaction& r : a)
    if (!weak_reversibility_witness(a, r)) return false;
  return true;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Phase-1 simplex with Bland's rule over exact rationals.
// Feasibility of { lambda >= 0 : G lambda = t }.
bool lp_feasible(const std::vector<Vec>& gens, const Vec& target) {
  const std::size_t m = target.size();   // equations
  const std::size_t k = gens.size();     // variables
  const std::size_t cols = k + m + 1;    // vars, artificials, rhs

  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols, 0));
  for (std::size_t i = 0; i < m; ++i) {
    Coord rhs = target[i];
    int sign = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = sign * gens[j][i];
    t[i][k + i] = 1;
    t[i][cols - 1] = sign * rhs;
  }

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

  // reduced-cost row for minimizing the sum of artificials
  std::vector<Rational> cost(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    // artificial columns start basic with zero reduced cost
    cost[j] = (j >= k && j < k + m) ? Rational(0) : -s;
  }

  for (;;) {
    std::size_t enter = cols - 1;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;  // Bland: first improving column
      }
    }
    if (enter == cols - 1) break;  // optimal

    std::size_t leave = m;
    Rational best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) return false;  // unbounded phase-1: cannot happen, bail

    Rational piv = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= k) objective += t[i][cols - 1];
  return objective == 0;
}

}  // namespace

bool rational_cone_contains(const std::vector<Vec>& generators,
                            const Vec& target) {
  if (is_zero(target)) return true;
  if (generators.empty()) return false;
  for (const Vec& g : generators) require_same_dim(g, target);
  return lp_feasible(generators, target);
}

std::string EssentialVerdict::qualification() const {
  switch (kind) {
    case EssentialKind::TrueExact:
      return "EXACT";
    case EssentialKind::TrueUpToBound:
      return "UP_TO_BOUND";
    case EssentialKind::Counterexample:
      return counterexample_exact ? "EXACT" : "UP_TO_BOUND";
  }
  return "";
}

EssentialVerdict is_essential_bounded(const std::vector<Reaction>& a,
                                      std::size_t dim,
                                      const ClosureConfig& cfg,
                                      const ClosureConfig& inverse_cfg) {
  EssentialVerdict v;
  if (a.empty()) {
    v.kind = EssentialKind::TrueExact;
    return v;
  }
  // reversible => weakly reversible => essential
  if (is_reversible(a) || is_weakly_reversible(a)) {
    v.kind = EssentialKind::TrueExact;
    return v;
  }

  ClosureSet c1 = closure(a, dim, cfg);
  ClosureSet c2 =
      inverse_cfg == cfg ? c1 : closure(a, dim, inverse_cfg);

  std::vector<Vec> nets;
  nets.reserve(a.size());
  for (const Reaction& r : a) nets.push_back(net(r));

  std::optional<Reaction> first_miss;
  for (const Reaction& r : c1.elements) {
    if (c2.contains(inverse(r))) continue;
    if (!first_miss) first_miss = r;
    Vec neg(dim);
    Vec nr = net(r);
    for (std::size_t i = 0; i < dim; ++i) neg[i] = -nr[i];
    if (!rational_cone_contains(nets, neg)) {
      // certified: no sum of generators can ever produce the inverse
      v.kind = EssentialKind::Counterexample;
      v.counterexample = r;
      v.counterexample_exact = true;
      return v;
    }
  }
  if (first_miss) {
    v.kind = EssentialKind::Counterexample;
    v.counterexample = first_miss;
    v.counterexample_exact = false;
    return v;
  }

  bool exact = c1.saturated && !cfg.coord_cap && c2.saturated &&
               !inverse_cfg.coord_cap;
  v.kind = exact ? EssentialKind::TrueExact : EssentialKind::TrueUpToBound;
  return v;
}

}  // namespace rsum
