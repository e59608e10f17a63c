#include "rsum/reach.hpp"

#include <cassert>
#include <deque>
#include <unordered_map>

namespace rsum {

std::optional<Vec> fire(const Vec& x, const Reaction& r) {
  require_same_dim(x, r.reactant);
  if (!leq(r.reactant, x)) return std::nullopt;
  return add(x, net(r));
}

bool is_active_sequence(const Vec& x, std::span<const Reaction> rs) {
  Vec cur = x;
  bool active = true;
  for (const Reaction& r : rs) {
    auto next = fire(cur, r);
    if (!next) {
      active = false;
      break;
    }
    cur = std::move(*next);
  }
#ifndef NDEBUG
  // iterative firing must agree with the sum criterion
  Reaction total = sum_sequence(rs, x.size());
  assert(active == leq(total.reactant, x));
#endif
  return active;
}

namespace {

struct BfsNode {
  std::size_t parent;    // index into the visit order
  std::size_t reaction;  // edge used to reach this state
};

}  // namespace

LeadsToResult leads_to(const std::vector<Reaction>& reactions, const Vec& x,
                       const Vec& target, const StateBox& box) {
  LeadsToResult res;
  if (!box.contains(x) || !box.contains(target))
    throw ValidationError("leads_to: endpoints must lie within the box");
  if (x == target) {
    res.reachable = true;
    return res;
  }
  std::vector<Vec> order{x};
  std::unordered_map<Vec, BfsNode, VecHash> info;
  info.emplace(x, BfsNode{0, SIZE_MAX});
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    Vec state = order[cur];
    for (std::size_t k = 0; k < reactions.size(); ++k) {
      auto nxt = fire(state, reactions[k]);
      if (!nxt) continue;
      if (!box.contains(*nxt)) {
        res.frontier_clipped = true;
        continue;
      }
      if (info.count(*nxt)) continue;
      info.emplace(*nxt, BfsNode{cur, k});
      order.push_back(*nxt);
      if (*nxt == target) {
        std::vector<std::size_t> rev;
        Vec c = *nxt;
        while (c != x) {
          const BfsNode& nd = info.at(c);
          rev.push_back(nd.reaction);
          c = order[nd.parent];
        }
        res.witness.assign(rev.rbegin(), rev.rend());
        res.reachable = true;
        return res;
      }
      queue.push_back(order.size() - 1);
    }
  }
  return res;
}

ReachResult reachable_set(const std::vector<Reaction>& reactions, const Vec& x,
                          const StateBox& box) {
  ReachResult res;
  if (!box.contains(x))
    throw ValidationError("reachable_set: start state outside the box");
  res.states.insert(x);
  std::deque<Vec> queue{x};
  while (!queue.empty()) {
    Vec state = queue.front();
    queue.pop_front();
    for (const Reaction& r : reactions) {
      auto nxt = fire(state, r);
      if (!nxt) continue;
      if (!box.contains(*nxt)) {
        res.frontier_clipped = true;
        continue;
      }
      if (res.states.insert(*nxt).second) queue.push_back(std::move(*nxt));
    }
  }
  return res;
}

bool leads_to_via_closure(const ClosureSet& closure, const Vec& x,
                          const Vec& target) {
  Vec delta = sub(target, x);
  for (const Reaction& r : closure.elements) {
    if (!leq(r.reactant, x)) continue;
    if (net(r) == delta) return true;
  }
  return false;
}

void for_each_in_box(const Vec& upper,
                     const std::function<void(const Vec&)>& fn) {
  Vec cur = zero_vec(upper.size());
  for (;;) {
    fn(cur);
    std::size_t i = upper.size();
    while (i > 0) {
      --i;
      if (cur[i] < upper[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < upper.size(); ++j) cur[j] = 0;
        break;
      }
      if (i == 0) return;
    }
    if (upper.empty()) return;
  }
}

IdentityVerdict structurally_identical(const ReactionNetwork& net1,
                                       const ReactionNetwork& net2,
                                       const StateBox& box) {
  if (net1.species_names() != net2.species_names())
    throw ValidationError(
        "structurally_identical: networks must share one species list");
  IdentityVerdict v;
  for_each_in_box(box.upper, [&](const Vec& x) {
    if (!v.identical) return;
    ReachResult a = reachable_set(net1, x, box);
    ReachResult b = reachable_set(net2, x, box);
    v.clipped = v.clipped || a.frontier_clipped || b.frontier_clipped;
    if (a.states == b.states) return;
    v.identical = false;
    v.witness_state = x;
    for (const Vec& s : a.states)
      if (!b.states.count(s)) {
        v.witness_target = s;
        return;
      }
    for (const Vec& s : b.states)
      if (!a.states.count(s)) {
        v.witness_target = s;
        return;
      }
  });
  return v;
}

namespace {

// Iterative Tarjan over the in-box firing graph.
struct SccResult {
  std::vector<std::size_t> comp;  // node -> component id
};

SccResult tarjan(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  SccResult res;
  res.comp.assign(n, SIZE_MAX);
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, next_comp = 0;

  struct Frame {
    std::size_t node;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (std::size_t s = 0; s < n; ++s) {
    if (index[s] != SIZE_MAX) continue;
    call.push_back({s, 0});
    index[s] = low[s] = next_index++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.node].size()) {
        std::size_t w = adj[f.node][f.edge++];
        if (index[w] == SIZE_MAX) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
      } else {
        std::size_t v = f.node;
        call.pop_back();
        if (!call.empty())
          low[call.back().node] = std::min(low[call.back().node], low[v]);
        if (low[v] == index[v]) {
          for (;;) {
            std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            res.comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
  return res;
}

}  // namespace

SymmetryVerdict essential_by_symmetry(const std::vector<Reaction>& reactions,
                                      const StateBox& box) {
  SymmetryVerdict v;
  std::vector<Vec> states;
  std::unordered_map<Vec, std::size_t, VecHash> id;
  for_each_in_box(box.upper, [&](const Vec& x) {
    id.emplace(x, states.size());
    states.push_back(x);
  });
  std::vector<std::vector<std::size_t>> adj(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const Reaction& r : reactions) {
      auto nxt = fire(states[i], r);
      if (!nxt) continue;
      auto it = id.find(*nxt);
      if (it == id.end()) {
        v.clipped = true;
        continue;
      }
      adj[i].push_back(it->second);
    }
  }
  SccResult scc = tarjan(adj);
  for (std::size_t i = 0; i < states.size() && v.symmetric; ++i) {
    for (std::size_t j : adj[i]) {
      if (scc.comp[i] != scc.comp[j]) {
        v.symmetric = false;
        v.witness = std::make_pair(states[i], states[j]);
        break;
      }
    }
  }
  return v;
}

}  // namespace rsum
