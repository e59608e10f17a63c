// rn: reaction-network analysis CLI.
// Exit codes: 0 success / property holds, 1 violation or counterexample,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rsum/json_io.hpp"
#include "rsum/parser.hpp"

namespace {

using namespace rsum;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Vec parse_vec(const std::string& text, std::size_t dim, const char* what) {
  Vec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw CliError(std::string(what) + ": malformed integer '" + tok + "'");
    }
  }
  if (out.size() == 1 && dim > 1) out.assign(dim, out[0]);
  if (out.size() != dim)
    throw CliError(std::string(what) + ": expected " + std::to_string(dim) +
                   " comma-separated integers");
  return out;
}

struct Loaded {
  NetworkDocument doc;
  ReactionNetwork net;

  Loaded(const std::string& path)
      : doc(parse_document(read_file(path))), net(doc.to_network()) {}
};

SpeciesSet parse_eliminate(const Loaded& l, const std::string& arg) {
  std::vector<std::string> names;
  if (!arg.empty() && arg[0] == '@') {
    auto it = l.doc.sets.find(arg.substr(1));
    if (it == l.doc.sets.end())
      throw CliError("unknown species set: " + arg.substr(1));
    names = it->second;
  } else {
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
      while (!tok.empty() && tok.back() == ' ') tok.pop_back();
      if (!tok.empty()) names.push_back(tok);
    }
  }
  return l.net.species_set(names);
}

// Fast reactions: semicolon-separated reaction texts matched against the
// network after canonicalization; '*' selects all of R_U.
std::vector<Reaction> parse_fast(const Loaded& l, const SpeciesSet& u,
                                 const std::string& arg) {
  if (arg.empty() || arg == "*") return partition(l.net, u).r_u;
  std::vector<Reaction> out;
  std::stringstream ss(arg);
  std::string tok;
  std::set<Reaction> in_net(l.net.reactions().begin(),
                            l.net.reactions().end());
  while (std::getline(ss, tok, ';')) {
    std::string line = "species ";
    for (std::size_t i = 0; i < l.net.species_names().size(); ++i) {
      if (i) line += ", ";
      line += l.net.species_names()[i];
    }
    NetworkDocument d = parse_document(line + "\n" + tok);
    for (const Reaction& r : d.reactions) {
      if (!in_net.count(r))
        throw CliError("fast reaction not present in the network: " + tok);
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string render_states(const std::set<Vec>& states) {
  std::ostringstream out;
  for (const Vec& s : states) {
    out << "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ",";
      out << s[i];
    }
    out << ")\n";
  }
  return out.str();
}

int cmd_sum(const std::vector<std::string>& args, bool as_json) {
  NetworkDocument doc = parse_reaction_args(args);
  ReactionNetwork net = doc.to_network();
  Reaction total =
      sum_sequence(std::span<const Reaction>(doc.reactions), doc.species.size());
  if (as_json) {
    json j = envelope("sum", reaction_json(total, doc.species));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print_reaction(total, doc.species) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reaction-network sum, closure, reachability and reduction"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  // sum
  auto* sum = app.add_subcommand("sum", "sum a sequence of reactions");
  std::vector<std::string> sum_args;
  sum->add_option("reactions", sum_args, "reaction texts, in order")
      ->required();

  // common bits
  std::string file, box_s, eliminate_s, fast_s = "*", from_s, to_s, x0_s;
  std::size_t max_summands = 16;
  std::int64_t coord_cap = -1;
  std::int64_t cap = 8;
  std::uint64_t seed = 1;

  auto add_net = [&](CLI::App* c) {
    c->add_option("file", file, "network file (.rn)")->required();
  };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--max-summands", max_summands, "closure length bound");
    c->add_option("--coord-cap", coord_cap,
                  "coordinate cap on prefix partial sums (-1: none)");
  };

  auto* closure_cmd = app.add_subcommand("closure", "enumerate cl(R)");
  add_net(closure_cmd);
  add_bounds(closure_cmd);

  auto* reach_cmd = app.add_subcommand("reach", "reachable states in a box");
  add_net(reach_cmd);
  reach_cmd->add_option("--from", from_s, "start state a,b,...")->required();
  reach_cmd->add_option("--box", box_s, "state box a,b,...")->required();

  auto* leads_cmd = app.add_subcommand("leads-to", "witnessed reachability");
  add_net(leads_cmd);
  leads_cmd->add_option("--from", from_s, "start state")->required();
  leads_cmd->add_option("--to", to_s, "target state")->required();
  leads_cmd->add_option("--box", box_s, "state box")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "eliminate species");
  add_net(reduce_cmd);
  reduce_cmd->add_option("--eliminate", eliminate_s, "species U1,U2 or @set")
      ->required();
  reduce_cmd->add_option("--fast", fast_s, "fast reactions r;r or '*' (R_U)");
  reduce_cmd->add_option("--cap", cap, "product cap per coordinate");
  add_bounds(reduce_cmd);
  bool force = false;
  reduce_cmd->add_flag("--force", force, "reduce even if not eliminable");

  auto* elim_cmd = app.add_subcommand("check-eliminable",
                                      "decide eliminability of a species set");
  add_net(elim_cmd);
  elim_cmd->add_option("--eliminate", eliminate_s, "species U1,U2 or @set")
      ->required();
  elim_cmd->add_option("--fast", fast_s, "fast reactions r;r or '*'");
  elim_cmd->add_option("--cap", cap, "product cap per coordinate");
  add_bounds(elim_cmd);

  auto* star_cmd =
      app.add_subcommand("check-star", "check the (*) condition");
  add_net(star_cmd);
  star_cmd->add_option("--eliminate", eliminate_s, "species")->required();
  star_cmd->add_option("--fast", fast_s, "fast reactions");
  add_bounds(star_cmd);

  auto* rev_cmd = app.add_subcommand("check-reversibility",
                                     "reversibility transfer report");
  add_net(rev_cmd);
  rev_cmd->add_option("--eliminate", eliminate_s, "species")->required();
  rev_cmd->add_option("--fast", fast_s, "fast reactions");
  rev_cmd->add_option("--cap", cap, "product cap per coordinate");
  add_bounds(rev_cmd);
  std::string f0_s;
  rev_cmd->add_option("--f0", f0_s, "candidate F0 reactions r;r");

  auto* semi_cmd = app.add_subcommand(
      "check-semilinear", "compare cl(R) with a semi-linear set");
  add_net(semi_cmd);
  std::string semi_file;
  semi_cmd->add_option("--semilinear", semi_file, "semi-linear JSON file")
      ->required();
  semi_cmd->add_option("--box", box_s, "2n-dimensional box")->required();
  add_bounds(semi_cmd);

  auto* cmp_cmd = app.add_subcommand("compare-reach",
                                     "reachability of original vs reduced");
  add_net(cmp_cmd);
  cmp_cmd->add_option("--eliminate", eliminate_s, "species")->required();
  cmp_cmd->add_option("--fast", fast_s, "fast reactions");
  cmp_cmd->add_option("--cap", cap, "product cap per coordinate");
  cmp_cmd->add_option("--box", box_s, "state box")->required();
  add_bounds(cmp_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "stochastic simulation");
  add_net(sim_cmd);
  sim_cmd->add_option("--x0", x0_s, "initial state a,b,...")->required();
  double t_max = 1e18;
  std::size_t max_jumps = 10000;
  sim_cmd->add_option("--t-max", t_max, "time horizon");
  sim_cmd->add_option("--max-jumps", max_jumps, "jump limit");
  sim_cmd->add_option("--seed", seed, "RNG seed");
  bool csv = false;
  sim_cmd->add_flag("--csv", csv, "CSV trajectory output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sum->parsed()) return cmd_sum(sum_args, as_json);

    Loaded l(file);
    ClosureConfig cfg{max_summands,
                      coord_cap >= 0 ? std::optional<Coord>(coord_cap)
                                     : std::nullopt};

    if (closure_cmd->parsed()) {
      ClosureSet c = closure(l.net.reactions(), l.net.dimension(), cfg);
      std::ostringstream text;
      text << "elements: " << c.elements.size()
           << "  saturated: " << (c.saturated ? "true" : "false") << "\n";
      for (const Reaction& r : c.elements)
        text << print_reaction(r, l.net.species_names()) << "\n";
      emit(as_json, envelope("closure", closure_json(c, l.net.species_names())),
           text.str());
      return 0;
    }

    if (reach_cmd->parsed()) {
      StateBox box{parse_vec(box_s, l.net.dimension(), "--box")};
      Vec x0 = parse_vec(from_s, l.net.dimension(), "--from");
      ReachResult r = reachable_set(l.net, x0, box);
      std::ostringstream text;
      text << "states: " << r.states.size()
           << "  clipped: " << (r.frontier_clipped ? "true" : "false") << "\n"
           << render_states(r.states);
      emit(as_json, envelope("reach", reach_json(r)), text.str());
      return 0;
    }

    if (leads_cmd->parsed()) {
      StateBox box{parse_vec(box_s, l.net.dimension(), "--box")};
      Vec x0 = parse_vec(from_s, l.net.dimension(), "--from");
      Vec xt = parse_vec(to_s, l.net.dimension(), "--to");
      LeadsToResult r = leads_to(l.net, x0, xt, box);
      std::ostringstream text;
      if (r.reachable) {
        text << "YES witness:";
        for (std::size_t k : r.witness)
          text << " ["
               << print_reaction(l.net.reactions()[k], l.net.species_names())
               << "]";
        text << "\n";
      } else {
        text << "NO_WITHIN_BOX\n";
      }
      emit(as_json, envelope("leads-to", leads_to_json(r)), text.str());
      return r.reachable ? 0 : 1;
    }

    if (elim_cmd->parsed() || reduce_cmd->parsed() || star_cmd->parsed() ||
        rev_cmd->parsed() || cmp_cmd->parsed()) {
      SpeciesSet u = parse_eliminate(l, eliminate_s);
      EliminationSpec spec{u, parse_fast(l, u, fast_s), cfg, cap};

      if (elim_cmd->parsed()) {
        EliminableVerdict v = is_eliminable(l.net, spec);
        json j = eliminable_json(v, l.net.species_names());
        std::ostringstream text;
        text << j["verdict"].get<std::string>() << " ("
             << v.qualification() << ")\n";
        if (!v.stuck_tokens.empty()) {
          text << "stuck tokens:";
          for (std::size_t t : v.stuck_tokens)
            text << " " << l.net.species_names()[t];
          text << "\n";
        }
        if (v.counterexample)
          text << "counterexample r0: "
               << print_reaction(v.counterexample->first,
                                 l.net.species_names())
               << "  r1: "
               << print_reaction(v.counterexample->second,
                                 l.net.species_names())
               << "\n";
        emit(as_json, envelope("check-eliminable", j), text.str());
        return v.eliminable() ? 0 : 1;
      }

      if (reduce_cmd->parsed()) {
        ReducedNetwork red = reduce(l.net, spec, force);
        std::ostringstream text;
        text << "base:\n";
        for (const Reaction& r : red.base)
          text << "  " << print_reaction(r, l.net.species_names()) << "\n";
        text << "generated:\n";
        for (const Reaction& r : red.generated)
          text << "  " << print_reaction(r, l.net.species_names()) << "\n";
        text << "truncated: " << (red.truncated ? "true" : "false") << "\n";
        emit(as_json,
             envelope("reduce", reduced_json(red, l.net.species_names())),
             text.str());
        return 0;
      }

      if (star_cmd->parsed()) {
        StarConditionReport rep = check_star_condition(l.net, spec);
        std::ostringstream text;
        text << (rep.holds() ? "HOLDS" : "FAILS") << " ("
             << rep.qualification() << ")\n"
             << "first clause: " << (rep.first_clause ? "true" : "false")
             << "\nsecond clause (essential): "
             << (rep.second_clause.holds() ? "true" : "false") << " ("
             << rep.second_clause.qualification() << ")\n";
        emit(as_json,
             envelope("check-star", star_json(rep, l.net.species_names())),
             text.str());
        return rep.holds() ? 0 : 1;
      }

      if (rev_cmd->parsed()) {
        ReducedNetwork red = reduce(l.net, spec, true);
        std::optional<std::vector<Reaction>> f0;
        if (!f0_s.empty()) f0 = parse_fast(l, u, f0_s);
        ReversibilityReport rep = reversibility_report(l.net, spec, red, f0);
        std::ostringstream text;
        text << "star: " << (rep.star.holds() ? "HOLDS" : "FAILS") << " ("
             << rep.star.qualification() << ")\n"
             << "R_0 reversible: " << rep.r0_reversible
             << "  weakly: " << rep.r0_weakly_reversible << "\n"
             << "generated reversible: " << rep.generated_reversible << "\n"
             << "reduced reversible: " << rep.reduced_reversible
             << "  weakly: " << rep.reduced_weakly_reversible << "\n"
             << "violations: " << rep.violations.size() << "\n";
        for (const auto& vline : rep.violations) text << "  " << vline << "\n";
        emit(as_json, envelope("check-reversibility", reversibility_json(rep)),
             text.str());
        return rep.ok() ? 0 : 1;
      }

      // compare-reach
      StateBox box{parse_vec(box_s, l.net.dimension(), "--box")};
      ReducedNetwork red = reduce(l.net, spec, true);
      ReachPreservationReport rep =
          reachability_preservation(l.net, spec, red, box);
      std::ostringstream text;
      text << "forward expansion ok: " << rep.forward_expansion_ok << "\n"
           << "equality on u-free endpoints: " << rep.equality << "\n"
           << "clause-2 hypotheses: " << rep.clause2_hypotheses << "\n"
           << "pairs checked: " << rep.pairs_checked << "\n";
      for (const auto& [x, t] : rep.only_in_original) {
        text << "  reachable only via original: ";
        for (std::size_t i = 0; i < x.size(); ++i)
          text << (i ? "," : "(") << x[i];
        text << ") -> ";
        for (std::size_t i = 0; i < t.size(); ++i)
          text << (i ? "," : "(") << t[i];
        text << ")\n";
      }
      emit(as_json, envelope("compare-reach", reach_preservation_json(rep)),
           text.str());
      return (rep.forward_expansion_ok && rep.equality) ? 0 : 1;
    }

    if (semi_cmd->parsed()) {
      json sj = json::parse(read_file(semi_file));
      SemiLinearSet s = semilinear_from_json(sj);
      ClosureSet c = closure(l.net.reactions(), l.net.dimension(), cfg);
      StateBox box{parse_vec(box_s, 2 * l.net.dimension(), "--box")};
      ClosureSemilinearReport rep = check_closure_in_semilinear(c, s, box);
      json j;
      j["closure_subset"] = rep.closure_subset;
      j["box_converse"] = rep.box_converse;
      j["converse_qualified"] = rep.converse_qualified;
      if (rep.escapee)
        j["escapee"] = reaction_json(*rep.escapee, l.net.species_names());
      if (rep.missing) j["missing"] = *rep.missing;
      std::ostringstream text;
      text << "closure subset of set: " << rep.closure_subset << "\n"
           << "set restricted to box subset of closure: " << rep.box_converse
           << (rep.converse_qualified ? " (SKIPPED: closure UP_TO_BOUND)"
                                      : " (closure saturated)")
           << "\n";
      emit(as_json, envelope("check-semilinear", j), text.str());
      return (rep.closure_subset && rep.box_converse) ? 0 : 1;
    }

    if (sim_cmd->parsed()) {
      Vec x0 = parse_vec(x0_s, l.net.dimension(), "--x0");
      RateAssignment rates = build_rate_assignment(l.doc, l.net);
      Trajectory t = simulate(l.net, rates, x0, t_max, max_jumps, seed);
      if (csv) {
        std::cout << "time,reaction";
        for (const auto& name : l.net.species_names()) std::cout << "," << name;
        std::cout << "\n";
        for (const Jump& j : t.jumps) {
          std::cout << j.time << "," << j.reaction;
          for (Coord c : j.state) std::cout << "," << c;
          std::cout << "\n";
        }
        return 0;
      }
      std::ostringstream text;
      text << "jumps: " << t.jumps.size() << "  rng: " << t.rng_id
           << "  seed: " << t.seed << "\n";
      emit(as_json, envelope("simulate", trajectory_json(t)), text.str());
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
