#include "rsum/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace rsum {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line_no,
             std::vector<std::string>& species, bool allow_new_species)
      : text_(text),
        line_(line_no),
        species_(species),
        allow_new_(allow_new_species) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek_arrow() {
    skip_ws();
    return text_.substr(pos_).starts_with("->") ||
           text_.substr(pos_).starts_with("<=>");
  }

  // "->" or "<=>"
  bool parse_arrow(bool& bidirectional) {
    skip_ws();
    if (text_.substr(pos_).starts_with("->")) {
      pos_ += 2;
      bidirectional = false;
      return true;
    }
    if (text_.substr(pos_).starts_with("<=>")) {
      pos_ += 3;
      bidirectional = true;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line_, pos_ + 1, msg);
  }

  std::optional<Coord> try_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) return std::nullopt;
    Coord value = 0;
    auto sv = text_.substr(start, pos_ - start);
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  std::optional<std::string> try_name() {
    skip_ws();
    if (pos_ >= text_.size() || !name_start(text_[pos_])) return std::nullopt;
    std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t species_index(const std::string& name) {
    for (std::size_t i = 0; i < species_.size(); ++i)
      if (species_[i] == name) return i;
    if (!allow_new_) fail("unknown species: " + name);
    species_.push_back(name);
    return species_.size() - 1;
  }

  // complex := "0" | term ("+" term)*; term := [int] name
  // Returns sparse (index, count) pairs; resolution to a dense vector
  // happens after the whole document fixes the dimension.
  std::vector<std::pair<std::size_t, Coord>> parse_complex() {
    std::vector<std::pair<std::size_t, Coord>> terms;
    skip_ws();
    for (;;) {
      auto coeff = try_integer();
      if (coeff && *coeff == 0) {
        if (!terms.empty()) fail("0 cannot appear inside a complex");
        skip_ws();
        if (pos_ < text_.size() && (name_start(text_[pos_]) || text_[pos_] == '+'))
          fail("0 denotes the empty complex and takes no terms");
        return terms;
      }
      auto name = try_name();
      if (!name) {
        if (coeff) fail("expected species name after coefficient");
        fail("expected complex");
      }
      terms.emplace_back(species_index(*name), coeff.value_or(1));
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        continue;
      }
      return terms;
    }
  }

  double parse_number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != ',')
      ++pos_;
    if (pos_ == start) fail("expected a rate value");
    std::string token(text_.substr(start, pos_ - start));
    try {
      std::size_t used = 0;
      double v = std::stod(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      return v;
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed rate value: " + token);
    }
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::vector<std::string>& species_;
  bool allow_new_;
};

Vec densify(const std::vector<std::pair<std::size_t, Coord>>& terms,
            std::size_t n) {
  Vec v = zero_vec(n);
  for (const auto& [idx, count] : terms) v[idx] = checked_add(v[idx], count);
  return v;
}

struct RawReaction {
  std::vector<std::pair<std::size_t, Coord>> reactant;
  std::vector<std::pair<std::size_t, Coord>> product;
  bool bidirectional = false;
  std::optional<double> rate_fwd;
  std::optional<double> rate_bwd;
  std::size_t line = 0;
};

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

NetworkDocument parse_lines(const std::vector<std::string>& lines,
                            bool args_mode) {
  NetworkDocument doc;
  bool species_declared = false;
  std::vector<RawReaction> raw;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view body = strip_comment(lines[li]);
    std::size_t line_no = li + 1;
    LineParser probe(body, line_no, doc.species, true);
    if (probe.at_end()) continue;

    bool is_reaction = body.find("->") != std::string_view::npos ||
                       body.find("<=>") != std::string_view::npos;

    if (!is_reaction) {
      LineParser lp(body, line_no, doc.species, true);
      auto keyword = lp.try_name();
      if (keyword == "species") {
        if (!raw.empty())
          lp.fail("species declaration must precede all reactions");
        species_declared = true;
        for (;;) {
          auto name = lp.try_name();
          if (!name) lp.fail("expected species name");
          if (std::find(doc.species.begin(), doc.species.end(), *name) !=
              doc.species.end())
            lp.fail("duplicate species name: " + *name);
          doc.species.push_back(*name);
          if (!lp.consume(',')) break;
        }
        if (!lp.at_end()) lp.fail("trailing input after species declaration");
        continue;
      }
      if (keyword == "set") {
        LineParser sp(body, line_no, doc.species, !species_declared);
        (void)sp.try_name();  // "set"
        auto set_name = sp.try_name();
        if (!set_name) sp.fail("expected set name");
        if (!sp.consume('=')) sp.fail("expected '=' in set declaration");
        std::vector<std::string> members;
        for (;;) {
          auto name = sp.try_name();
          if (!name) sp.fail("expected species name");
          members.push_back(*name);
          if (!sp.consume(',')) break;
        }
        if (!sp.at_end()) sp.fail("trailing input after set declaration");
        doc.sets[*set_name] = std::move(members);
        continue;
      }
      lp.fail("expected a reaction, 'species', or 'set'");
    }

    LineParser lp(body, line_no, doc.species, !species_declared);
    RawReaction r;
    r.line = line_no;
    r.reactant = lp.parse_complex();
    bool bidir = false;
    if (!lp.parse_arrow(bidir)) lp.fail("expected '->' or '<=>'");
    r.bidirectional = bidir;
    r.product = lp.parse_complex();
    if (lp.consume('@')) {
      r.rate_fwd = lp.parse_number();
      if (lp.consume(',')) {
        if (!bidir) lp.fail("one rate expected for '->'");
        r.rate_bwd = lp.parse_number();
      }
    }
    if (!lp.at_end()) lp.fail("trailing input after reaction");
    raw.push_back(std::move(r));
  }

  const std::size_t n = doc.species.size();
  std::set<Reaction> seen;
  for (const RawReaction& r : raw) {
    Vec reactant = densify(r.reactant, n);
    Vec product = densify(r.product, n);
    if (reactant == product)
      throw ParseError(r.line, 1, "reaction has zero net gain");
    Reaction fwd(reactant, product);
    if (!seen.insert(fwd).second)
      doc.warnings.push_back("line " + std::to_string(r.line) +
                             ": duplicate reaction");
    doc.reactions.push_back(fwd);
    doc.rates.push_back(r.rate_fwd);
    if (r.bidirectional) {
      Reaction bwd(product, reactant);
      if (!seen.insert(bwd).second)
        doc.warnings.push_back("line " + std::to_string(r.line) +
                               ": duplicate reaction");
      doc.reactions.push_back(bwd);
      doc.rates.push_back(r.rate_bwd);
    }
  }
  (void)args_mode;
  return doc;
}

}  // namespace

NetworkDocument parse_document(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  lines.push_back(cur);
  return parse_lines(lines, false);
}

NetworkDocument parse_reaction_args(const std::vector<std::string>& args) {
  return parse_lines(args, true);
}

ReactionNetwork NetworkDocument::to_network() const {
  return ReactionNetwork(species, reactions);
}

RateAssignment build_rate_assignment(const NetworkDocument& doc,
                                     const ReactionNetwork& net,
                                     double default_rate) {
  std::map<Reaction, double> table;
  for (std::size_t i = 0; i < doc.reactions.size(); ++i)
    if (doc.rates[i]) table[doc.reactions[i]] = *doc.rates[i];
  RateAssignment out;
  for (const Reaction& r : net.reactions()) {
    auto it = table.find(r);
    out.rates.push_back(it == table.end() ? default_rate : it->second);
  }
  return out;
}

std::string print_complex(const Vec& v,
                          const std::vector<std::string>& names) {
  if (v.size() != names.size())
    throw DimensionMismatch("print_complex: name table size mismatch");
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) {
      out += std::to_string(v[i]);
      out += ' ';
    }
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::string print_reaction(const Reaction& r,
                           const std::vector<std::string>& names) {
  return print_complex(r.reactant, names) + " -> " +
         print_complex(r.product, names);
}

std::string print_canonical(const ReactionNetwork& net) {
  std::ostringstream out;
  out << "species ";
  for (std::size_t i = 0; i < net.species_names().size(); ++i) {
    if (i) out << ", ";
    out << net.species_names()[i];
  }
  out << '\n';
  for (const Reaction& r : net.reactions())
    out << print_reaction(r, net.species_names()) << '\n';
  return out.str();
}

}  // namespace rsum
