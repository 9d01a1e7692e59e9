#include "netop/petri.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "netop/error.hpp"

namespace netop {

bool Marking::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](auto v) { return v == 0; });
}

namespace {

void same_size(const Marking& a, const Marking& b) {
  if (a.size() != b.size()) {
    throw arity_error("markings over " + std::to_string(a.size()) + " and " +
                      std::to_string(b.size()) + " species");
  }
}

}  // namespace

Marking operator+(const Marking& a, const Marking& b) {
  same_size(a, b);
  Marking out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > std::numeric_limits<std::uint64_t>::max() - a[i]) {
      throw overflow_error("marking coefficient overflow");
    }
    out[i] = a[i] + b[i];
  }
  return out;
}

Marking operator-(const Marking& a, const Marking& b) {
  same_size(a, b);
  Marking out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw domain_error("marking difference would be negative");
    out[i] = a[i] - b[i];
  }
  return out;
}

bool leq(const Marking& a, const Marking& b) {
  same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

PetriNet::PetriNet(std::vector<std::string> species, std::vector<Transition> transitions)
    : species_(std::move(species)), transitions_(std::move(transitions)) {
  for (std::size_t i = 0; i < species_.size(); ++i) {
    if (species_[i].empty()) throw parse_error("empty species name");
    for (std::size_t j = 0; j < i; ++j) {
      if (species_[i] == species_[j]) throw parse_error("duplicate species " + species_[i]);
    }
  }
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    if (t.source.size() != species_.size() || t.target.size() != species_.size()) {
      throw arity_error("transition " + t.name + " does not match the species list");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (t.name == transitions_[j].name) throw parse_error("duplicate transition " + t.name);
    }
  }
}

std::size_t PetriNet::species_index(const std::string& name) const {
  auto it = std::find(species_.begin(), species_.end(), name);
  if (it == species_.end()) throw domain_error("unknown species " + name);
  return static_cast<std::size_t>(it - species_.begin());
}

std::size_t PetriNet::transition_index(const std::string& name) const {
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    if (transitions_[i].name == name) return i;
  }
  throw domain_error("unknown transition " + name);
}

PetriNet PetriNet::with_transition(Transition t) const {
  auto ts = transitions_;
  ts.push_back(std::move(t));
  return PetriNet(species_, std::move(ts));
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

using Terms = std::vector<std::pair<std::string, std::uint64_t>>;

// "2a + b", "0", "a+a".
Terms parse_terms(const std::string& text) {
  const std::string s = trim(text);
  if (s == "0") return {};
  if (s.empty()) throw parse_error("empty multiset (write 0)");
  Terms out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  while (true) {
    skip();
    std::uint64_t coeff = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        const std::uint64_t d = static_cast<std::uint64_t>(s[i] - '0');
        if (coeff > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
          throw overflow_error("coefficient too large in '" + s + "'");
        }
        coeff = coeff * 10 + d;
        ++i;
      }
      skip();
    }
    if (i >= s.size() || !ident_start(s[i])) throw parse_error("expected a species in '" + s + "'");
    const std::size_t b = i;
    while (i < s.size() && ident_char(s[i])) ++i;
    out.emplace_back(s.substr(b, i - b), coeff);
    skip();
    if (i == s.size()) break;
    if (s[i] != '+') throw parse_error("unexpected '" + std::string(1, s[i]) + "' in '" + s + "'");
    ++i;
  }
  return out;
}

std::vector<std::string> parse_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ident_char(c)) {
      cur += c;
    } else {
      throw parse_error("unexpected '" + std::string(1, c) + "' in name list");
    }
  }
  return out;
}

Marking build(const std::vector<std::string>& species, const Terms& terms) {
  Marking m(species.size());
  for (const auto& [name, coeff] : terms) {
    auto it = std::find(species.begin(), species.end(), name);
    if (it == species.end()) throw parse_error("undeclared species " + name);
    auto& slot = m[static_cast<std::size_t>(it - species.begin())];
    if (coeff > std::numeric_limits<std::uint64_t>::max() - slot) {
      throw overflow_error("coefficient overflow for " + name);
    }
    slot += coeff;
  }
  return m;
}

}  // namespace

ParsedNet parse_petri(const std::string& text) {
  struct Raw {
    std::string name;
    Terms source, target;
    std::size_t line;
  };
  std::vector<Raw> raws;
  std::optional<std::vector<std::string>> declared_species;
  std::optional<std::vector<std::string>> declared_catalysts;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw parse_error("line " + std::to_string(lineno) + ": expected 'name: source -> target'");
    }
    const std::string head = trim(line.substr(0, colon));
    const std::string body = line.substr(colon + 1);
    try {
      if (head == "species") {
        if (declared_species) throw parse_error("repeated species line");
        declared_species = parse_names(body);
        continue;
      }
      if (head == "catalysts") {
        if (declared_catalysts) throw parse_error("repeated catalysts line");
        declared_catalysts = parse_names(body);
        continue;
      }
      if (head.empty() || !ident_start(head[0]) ||
          !std::all_of(head.begin(), head.end(), ident_char)) {
        throw parse_error("bad transition name '" + head + "'");
      }
      const auto arrow = body.find("->");
      if (arrow == std::string::npos) throw parse_error("missing '->'");
      raws.push_back({head, parse_terms(body.substr(0, arrow)), parse_terms(body.substr(arrow + 2)),
                      lineno});
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }

  std::vector<std::string> species;
  if (declared_species) {
    species = *declared_species;
  } else {
    auto note = [&](const Terms& ts) {
      for (const auto& t : ts) {
        if (std::find(species.begin(), species.end(), t.first) == species.end()) {
          species.push_back(t.first);
        }
      }
    };
    for (const auto& r : raws) {
      note(r.source);
      note(r.target);
    }
    if (declared_catalysts) {
      for (const auto& name : *declared_catalysts) note({{name, 1}});
    }
  }

  std::vector<Transition> ts;
  for (const auto& r : raws) {
    try {
      ts.push_back({r.name, build(species, r.source), build(species, r.target)});
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(r.line) + ": " + e.what());
    }
  }
  ParsedNet out{PetriNet(species, std::move(ts)), {}};
  if (declared_catalysts) {
    for (const auto& name : *declared_catalysts) {
      auto it = std::find(species.begin(), species.end(), name);
      if (it == species.end()) throw parse_error("declared catalyst " + name + " is not a species");
      out.declared_catalysts.push_back(static_cast<std::size_t>(it - species.begin()));
    }
    std::sort(out.declared_catalysts.begin(), out.declared_catalysts.end());
    const auto actual = catalysts(out.net);
    for (auto s : out.declared_catalysts) {
      if (!std::binary_search(actual.begin(), actual.end(), s)) {
        throw parse_error("declared catalyst " + species[s] + " is changed by some transition");
      }
    }
  }
  return out;
}

PetriNet load_petri(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_petri(buf.str()).net;
}

Marking parse_marking(const PetriNet& net, const std::string& text) {
  return build(net.species(), parse_terms(text));
}

std::string format_marking(const PetriNet& net, const Marking& m) {
  if (m.size() != net.species_count()) throw arity_error("marking does not match the net");
  std::string out;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (m[s] == 0) continue;
    if (!out.empty()) out += "+";
    if (m[s] != 1) out += std::to_string(m[s]);
    out += net.species()[s];
  }
  return out.empty() ? "0" : out;
}

std::string format_petri(const PetriNet& net) {
  std::string out = "species:";
  for (std::size_t s = 0; s < net.species_count(); ++s) {
    out += (s ? ", " : " ") + net.species()[s];
  }
  out += "\n";
  for (const auto& t : net.transitions()) {
    out += t.name + ": " + format_marking(net, t.source) + " -> " + format_marking(net, t.target) +
           "\n";
  }
  return out;
}

bool is_enabled(const PetriNet& net, const Marking& m, std::size_t t) {
  if (t >= net.transition_count()) throw domain_error("transition index out of range");
  return leq(net.transitions()[t].source, m);
}

std::vector<std::size_t> enabled(const PetriNet& net, const Marking& m) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < net.transition_count(); ++t) {
    if (is_enabled(net, m, t)) out.push_back(t);
  }
  return out;
}

Marking fire(const PetriNet& net, const Marking& m, std::size_t t) {
  if (!is_enabled(net, m, t)) {
    throw not_enabled_error(net.transitions()[t].name + " is not enabled at " +
                            format_marking(net, m));
  }
  const auto& tr = net.transitions()[t];
  return (m - tr.source) + tr.target;
}

ReachabilityGraph reachability_graph(const PetriNet& net, const Marking& m, std::size_t depth,
                                     std::size_t cap) {
  if (m.size() != net.species_count()) throw arity_error("marking does not match the net");
  ReachabilityGraph g;
  std::map<Marking, std::size_t> index;
  g.nodes.push_back(m);
  index.emplace(m, 0);
  std::size_t frontier_begin = 0;
  for (std::size_t d = 0; d < depth; ++d) {
    const std::size_t frontier_end = g.nodes.size();
    if (frontier_begin == frontier_end) break;
    for (std::size_t u = frontier_begin; u < frontier_end; ++u) {
      for (auto t : enabled(net, g.nodes[u])) {
        Marking next = fire(net, g.nodes[u], t);
        auto [it, fresh] = index.emplace(next, g.nodes.size());
        if (fresh) {
          if (g.nodes.size() >= cap) {
            throw overflow_error("reachability exceeds " + std::to_string(cap) + " markings");
          }
          g.nodes.push_back(std::move(next));
        }
        g.arcs.push_back({u, t, it->second});
      }
    }
    frontier_begin = frontier_end;
  }
  return g;
}

std::vector<Marking> reachable(const PetriNet& net, const Marking& m, std::size_t depth,
                               std::size_t cap) {
  auto nodes = reachability_graph(net, m, depth, cap).nodes;
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::vector<std::size_t> catalysts(const PetriNet& net) {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < net.species_count(); ++s) {
    const bool kept = std::all_of(net.transitions().begin(), net.transitions().end(),
                                  [s](const Transition& t) { return t.source[s] == t.target[s]; });
    if (kept) out.push_back(s);
  }
  return out;
}

void check_catalysts(const PetriNet& net, const std::vector<std::size_t>& c) {
  const auto actual = catalysts(net);
  for (auto s : c) {
    if (s >= net.species_count()) throw domain_error("species index out of range");
    if (!std::binary_search(actual.begin(), actual.end(), s)) {
      throw domain_error(net.species()[s] + " is not a catalyst");
    }
  }
}

CatalystGrade grade(const PetriNet& net, const std::vector<std::size_t>& c, const Marking& m) {
  check_catalysts(net, c);
  if (m.size() != net.species_count()) throw arity_error("marking does not match the net");
  CatalystGrade g;
  g.species = c;
  std::sort(g.species.begin(), g.species.end());
  g.species.erase(std::unique(g.species.begin(), g.species.end()), g.species.end());
  for (auto s : g.species) g.counts.push_back(m[s]);
  return g;
}

CatalystGrade operator+(const CatalystGrade& a, const CatalystGrade& b) {
  if (a.species != b.species) throw mismatch_error("grades over different catalyst sets");
  CatalystGrade out = a;
  for (std::size_t i = 0; i < out.counts.size(); ++i) {
    if (b.counts[i] > std::numeric_limits<std::uint64_t>::max() - out.counts[i]) {
      throw overflow_error("grade overflow");
    }
    out.counts[i] += b.counts[i];
  }
  return out;
}

Marking grade_marking(const PetriNet& net, const CatalystGrade& g) {
  Marking m = net.zero();
  for (std::size_t i = 0; i < g.species.size(); ++i) m[g.species[i]] = g.counts[i];
  return m;
}

Execution identity_exec(const Marking& m) { return Execution{m, {}, m}; }

Execution from_firings(const PetriNet& net, const Marking& start,
                       const std::vector<std::size_t>& transitions) {
  if (start.size() != net.species_count()) throw arity_error("marking does not match the net");
  Execution e{start, {}, start};
  for (auto t : transitions) {
    Marking next = fire(net, e.end, t);
    e.steps.push_back({t, e.end - net.transitions()[t].source});
    e.end = std::move(next);
  }
  return e;
}

Execution from_firings(const PetriNet& net, const Marking& start,
                       const std::vector<std::string>& transitions) {
  std::vector<std::size_t> idx;
  for (const auto& name : transitions) idx.push_back(net.transition_index(name));
  return from_firings(net, start, idx);
}

std::vector<Marking> trace(const PetriNet& net, const Execution& e) {
  if (e.start.size() != net.species_count() || e.end.size() != net.species_count()) {
    throw arity_error("execution does not match the net");
  }
  std::vector<Marking> out{e.start};
  for (std::size_t i = 0; i < e.steps.size(); ++i) {
    const auto& st = e.steps[i];
    if (st.transition >= net.transition_count()) throw domain_error("unknown transition index");
    const auto& tr = net.transitions()[st.transition];
    if (st.context + tr.source != out.back()) {
      throw mismatch_error("step " + std::to_string(i + 1) + " (" + tr.name +
                           ") does not fit the marking " + format_marking(net, out.back()));
    }
    out.push_back(st.context + tr.target);
  }
  if (out.back() != e.end) throw mismatch_error("stored end marking differs from the steps");
  return out;
}

void validate(const PetriNet& net, const Execution& e) { trace(net, e); }

Execution compose_exec(const Execution& e2, const Execution& e1) {
  if (e1.end != e2.start) throw mismatch_error("compose_exec: end of the first is not the start of the second");
  Execution out = e1;
  out.steps.insert(out.steps.end(), e2.steps.begin(), e2.steps.end());
  out.end = e2.end;
  return out;
}

Execution tensor_exec(const Execution& e, const Execution& e2) {
  Execution out{e.start + e2.start, {}, e.end + e2.end};
  for (const auto& st : e.steps) out.steps.push_back({st.transition, st.context + e2.start});
  for (const auto& st : e2.steps) out.steps.push_back({st.transition, st.context + e.end});
  return out;
}

Execution whisker(const Execution& e, const Marking& extra, Side) {
  Execution out{e.start + extra, {}, e.end + extra};
  for (const auto& st : e.steps) out.steps.push_back({st.transition, st.context + extra});
  return out;
}

Execution premonoidal_tensor(const PetriNet& net, const Execution& e, const Execution& e2,
                             Order order, const std::vector<std::size_t>& c) {
  const auto gi = grade(net, c, e.start);
  if (gi != grade(net, c, e2.start)) throw mismatch_error("premonoidal_tensor: grade mismatch");
  const Marking i = grade_marking(net, gi);
  const Marking a = e.start - i, b = e.end - i;
  const Marking a2 = e2.start - i, b2 = e2.end - i;
  if (order == Order::right_first) {
    return compose_exec(whisker(e, b2, Side::right), whisker(e2, a, Side::left));
  }
  return compose_exec(whisker(e2, b, Side::left), whisker(e, a2, Side::right));
}

std::vector<std::uint64_t> parikh(const PetriNet& net, const Execution& e) {
  std::vector<std::uint64_t> out(net.transition_count(), 0);
  for (const auto& st : e.steps) {
    if (st.transition >= out.size()) throw domain_error("unknown transition index");
    ++out[st.transition];
  }
  return out;
}

namespace {

std::vector<std::size_t> permute_species_word(const Permutation& sigma,
                                              const std::vector<std::size_t>& word) {
  std::vector<std::size_t> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) out[sigma(i)] = word[i];
  return out;
}

}  // namespace

IntGMorphism int_g_morphism(const PetriNet& net, const std::vector<std::size_t>& c,
                            const std::vector<std::size_t>& source_word, const Permutation& sigma,
                            const Execution& e) {
  auto g = grade(net, c, e.start);
  if (sigma.size() != source_word.size()) {
    throw arity_error("permutation on " + std::to_string(sigma.size()) + " tokens for a word of " +
                      std::to_string(source_word.size()));
  }
  CatalystGrade word_grade{g.species, std::vector<std::uint64_t>(g.species.size(), 0)};
  for (auto s : source_word) {
    auto it = std::lower_bound(g.species.begin(), g.species.end(), s);
    if (it == g.species.end() || *it != s) {
      throw domain_error("word letter " + (s < net.species_count() ? net.species()[s] : "?") +
                         " is not in the catalyst set");
    }
    ++word_grade.counts[static_cast<std::size_t>(it - g.species.begin())];
  }
  if (word_grade != g) throw mismatch_error("execution grade differs from the catalyst word");
  validate(net, e);
  return IntGMorphism{g.species, source_word, permute_species_word(sigma, source_word), sigma, e};
}

IntGMorphism compose_int_g(const IntGMorphism& f2, const IntGMorphism& f1) {
  if (f1.catalyst_set != f2.catalyst_set) throw mismatch_error("different catalyst sets");
  if (f1.target_word != f2.source_word) throw mismatch_error("catalyst words do not match");
  return IntGMorphism{f1.catalyst_set, f1.source_word, f2.target_word,
                      compose(f2.sigma, f1.sigma), compose_exec(f2.exec, f1.exec)};
}

IntGMorphism tensor_int_g(const IntGMorphism& f, const IntGMorphism& g) {
  if (f.catalyst_set != g.catalyst_set) throw mismatch_error("different catalyst sets");
  auto cat = [](std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  return IntGMorphism{f.catalyst_set, cat(f.source_word, g.source_word),
                      cat(f.target_word, g.target_word), block_sum(f.sigma, g.sigma),
                      tensor_exec(f.exec, g.exec)};
}

std::string to_string(const PetriNet& net, const Execution& e) {
  std::string out = format_marking(net, e.start);
  for (const auto& st : e.steps) {
    out += " --" + net.transitions()[st.transition].name + " [" + format_marking(net, st.context) +
           "]--> ";
    out += format_marking(net, st.context + net.transitions()[st.transition].target);
  }
  return out;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string net_to_dot(const PetriNet& net) {
  const auto cats = catalysts(net);
  std::ostringstream out;
  out << "digraph petri {\n  rankdir=LR;\n";
  for (std::size_t s = 0; s < net.species_count(); ++s) {
    out << "  " << quote("s:" + net.species()[s]) << " [shape=circle, label="
        << quote(net.species()[s]);
    if (std::binary_search(cats.begin(), cats.end(), s)) out << ", color=red";
    out << "];\n";
  }
  for (const auto& t : net.transitions()) {
    out << "  " << quote("t:" + t.name) << " [shape=box, label=" << quote(t.name) << "];\n";
  }
  auto arcs = [&](const std::string& from, const std::string& to, std::uint64_t k) {
    if (k == 0) return;
    out << "  " << quote(from) << " -> " << quote(to);
    if (k > 1) out << " [label=\"" << k << "\"]";
    out << ";\n";
  };
  for (const auto& t : net.transitions()) {
    for (std::size_t s = 0; s < net.species_count(); ++s) {
      arcs("s:" + net.species()[s], "t:" + t.name, t.source[s]);
    }
    for (std::size_t s = 0; s < net.species_count(); ++s) {
      arcs("t:" + t.name, "s:" + net.species()[s], t.target[s]);
    }
  }
  out << "}\n";
  return out.str();
}

std::string reachability_to_dot(const PetriNet& net, const ReachabilityGraph& g) {
  std::ostringstream out;
  out << "digraph reachability {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  m" << i << " [label=" << quote(format_marking(net, g.nodes[i]));
    if (i == 0) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& a : g.arcs) {
    out << "  m" << a.from << " -> m" << a.to
        << " [label=" << quote(net.transitions()[a.transition].name) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace netop
