#include "netop/green.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "netop/error.hpp"

namespace netop {

CommutationGraph::CommutationGraph(std::size_t vertices,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : adj_(vertices, 0) {
  if (vertices > max_components) {
    throw arity_error("commutation graph has " + std::to_string(vertices) +
                      " vertices; at most " + std::to_string(max_components) + " are supported");
  }
  for (auto [a, b] : edges) {
    if (a >= vertices || b >= vertices) throw domain_error("commutation edge out of range");
    if (a == b) throw domain_error("commutation graph may not have loops");
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
  }
}

std::size_t CommutationGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(__builtin_popcountll(adj_[v]));
}

std::size_t CommutationGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < size(); ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> CommutationGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      if (commute(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t KneserSpec::vertex_count() const {
  if (k > n) return 0;
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

std::vector<std::vector<std::size_t>> KneserSpec::vertices() const {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

CommutationGraph kneser_graph(std::size_t n, std::size_t k) {
  if (k > n) throw domain_error("kneser_graph needs k <= n");
  const auto vs = KneserSpec{n, k}.vertices();
  if (vs.size() > max_components) {
    throw arity_error("KG(" + std::to_string(n) + "," + std::to_string(k) + ") has " +
                      std::to_string(vs.size()) + " vertices");
  }
  std::vector<std::uint64_t> masks;
  for (const auto& s : vs) {
    std::uint64_t m = 0;
    for (auto x : s) m |= std::uint64_t{1} << x;
    masks.push_back(m);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if ((masks[a] & masks[b]) == 0) edges.emplace_back(a, b);
    }
  }
  return CommutationGraph(vs.size(), edges);
}

std::size_t pair_index(std::size_t n, const Edge& e) {
  if (e.hi >= n) throw domain_error("pair " + to_string(e) + " outside {1.." +
                                    std::to_string(n) + "}");
  const std::size_t i = e.lo, j = e.hi;
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Edge pair_at(std::size_t n, std::size_t index) {
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t row = n - i - 1;
    if (index < row) return Edge::make(i, i + 1 + index);
    index -= row;
  }
  throw domain_error("pair index out of range");
}

std::vector<std::size_t> kneser_map(const std::vector<std::size_t>& f, std::size_t n,
                                    std::size_t k) {
  std::vector<bool> hit(n, false);
  for (auto x : f) {
    if (x >= n || hit[x]) throw domain_error("kneser_map needs an injection into {1..n}");
    hit[x] = true;
  }
  const auto target = KneserSpec{n, k}.vertices();
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = i;
  std::vector<std::size_t> out;
  for (auto s : KneserSpec{f.size(), k}.vertices()) {
    for (auto& x : s) x = f[x];
    std::sort(s.begin(), s.end());
    out.push_back(index.at(s));
  }
  return out;
}

GreenContextPtr make_context(CommutationGraph graph, std::vector<MonoidSpec> monoids) {
  if (monoids.size() != graph.size()) {
    throw arity_error("need one monoid per component");
  }
  return std::make_shared<const GreenContext>(GreenContext{std::move(graph), std::move(monoids), {}});
}

GreenContextPtr uniform_context(CommutationGraph graph, const MonoidSpec& monoid) {
  std::vector<MonoidSpec> ms(graph.size(), monoid);
  return make_context(std::move(graph), std::move(ms));
}

GreenContextPtr kneser_context(std::size_t n, const MonoidSpec& monoid) {
  if (n > max_kneser_n) {
    throw arity_error("Kneser-based models support n <= " + std::to_string(max_kneser_n));
  }
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::string>, GreenContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, to_string(monoid));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto graph = n >= 2 ? kneser_graph(n, 2) : CommutationGraph(0, {});
  std::vector<MonoidSpec> ms(graph.size(), monoid);
  auto ctx = std::make_shared<const GreenContext>(GreenContext{std::move(graph), std::move(ms), n});
  cache.emplace(key, ctx);
  return ctx;
}

bool same_context(const GreenContext& a, const GreenContext& b) {
  return &a == &b || (a.graph == b.graph && a.monoids == b.monoids && a.kneser_n == b.kneser_n);
}

std::string to_string(Variety v) {
  switch (v) {
    case Variety::mon:
      return "mon";
    case Variety::cmon:
      return "cmon";
    case Variety::gmon:
      return "gmon";
  }
  return "?";
}

GreenWord::GreenWord(GreenContextPtr context, std::vector<Letter> letters)
    : context_(std::move(context)) {
  if (!context_) throw domain_error("green word needs a context");
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.component >= context_->graph.size()) {
      throw domain_error("letter component " + std::to_string(l.component + 1) +
                         " outside the commutation graph");
    }
    const auto& m = context_->monoids[l.component];
    check_element(m, l.value);
    if (l.value != unit(m)) letters_.push_back(l);
  }
  if (letters_.size() > max_word_length) {
    throw arity_error("word length " + std::to_string(letters_.size()) + " exceeds " +
                      std::to_string(max_word_length));
  }
}

bool operator==(const GreenWord& a, const GreenWord& b) {
  if (!a.context_ || !b.context_) return a.context_ == b.context_ && a.letters_ == b.letters_;
  return a.letters_ == b.letters_ && same_context(*a.context_, *b.context_);
}

namespace {

void require_same(const GreenWord& a, const GreenWord& b) {
  if (!same_context(a.context(), b.context())) {
    throw mismatch_error("words live over different commutation graphs or monoids");
  }
}

GreenWord build(const GreenContextPtr& ctx, std::vector<Letter> letters) {
  return GreenWord(ctx, std::move(letters));
}

// Merges each incoming letter into the nearest same-component letter it can be
// shuffled next to. A merge that produces the unit restarts the pass, since the
// deletion may expose new merges.
std::vector<Letter> reduce_letters(const GreenContext& ctx, std::vector<Letter> in) {
  while (true) {
    std::vector<Letter> out;
    bool restart = false;
    for (std::size_t i = 0; i < in.size() && !restart; ++i) {
      const Letter& l = in[i];
      const auto& m = ctx.monoids[l.component];
      if (l.value == unit(m)) continue;
      bool merged = false;
      for (std::size_t j = out.size(); j-- > 0;) {
        if (out[j].component == l.component) {
          out[j].value = mul(m, out[j].value, l.value);
          if (out[j].value == unit(m)) {
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
            out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(i) + 1, in.end());
            restart = true;
          }
          merged = true;
          break;
        }
        if (!ctx.graph.commute(out[j].component, l.component)) break;
      }
      if (!merged) out.push_back(l);
    }
    if (!restart) return out;
    in = std::move(out);
  }
}

std::vector<Letter> lex_least_order(const GreenContext& ctx, std::vector<Letter> rest) {
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j) {
        front = ctx.graph.commute(rest[j].component, rest[i].component);
      }
      if (front && (best == rest.size() || rest[i] < rest[best])) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

std::vector<Letter> graphic_letters(const GreenContext& ctx, std::vector<Letter> in) {
  for (std::size_t c = 0; c < ctx.monoids.size(); ++c) {
    if (!is_graphic(ctx.monoids[c]).graphic) {
      throw mismatch_error("component " + component_name(ctx, c) + " carries non-graphic " +
                           to_string(ctx.monoids[c]));
    }
  }
  // In a graphic monoid p * x = p whenever x divides p, so a later letter is
  // absorbed once the earlier letters of its component multiply to something
  // that absorbs it.
  std::vector<Letter> cur = reduce_letters(ctx, std::move(in));
  while (true) {
    std::vector<Letter> kept;
    std::map<std::size_t, MonoidElement> seen;
    for (const auto& l : cur) {
      const auto& m = ctx.monoids[l.component];
      auto it = seen.find(l.component);
      if (it != seen.end() && mul(m, it->second, l.value) == it->second) continue;
      if (it == seen.end()) {
        seen.emplace(l.component, l.value);
      } else {
        it->second = mul(m, it->second, l.value);
      }
      kept.push_back(l);
    }
    const bool changed = kept.size() != cur.size();
    cur = reduce_letters(ctx, std::move(kept));
    if (!changed) break;
  }
  return lex_least_order(ctx, std::move(cur));
}

std::vector<Letter> commutative_letters(const GreenContext& ctx, const std::vector<Letter>& in) {
  std::map<std::size_t, MonoidElement> acc;
  for (const auto& l : in) {
    const auto& m = ctx.monoids[l.component];
    if (!is_commutative(m)) throw mismatch_error("commutative variety needs commutative monoids");
    auto [it, fresh] = acc.emplace(l.component, l.value);
    if (!fresh) it->second = mul(m, it->second, l.value);
  }
  std::vector<Letter> out;
  for (auto [c, v] : acc) {
    if (v != unit(ctx.monoids[c])) out.push_back({c, v});
  }
  return out;
}

}  // namespace

std::vector<Letter> normalize_letters(const GreenContext& ctx, std::vector<Letter> letters,
                                      Variety v) {
  switch (v) {
    case Variety::mon:
      return lex_least_order(ctx, reduce_letters(ctx, std::move(letters)));
    case Variety::cmon:
      return commutative_letters(ctx, letters);
    case Variety::gmon:
      return graphic_letters(ctx, std::move(letters));
  }
  return letters;
}

GreenWord concat(const GreenWord& a, const GreenWord& b) {
  require_same(a, b);
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return build(a.context_ptr(), std::move(letters));
}

GreenWord multiply(const GreenWord& a, const GreenWord& b, Variety v) {
  require_same(a, b);
  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return build(a.context_ptr(), normalize_letters(a.context(), std::move(letters), v));
}

bool is_reduced(const GreenWord& w) {
  const auto& ls = w.letters();
  const auto& g = w.context().graph;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      if (ls[i].component != ls[j].component) continue;
      bool blocked = false;
      for (std::size_t l = i + 1; l < j && !blocked; ++l) {
        blocked = !g.commute(ls[i].component, ls[l].component);
      }
      if (!blocked) return false;
      break;
    }
  }
  return true;
}

GreenWord reduce(const GreenWord& w) {
  return build(w.context_ptr(), reduce_letters(w.context(), w.letters()));
}

GreenWord normal_form(const GreenWord& w) {
  return build(w.context_ptr(), normalize_letters(w.context(), w.letters(), Variety::mon));
}

GreenWord graphic_normal_form(const GreenWord& w) {
  return build(w.context_ptr(), normalize_letters(w.context(), w.letters(), Variety::gmon));
}

GreenWord commutative_normal_form(const GreenWord& w) {
  return build(w.context_ptr(), normalize_letters(w.context(), w.letters(), Variety::cmon));
}

GreenWord normalize(const GreenWord& w, Variety v) {
  return build(w.context_ptr(), normalize_letters(w.context(), w.letters(), v));
}

bool words_equal(const GreenWord& a, const GreenWord& b, Variety v) {
  require_same(a, b);
  return normalize(a, v).letters() == normalize(b, v).letters();
}

std::string component_name(const GreenContext& ctx, std::size_t component) {
  if (ctx.kneser_n) {
    const Edge e = pair_at(*ctx.kneser_n, component);
    const std::size_t i = e.lo + 1, j = e.hi + 1;
    if (j < 10) return "e" + std::to_string(i) + std::to_string(j);
    return "e" + std::to_string(i) + "-" + std::to_string(j);
  }
  return "c" + std::to_string(component + 1);
}

std::string format_word(const GreenWord& w) {
  std::string out;
  const auto& ctx = w.context();
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += component_name(ctx, l.component);
    if (ctx.monoids[l.component].kind != MonoidKind::boolean_or) {
      out += ":" + std::to_string(l.value);
    }
  }
  return out;
}

namespace {

std::size_t parse_number(const std::string& s, const std::string& token) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw parse_error("bad letter '" + token + "'");
  }
  if (s.size() > 18) throw parse_error("number too large in '" + token + "'");
  return static_cast<std::size_t>(std::stoull(s));
}

std::size_t parse_component(const GreenContext& ctx, const std::string& name,
                            const std::string& token) {
  if (ctx.kneser_n) {
    if (name.size() < 2 || name[0] != 'e') throw parse_error("expected eIJ, got '" + token + "'");
    std::string body = name.substr(1);
    std::size_t i = 0, j = 0;
    auto sep = body.find_first_of("-,");
    if (sep != std::string::npos) {
      i = parse_number(body.substr(0, sep), token);
      j = parse_number(body.substr(sep + 1), token);
    } else if (body.size() == 2) {
      i = parse_number(body.substr(0, 1), token);
      j = parse_number(body.substr(1, 1), token);
    } else {
      throw parse_error("ambiguous vertex pair in '" + token + "'; write e<i>-<j>");
    }
    if (i == 0 || j == 0 || i == j || i > *ctx.kneser_n || j > *ctx.kneser_n) {
      throw parse_error("vertex pair out of range in '" + token + "'");
    }
    return pair_index(*ctx.kneser_n, Edge::one_based(i, j));
  }
  if (name.size() < 2 || name[0] != 'c') throw parse_error("expected c<i>, got '" + token + "'");
  const std::size_t c = parse_number(name.substr(1), token);
  if (c == 0 || c > ctx.graph.size()) throw parse_error("component out of range in '" + token + "'");
  return c - 1;
}

}  // namespace

GreenWord parse_word(const std::string& text, const GreenContextPtr& context) {
  std::istringstream in(text);
  std::string token;
  std::vector<Letter> letters;
  while (in >> token) {
    auto colon = token.find(':');
    const std::string name = token.substr(0, colon);
    Letter l;
    l.component = parse_component(*context, name, token);
    l.value = 1;
    if (colon != std::string::npos) {
      const std::string v = token.substr(colon + 1);
      if (v == "T") {
        l.value = 1;
      } else if (v == "F") {
        l.value = 0;
      } else {
        l.value = parse_number(v, token);
      }
    }
    if (!in_carrier(context->monoids[l.component], l.value)) {
      throw parse_error("value outside the component monoid in '" + token + "'");
    }
    letters.push_back(l);
  }
  return GreenWord(context, std::move(letters));
}

}  // namespace netop
