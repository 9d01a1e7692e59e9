#pragma once

// Brute-force reference implementations the library is checked against. They
// share no code with the library beyond its value types.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace netop::oracle {

// A letter is (component, value). Words stay small, so plain vectors do.
using OLetter = std::pair<std::size_t, std::uint64_t>;
using OWord = std::vector<OLetter>;

// Closes w under swapping adjacent commuting letters and merging adjacent
// letters of one component, and returns the lexicographically least word of
// minimal length in the closure. Two words are equal in the graph product
// exactly when these agree.
inline OWord shuffle_class_min(const OWord& w,
                               const std::function<bool(std::size_t, std::size_t)>& commute,
                               const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& mul,
                               std::uint64_t unit) {
  OWord start;
  for (const auto& l : w) {
    if (l.second != unit) start.push_back(l);
  }
  std::set<OWord> seen{start};
  std::deque<OWord> queue{start};
  OWord best = start;
  while (!queue.empty()) {
    OWord cur = queue.front();
    queue.pop_front();
    if (cur.size() < best.size() || (cur.size() == best.size() && cur < best)) best = cur;
    auto visit = [&](OWord next) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    };
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const auto a = cur[i], b = cur[i + 1];
      if (a.first == b.first) {
        OWord next = cur;
        const auto v = mul(a.second, b.second);
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        if (v == unit) {
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
          next[i].second = v;
        }
        visit(std::move(next));
      } else if (commute(a.first, b.first)) {
        OWord next = cur;
        std::swap(next[i], next[i + 1]);
        visit(std::move(next));
      }
    }
  }
  return best;
}

using Adjacency = std::vector<std::vector<bool>>;

// Backtracking search for a vertex bijection preserving adjacency both ways.
inline bool isomorphic(const Adjacency& a, const Adjacency& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = a[u][v] == b[map[u]][t];
      if (!ok) continue;
      map[v] = static_cast<int>(t);
      used[t] = true;
      if (extend(v + 1)) return true;
      used[t] = false;
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

// Outer 5-cycle, spokes, inner pentagram.
inline Adjacency petersen() {
  Adjacency g(10, std::vector<bool>(10, false));
  auto link = [&](std::size_t i, std::size_t j) { g[i][j] = g[j][i] = true; };
  for (std::size_t i = 0; i < 5; ++i) {
    link(i, (i + 1) % 5);
    link(i, i + 5);
    link(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

// Petri firing over species names, independent of the library's dense markings.
using NamedMarking = std::map<std::string, std::uint64_t>;

struct NamedTransition {
  NamedMarking source;
  NamedMarking target;
};

inline bool fire(const NamedTransition& t, NamedMarking& m) {
  for (const auto& [s, k] : t.source) {
    if (m[s] < k) return false;
  }
  for (const auto& [s, k] : t.source) m[s] -= k;
  for (const auto& [s, k] : t.target) m[s] += k;
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  return true;
}

// Pointwise permutation composition on 0-based images.
inline std::vector<std::size_t> compose(const std::vector<std::size_t>& s,
                                        const std::vector<std::size_t>& t) {
  std::vector<std::size_t> out(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out[j] = s[t[j]];
  return out;
}

}  // namespace netop::oracle
