#pragma once

// Fixtures and brute-force oracles shared by the test programs. Everything
// here is deliberately naive so it can be trusted independently of the code
// under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gf4lc/gf4.hpp"
#include "gf4lc/graph.hpp"

namespace fixtures {

using gf4lc::Gf4Vector;
using gf4lc::Graph;

/// The extremal (6, 2^6, 4) Hexacode, generator matrix with entries 0 1 w W.
inline const char* kHexacode =
    "1 0 0 1 w w\n"
    "w 0 0 w W W\n"
    "0 1 0 w 1 w\n"
    "0 w 0 W w W\n"
    "0 0 1 w w 1\n"
    "0 0 w W W w\n";

/// Gamma + wI of a length-9 code whose automorphism group is trivial.
inline const char* kTrivialAut9 =
    "w 0 0 0 0 0 0 1 1\n"
    "0 w 0 0 1 0 0 1 0\n"
    "0 0 w 1 0 0 1 0 0\n"
    "0 0 1 w 0 0 0 1 1\n"
    "0 1 0 0 w 1 0 0 1\n"
    "0 0 0 0 1 w 1 0 1\n"
    "0 0 1 0 0 1 w 0 1\n"
    "1 1 0 1 0 0 0 w 0\n"
    "1 0 0 1 1 1 1 0 w\n";

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Hub 5 joined to 0..4, rim cycle 0-2-1-3-4-0.
inline Graph wheel() {
  return from_edges(6, {{5, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {0, 2}, {2, 1}, {1, 3}, {3, 4}, {4, 0}});
}

/// N_0 = {1, 2, 3} with edges {1,2} and {1,3} inside it.
inline Graph fig2() { return from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

/// Every labeled graph on n vertices.
inline std::vector<Graph> all_labeled(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (1ull << pairs.size()); ++m) {
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((m >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
    out.push_back(g);
  }
  return out;
}

inline bool connected_by_dfs(const Graph& g) {
  std::vector<int> stack{0};
  std::vector<bool> seen(g.size(), false);
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < g.size(); ++v)
      if (g.adjacent(u, v) && !seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.size();
}

inline std::vector<Graph> all_connected_labeled(int n) {
  std::vector<Graph> out;
  for (const auto& g : all_labeled(n))
    if (connected_by_dfs(g)) out.push_back(g);
  return out;
}

/// Adjacency bits of g under p, read row by row; used as a brute-force key.
inline std::string permuted_bits(const Graph& g, const std::vector<int>& p) {
  std::string s;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) s += g.adjacent(p[i], p[j]) ? '1' : '0';
  return s;
}

/// Lexicographically largest adjacency string over all n! relabelings.
inline std::string brute_canonical(const Graph& g) {
  std::vector<int> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do best = std::max(best, permuted_bits(g, p));
  while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline std::uint64_t brute_automorphisms(const Graph& g) {
  std::vector<int> p(g.size());
  std::iota(p.begin(), p.end(), 0);
  const std::string self = permuted_bits(g, p);
  std::uint64_t count = 0;
  do count += permuted_bits(g, p) == self;
  while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Connected unlabeled graphs on n vertices, one labeled copy each.
inline std::vector<Graph> connected_unlabeled(int n) {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const auto& g : all_connected_labeled(n))
    if (seen.insert(brute_canonical(g)).second) out.push_back(g);
  return out;
}

/// All codewords of the code spanned by rows, by naive subset sums.
inline std::vector<Gf4Vector> span(const std::vector<Gf4Vector>& rows) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::vector<Gf4Vector> out;
  const int n = rows.empty() ? 0 : rows.front().size();
  for (std::uint64_t m = 0; m < (1ull << rows.size()); ++m) {
    Gf4Vector v(n);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if ((m >> k) & 1) v += rows[k];
    if (seen.insert({v.a(), v.b()}).second) out.push_back(v);
  }
  return out;
}

inline std::vector<std::uint64_t> naive_weights(const std::vector<Gf4Vector>& rows) {
  const int n = rows.front().size();
  std::vector<std::uint64_t> a(n + 1, 0);
  for (const auto& v : span(rows)) {
    int w = 0;
    for (int i = 0; i < n; ++i) w += !v[i].is_zero();
    ++a[w];
  }
  return a;
}

/// Rows of Gamma + wI written out element by element.
inline std::vector<Gf4Vector> graph_rows(const Graph& g) {
  std::vector<Gf4Vector> rows;
  for (int i = 0; i < g.size(); ++i) {
    Gf4Vector r(g.size());
    for (int j = 0; j < g.size(); ++j)
      r.set(j, i == j ? gf4lc::Gf4Element::omega() : (g.adjacent(i, j) ? gf4lc::Gf4Element::one() : gf4lc::Gf4Element::zero()));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace fixtures
