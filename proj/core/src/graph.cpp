#include "gf4lc/graph.hpp"

#include <charconv>

namespace gf4lc {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxVertices) throw LengthError("graph size " + std::to_string(n) + " outside [1, 20]");
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.size()) throw LengthError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(int n) {
  check_size(n);
  n_ = static_cast<std::uint8_t>(n);
}

Graph::Graph(int n, std::span<const std::uint32_t> rows) : Graph(n) {
  if (rows.size() != static_cast<std::size_t>(n)) throw LengthError("graph: expected one row per vertex");
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~vertex_mask()) throw LengthError("graph: row bits beyond n");
    if ((rows[i] >> i) & 1) throw Error("graph: nonzero diagonal at vertex " + std::to_string(i));
    adj_[i] = rows[i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (adjacent(i, j) != adjacent(j, i)) throw Error("graph: adjacency is not symmetric");
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.adj_[i] = g.vertex_mask() & ~(1u << i);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n > 2) g.add_edge(0, n - 1);
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (int i = 0; i < n_; ++i) total += std::popcount(adj_[i]);
  return total / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error("graph: self-loops are not allowed");
  adj_[u] |= 1u << v;
  adj_[v] |= 1u << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  adj_[u] &= ~(1u << v);
  adj_[v] &= ~(1u << u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error("graph: self-loops are not allowed");
  adj_[u] ^= 1u << v;
  adj_[v] ^= 1u << u;
}

Graph Graph::relabeled(std::span<const std::uint8_t> perm) const {
  std::array<std::uint8_t, kMaxVertices> pos{};
  for (int i = 0; i < n_; ++i) pos[perm[i]] = static_cast<std::uint8_t>(i);
  Graph h(n_);
  for (int i = 0; i < n_; ++i) {
    std::uint32_t r = adj_[perm[i]], out = 0;
    while (r) {
      out |= 1u << pos[std::countr_zero(r)];
      r &= r - 1;
    }
    h.adj_[i] = out;
  }
  return h;
}

Graph graph_parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) throw ParseError("graph: expected '<n>:<bits>'");
  int n = 0;
  const auto head = text.substr(0, colon);
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc() || ptr != head.data() + head.size()) throw ParseError("graph: malformed vertex count '" + std::string(head) + "'");
  if (n < 1 || n > kMaxVertices) throw ParseError("graph: vertex count " + std::to_string(n) + " outside [1, 20]");
  const auto bits = text.substr(colon + 1);
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (bits.size() != expected)
    throw ParseError("graph: expected " + std::to_string(expected) + " bits, got " + std::to_string(bits.size()));
  Graph g(n);
  std::size_t t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++t) {
      if (bits[t] == '1') {
        g.add_edge(i, j);
      } else if (bits[t] != '0') {
        throw ParseError(std::string("graph: illegal character '") + bits[t] + "'");
      }
    }
  }
  return g;
}

std::string graph_format(const Graph& g) {
  std::string out = std::to_string(g.size()) + ':';
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) out += g.adjacent(i, j) ? '1' : '0';
  return out;
}

Graph local_complement(const Graph& g, Vertex v) {
  check_vertex(g, v);
  Graph h = g;
  const std::uint32_t nv = g.adj_[v];
  for (std::uint32_t rest = nv; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    h.adj_[u] ^= nv & ~(1u << u);
  }
  return h;
}

bool is_connected(const Graph& g) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    while (frontier) {
      next |= g.neighbours(std::countr_zero(frontier));
      frontier &= frontier - 1;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> out(g.size());
  for (int v = 0; v < g.size(); ++v) out[v] = g.degree(v);
  return out;
}

int min_degree(const Graph& g) {
  int best = g.size();
  for (int v = 0; v < g.size(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_anti_eulerian(const Graph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) % 2 == 0) return false;
  return true;
}

Graph extend(const Graph& g, std::uint32_t mask) {
  const int n = g.size();
  if (n + 1 > kMaxVertices) throw LengthError("extension would exceed 20 vertices");
  if (mask & ~g.vertex_mask()) throw LengthError("extension mask names missing vertices");
  Graph h(n + 1);
  for (int i = 0; i < n; ++i) {
    std::uint32_t r = g.row(i);
    while (r) {
      const int j = std::countr_zero(r);
      r &= r - 1;
      if (j > i) h.add_edge(i, j);
    }
  }
  for (std::uint32_t m = mask; m; m &= m - 1) h.add_edge(std::countr_zero(m), n);
  return h;
}

std::vector<Graph> extensions(const Graph& g) {
  if (g.size() + 1 > kMaxVertices) throw LengthError("extension would exceed 20 vertices");
  std::vector<Graph> out;
  const std::uint32_t full = g.vertex_mask();
  out.reserve(full);
  for (std::uint32_t mask = 1; mask <= full; ++mask) out.push_back(extend(g, mask));
  return out;
}

std::optional<Graph> anti_eulerian_closure(const Graph& g) {
  std::uint32_t even = 0;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) % 2 == 0) even |= 1u << v;
  Graph h = extend(g, even);
  if (!is_connected(h) || !is_anti_eulerian(h)) return std::nullopt;
  return h;
}

Graph disjoint_union(const Graph& x, const Graph& y) {
  const int n = x.size() + y.size();
  if (n > kMaxVertices) throw LengthError("disjoint union would exceed 20 vertices");
  Graph h(n);
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j)
      if (x.adjacent(i, j)) h.add_edge(i, j);
  for (int i = 0; i < y.size(); ++i)
    for (int j = i + 1; j < y.size(); ++j)
      if (y.adjacent(i, j)) h.add_edge(x.size() + i, x.size() + j);
  return h;
}

}  // namespace gf4lc
