#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linklab {

using Vertex = std::size_t;
/// Unordered edge stored as (min, max).
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
  if (u == v)
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : n_(vertex_count) {}

  Graph(std::size_t vertex_count, const std::vector<Edge> &edges) : n_(vertex_count) {
    for (const auto &[u, v] : edges)
      if (!add_edge(u, v))
        throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<Edge> &edges() const { return edges_; }

  /// Adds {u,v}; returns false if it was already present.
  bool add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
      throw std::out_of_range("edge endpoint out of range");
    return edges_.insert(make_edge(u, v)).second;
  }

  bool has_edge(Vertex u, Vertex v) const { return u != v && edges_.contains(make_edge(u, v)); }

  std::size_t degree(Vertex v) const {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [v](const Edge &e) { return e.first == v || e.second == v; }));
  }

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::size_t n_ = 0;
  std::set<Edge> edges_;
};

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

inline Graph k6() { return complete_graph(6); }

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v)
    g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);         // outer cycle
    g.add_edge(i, i + 5);               // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return g;
}

/// Triangle of K6: three distinct vertices < 6, stored sorted.
struct K6Triangle {
  std::array<Vertex, 3> v;

  K6Triangle(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2] || v[2] >= 6)
      throw std::invalid_argument("not a triangle of K6");
  }

  bool contains(Vertex x) const { return std::find(v.begin(), v.end(), x) != v.end(); }

  /// The triangle on the three complementary vertices of {0..5}.
  K6Triangle dual() const {
    std::array<Vertex, 3> rest{};
    std::size_t k = 0;
    for (Vertex x = 0; x < 6; ++x)
      if (!contains(x))
        rest[k++] = x;
    return {rest[0], rest[1], rest[2]};
  }

  std::array<Edge, 3> edges() const {
    return {make_edge(v[0], v[1]), make_edge(v[1], v[2]), make_edge(v[0], v[2])};
  }

  auto operator<=>(const K6Triangle &) const = default;
};

/// The 20 triangles of K6 in lexicographic order.
inline std::vector<K6Triangle> k6_triangles() {
  std::vector<K6Triangle> out;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      for (Vertex c = b + 1; c < 6; ++c)
        out.emplace_back(a, b, c);
  return out;
}

/// A triangle and its dual; canonical when `t` contains vertex 0.
struct DualPair {
  K6Triangle t;
  K6Triangle t_bar;

  auto operator<=>(const DualPair &) const = default;
};

/// All 10 canonical dual pairs, ordered lexicographically by `t`.
inline std::vector<DualPair> dual_pairs() {
  std::vector<DualPair> out;
  for (const auto &t : k6_triangles())
    if (t.contains(0))
      out.push_back({t, t.dual()});
  return out;
}

} // namespace linklab
