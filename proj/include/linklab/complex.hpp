#pragma once

#include "linklab/graph.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>

namespace linklab {

/// Desk-scale guards for the exhaustive enumerations. Adjustable per call.
struct Limits {
  std::size_t max_cycle_vertices = 9;
  std::size_t max_faces = 40;
  std::size_t max_cycle_rank = 12;
  std::size_t max_minor_vertices = 12;
};

class LimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Oriented triangular face; the vertex order is its orientation.
struct Face {
  std::array<Vertex, 3> v;

  bool contains(Vertex x) const { return std::find(v.begin(), v.end(), x) != v.end(); }
  std::array<Edge, 3> edges() const {
    return {make_edge(v[0], v[1]), make_edge(v[1], v[2]), make_edge(v[2], v[0])};
  }
  /// +1 if the face boundary traverses `e` from e.first to e.second, -1 if
  /// the other way, 0 if the edge is not on the face.
  int edge_direction(const Edge &e) const {
    for (std::size_t i = 0; i < 3; ++i) {
      const Vertex a = v[i], b = v[(i + 1) % 3];
      if (a == e.first && b == e.second)
        return 1;
      if (a == e.second && b == e.first)
        return -1;
    }
    return 0;
  }
  friend bool operator==(const Face &, const Face &) = default;
};

/// Abstract 2-complex: vertices, indexed edges, indexed oriented faces.
class TwoComplex {
public:
  TwoComplex(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Face> faces,
             std::optional<std::pair<Vertex, Vertex>> apexes = std::nullopt)
      : n_(vertex_count), edges_(std::move(edges)), faces_(std::move(faces)), apexes_(apexes) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto e = make_edge(edges_[i].first, edges_[i].second);
      if (e.second >= n_)
        throw std::out_of_range("edge endpoint out of range");
      if (!edge_index_.emplace(e, i).second)
        throw std::invalid_argument("duplicate edge in complex");
      edges_[i] = e;
    }
    std::set<std::array<Vertex, 3>> seen;
    for (const auto &f : faces_) {
      for (const auto &e : f.edges())
        if (!edge_index_.contains(e))
          throw std::invalid_argument("face edge missing from edge list");
      auto key = f.v;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second)
        throw std::invalid_argument("duplicate face in complex");
    }
  }

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Face> &faces() const { return faces_; }
  const std::optional<std::pair<Vertex, Vertex>> &apexes() const { return apexes_; }

  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
    const auto it = edge_index_.find(make_edge(u, v));
    if (it == edge_index_.end())
      return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> face_index(Vertex a, Vertex b, Vertex c) const {
    std::array<Vertex, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      auto k = faces_[i].v;
      std::sort(k.begin(), k.end());
      if (k == key)
        return i;
    }
    return std::nullopt;
  }

  Graph one_skeleton() const { return Graph(n_, edges_); }

  long euler_characteristic() const {
    return static_cast<long>(n_) - static_cast<long>(edges_.size()) +
           static_cast<long>(faces_.size());
  }

  friend bool operator==(const TwoComplex &a, const TwoComplex &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.faces_ == b.faces_ && a.apexes_ == b.apexes_;
  }

private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::optional<std::pair<Vertex, Vertex>> apexes_;
  std::map<Edge, std::size_t> edge_index_;
};

/// Suspension S(g): apexes a = n, b = n + 1. Edges are E(g) in order, then
/// {v,a} for all v, then {v,b} for all v. Each edge {u,v} yields the faces
/// (u,v,a) and (u,v,b), in that order.
inline TwoComplex suspension(const Graph &g) {
  const std::size_t n = g.vertex_count();
  const Vertex a = n, b = n + 1;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex v = 0; v < n; ++v)
    edges.push_back({v, a});
  for (Vertex v = 0; v < n; ++v)
    edges.push_back({v, b});
  std::vector<Face> faces;
  for (const auto &[u, v] : g.edges()) {
    faces.push_back({{u, v, a}});
    faces.push_back({{u, v, b}});
  }
  return TwoComplex(n + 2, std::move(edges), std::move(faces), std::pair{a, b});
}

/// Base graph of a suspension complex: the edges avoiding both apexes.
inline Graph suspension_base(const TwoComplex &c) {
  if (!c.apexes())
    throw std::invalid_argument("complex is not a suspension");
  const auto [a, b] = *c.apexes();
  Graph g(c.vertex_count() - 2);
  for (const auto &[u, v] : c.edges())
    if (u != a && u != b && v != a && v != b)
      g.add_edge(u, v);
  return g;
}

/// Closed simple cycle of the 1-skeleton in canonical form: starts at its
/// smallest vertex and the second vertex is smaller than the last.
struct AbstractOneCycle {
  std::vector<Vertex> vertices;

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      out.push_back(make_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
    return out;
  }
  auto operator<=>(const AbstractOneCycle &) const = default;
};

/// Set of faces with an orientation flag (+1/-1) per face.
struct AbstractTwoCycle {
  std::vector<std::size_t> faces; ///< sorted face indices
  std::vector<int> orientation;   ///< parallel to `faces`

  auto operator<=>(const AbstractTwoCycle &) const = default;
};

/// Mod-2 boundary: edge indices covered an odd number of times.
inline std::vector<std::size_t> boundary_mod2(const TwoComplex &c,
                                              std::span<const std::size_t> faces) {
  std::vector<int> count(c.edges().size(), 0);
  for (const auto f : faces)
    for (const auto &e : c.faces()[f].edges())
      ++count[*c.edge_index(e.first, e.second)];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count.size(); ++i)
    if (count[i] % 2)
      out.push_back(i);
  return out;
}

/// Integral boundary of an oriented face set as per-edge coefficients (edges
/// directed from lower to higher vertex).
inline std::vector<long> boundary_signed(const TwoComplex &c, const AbstractTwoCycle &z) {
  std::vector<long> coeff(c.edges().size(), 0);
  for (std::size_t k = 0; k < z.faces.size(); ++k) {
    const auto &f = c.faces()[z.faces[k]];
    for (const auto &e : f.edges())
      coeff[*c.edge_index(e.first, e.second)] += z.orientation[k] * f.edge_direction(e);
  }
  return coeff;
}

inline bool is_zero_chain(std::span<const long> chain) {
  return std::all_of(chain.begin(), chain.end(), [](long x) { return x == 0; });
}

/// Orients a face set by breadth-first propagation across shared edges so
/// that the integral boundary vanishes. Each component starts at +1 on its
/// smallest face. Returns nullopt if no such orientation exists.
inline std::optional<AbstractTwoCycle> orient_faces(const TwoComplex &c,
                                                    std::vector<std::size_t> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::map<Edge, std::vector<std::size_t>> by_edge; // edge -> positions in `faces`
  for (std::size_t k = 0; k < faces.size(); ++k)
    for (const auto &e : c.faces()[faces[k]].edges())
      by_edge[e].push_back(k);

  std::vector<int> orient(faces.size(), 0);
  for (std::size_t start = 0; start < faces.size(); ++start) {
    if (orient[start] != 0)
      continue;
    orient[start] = 1;
    std::queue<std::size_t> todo;
    todo.push(start);
    while (!todo.empty()) {
      const std::size_t k = todo.front();
      todo.pop();
      const auto &f = c.faces()[faces[k]];
      for (const auto &e : f.edges()) {
        const int mine = orient[k] * f.edge_direction(e);
        for (const auto j : by_edge[e]) {
          if (j == k)
            continue;
          const int wanted = -mine * c.faces()[faces[j]].edge_direction(e);
          if (orient[j] == 0) {
            orient[j] = wanted;
            todo.push(j);
          } else if (orient[j] != wanted) {
            return std::nullopt;
          }
        }
      }
    }
  }
  AbstractTwoCycle z{std::move(faces), std::move(orient)};
  if (!is_zero_chain(boundary_signed(c, z)))
    return std::nullopt;
  return z;
}

/// The six faces of S(t) inside a suspension complex, oriented so that the
/// integral boundary vanishes.
inline AbstractTwoCycle suspension_two_cycle(const TwoComplex &c, const K6Triangle &t) {
  if (!c.apexes())
    throw std::invalid_argument("complex is not a suspension");
  const auto [a, b] = *c.apexes();
  std::vector<std::size_t> faces;
  for (const auto &[u, v] : t.edges()) {
    if (u >= c.vertex_count() - 2 || v >= c.vertex_count() - 2 || !c.edge_index(u, v))
      throw std::invalid_argument("triangle edge absent from the base graph");
    for (const Vertex apex : {a, b}) {
      const auto f = c.face_index(u, v, apex);
      if (!f)
        throw std::invalid_argument("suspension face missing for triangle edge");
      faces.push_back(*f);
    }
  }
  auto z = orient_faces(c, std::move(faces));
  if (!z)
    throw std::logic_error("suspension of a triangle failed to orient");
  return *z;
}

/// Vertices touched by a face set.
inline std::set<Vertex> support_vertices(const TwoComplex &c, std::span<const std::size_t> faces) {
  std::set<Vertex> out;
  for (const auto f : faces)
    out.insert(c.faces()[f].v.begin(), c.faces()[f].v.end());
  return out;
}

/// Euler characteristic of the subcomplex spanned by a face set.
inline long euler_characteristic(const TwoComplex &c, std::span<const std::size_t> faces) {
  std::set<Edge> edges;
  for (const auto f : faces)
    for (const auto &e : c.faces()[f].edges())
      edges.insert(e);
  return static_cast<long>(support_vertices(c, faces).size()) - static_cast<long>(edges.size()) +
         static_cast<long>(faces.size());
}

/// All simple cycles (length >= 3) of the complex's 1-skeleton, canonical and
/// sorted.
inline std::vector<AbstractOneCycle> enumerate_one_cycles(const Graph &g, const Limits &lim = {}) {
  const std::size_t n = g.vertex_count();
  if (n > lim.max_cycle_vertices)
    throw LimitExceeded("cycle enumeration limited to " + std::to_string(lim.max_cycle_vertices) +
                        " vertices");
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto &[u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto &a : adj)
    std::sort(a.begin(), a.end());

  std::vector<AbstractOneCycle> out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(n, false);
  // Cycles rooted at their smallest vertex `s`; only larger vertices are used.
  auto dfs = [&](auto &&self, Vertex s, Vertex v) -> void {
    for (const Vertex w : adj[v]) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) {
        out.push_back({path});
      } else if (w > s && !on_path[w]) {
        on_path[w] = true;
        path.push_back(w);
        self(self, s, w);
        path.pop_back();
        on_path[w] = false;
      }
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    on_path[s] = true;
    dfs(dfs, s, s);
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<AbstractOneCycle> enumerate_one_cycles(const TwoComplex &c,
                                                          const Limits &lim = {}) {
  return enumerate_one_cycles(c.one_skeleton(), lim);
}

/// Basis of the kernel of the mod-2 boundary map, each vector a face bitmask.
inline std::vector<std::uint64_t> mod2_cycle_basis(const TwoComplex &c, const Limits &lim = {}) {
  const std::size_t nf = c.faces().size();
  if (nf > lim.max_faces || nf > 64)
    throw LimitExceeded("mod-2 cycle space limited to " + std::to_string(lim.max_faces) + " faces");
  // One row per edge, bits indexed by face.
  std::vector<std::uint64_t> rows(c.edges().size(), 0);
  for (std::size_t f = 0; f < nf; ++f)
    for (const auto &e : c.faces()[f].edges())
      rows[*c.edge_index(e.first, e.second)] ^= std::uint64_t{1} << f;

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < nf && r < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t p = r;
    while (p < rows.size() && !(rows[p] & bit))
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] & bit))
        rows[i] ^= rows[r];
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<std::uint64_t> basis;
  for (std::size_t free = 0; free < nf; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end())
      continue;
    std::uint64_t v = std::uint64_t{1} << free;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (rows[i] & (std::uint64_t{1} << free))
        v |= std::uint64_t{1} << pivot_col[i];
    basis.push_back(v);
  }
  if (basis.size() > lim.max_cycle_rank)
    throw LimitExceeded("mod-2 cycle rank " + std::to_string(basis.size()) + " exceeds " +
                        std::to_string(lim.max_cycle_rank));
  return basis;
}

/// All vectors of the mod-2 kernel (including zero), in Gray-code order.
inline std::vector<std::uint64_t> mod2_cycles(const TwoComplex &c, const Limits &lim = {}) {
  const auto basis = mod2_cycle_basis(c, lim);
  std::vector<std::uint64_t> out{0};
  std::uint64_t cur = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << basis.size()); ++i) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(cur);
  }
  return out;
}

inline std::vector<std::size_t> mask_to_faces(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; mask; ++f, mask >>= 1)
    if (mask & 1)
      out.push_back(f);
  return out;
}

/// Closed-surface test on a face set: every covered edge lies on exactly two
/// faces and the link of every vertex is one circle. Orientability is
/// checked separately.
inline bool is_closed_surface(const TwoComplex &c, std::span<const std::size_t> faces) {
  if (faces.empty())
    return false;
  std::map<Edge, int> cover;
  for (const auto f : faces)
    for (const auto &e : c.faces()[f].edges())
      ++cover[e];
  for (const auto &[e, k] : cover)
    if (k != 2)
      return false;

  for (const Vertex v : support_vertices(c, faces)) {
    // Link of v: one edge per incident face, joining the other two corners.
    std::map<Vertex, std::vector<Vertex>> link;
    for (const auto f : faces) {
      const auto &fv = c.faces()[f].v;
      if (!c.faces()[f].contains(v))
        continue;
      std::array<Vertex, 2> other{};
      std::size_t k = 0;
      for (const auto x : fv)
        if (x != v)
          other[k++] = x;
      link[other[0]].push_back(other[1]);
      link[other[1]].push_back(other[0]);
    }
    std::set<Vertex> seen{link.begin()->first};
    std::vector<Vertex> stack{link.begin()->first};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const Vertex y : link[x])
        if (seen.insert(y).second)
          stack.push_back(y);
    }
    if (seen.size() != link.size())
      return false;
  }
  return true;
}

/// Nonzero mod-2 two-cycles whose support is a closed orientable surface,
/// each returned with a consistent orientation; sorted by face set.
inline std::vector<AbstractTwoCycle> surface_two_cycles(const TwoComplex &c, const Limits &lim = {}) {
  std::vector<AbstractTwoCycle> out;
  for (const auto mask : mod2_cycles(c, lim)) {
    if (!mask)
      continue;
    const auto faces = mask_to_faces(mask);
    if (!is_closed_surface(c, faces))
      continue;
    if (auto z = orient_faces(c, faces))
      out.push_back(std::move(*z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CyclePair {
  AbstractOneCycle one;
  AbstractTwoCycle two;
};

/// Every (1-cycle, surface 2-cycle) pair of S(K6) with disjoint supports.
inline std::vector<CyclePair> lemma32_pairs(const TwoComplex &c, const Limits &lim = {}) {
  if (!(c == suspension(k6())))
    throw std::invalid_argument("lemma32_pairs expects the suspension of K6");
  const auto ones = enumerate_one_cycles(c, lim);
  const auto twos = surface_two_cycles(c, lim);
  std::vector<CyclePair> out;
  for (const auto &two : twos) {
    const auto support = support_vertices(c, two.faces);
    for (const auto &one : ones)
      if (std::none_of(one.vertices.begin(), one.vertices.end(),
                       [&](Vertex v) { return support.contains(v); }))
        out.push_back({one, two});
  }
  return out;
}

} // namespace linklab
