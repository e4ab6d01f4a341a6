#pragma once
// Independent oracles and random instance generators shared by the unit
// suites and the acceptance runner. Nothing here calls the code it checks.

#include "linklab/cli.hpp"

#include <bitset>
#include <chrono>
#include <functional>

namespace linklab::testing {

/// Simple cycles by trying every cyclic ordering of every vertex subset.
inline std::size_t count_cycles_bruteforce(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::size_t directed = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1)
        vs.push_back(v);
    if (vs.size() < 3)
      continue;
    // Fix the smallest vertex first; permute the rest.
    do {
      bool ok = true;
      for (std::size_t i = 0; i < vs.size() && ok; ++i)
        ok = g.has_edge(vs[i], vs[(i + 1) % vs.size()]);
      directed += ok;
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return directed / 2;
}

/// Rank over GF(2) of the edge-by-face incidence matrix.
inline std::size_t boundary_rank_gf2(const TwoComplex &c) {
  std::vector<std::bitset<64>> rows;
  for (const auto &f : c.faces()) {
    std::bitset<64> r;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto e = *c.edge_index(f.v[k], f.v[(k + 1) % 3]);
      r.flip(e);
    }
    rows.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c.edges().size(); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](auto &r) { return r.test(col); });
    if (pivot == rows.end())
      continue;
    std::swap(*pivot, rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].test(col))
        rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

/// Every edge of the selected faces is used an even number of times.
inline bool closed_mod2(const TwoComplex &c, const std::vector<std::size_t> &faces) {
  std::map<Edge, int> count;
  for (const auto i : faces) {
    const auto &v = c.faces()[i].v;
    for (std::size_t k = 0; k < 3; ++k)
      ++count[make_edge(v[k], v[(k + 1) % 3])];
  }
  return std::all_of(count.begin(), count.end(), [](const auto &kv) { return kv.second % 2 == 0; });
}

/// Signed boundary of an oriented face set vanishes.
inline bool closed_signed(const TwoComplex &c, const AbstractTwoCycle &z) {
  std::map<std::pair<Vertex, Vertex>, long> flow;
  for (std::size_t i = 0; i < z.faces.size(); ++i) {
    auto v = c.faces()[z.faces[i]].v;
    if (z.orientation[i] < 0)
      std::swap(v[1], v[2]);
    for (std::size_t k = 0; k < 3; ++k) {
      const Vertex a = v[k], b = v[(k + 1) % 3];
      flow[{std::min(a, b), std::max(a, b)}] += a < b ? 1 : -1;
    }
  }
  return std::all_of(flow.begin(), flow.end(), [](const auto &kv) { return kv.second == 0; });
}

/// K6 minor by enumerating all labelings of vertices into six branch sets
/// (or none). Practical for up to 8 vertices.
inline bool has_k6_minor_bruteforce(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, 6);
  std::function<bool(std::size_t, int)> go = [&](std::size_t i, int used) -> bool {
    if (i == n) {
      if (used < 6)
        return false;
      for (int b = 0; b < 6; ++b) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
          if (label[v] == b)
            members.push_back(v);
        std::set<Vertex> seen{members[0]};
        std::vector<Vertex> stack{members[0]};
        while (!stack.empty()) {
          const auto x = stack.back();
          stack.pop_back();
          for (const auto y : members)
            if (!seen.contains(y) && g.has_edge(x, y)) {
              seen.insert(y);
              stack.push_back(y);
            }
        }
        if (seen.size() != members.size())
          return false;
      }
      std::set<std::pair<int, int>> touching;
      for (const auto &[u, v] : g.edges())
        if (label[u] < 6 && label[v] < 6 && label[u] != label[v])
          touching.insert({std::min(label[u], label[v]), std::max(label[u], label[v])});
      return touching.size() == 15;
    }
    if (static_cast<int>(n - i) < 6 - used)
      return false;
    label[i] = 6;
    if (go(i + 1, used))
      return true;
    for (int b = 0; b <= std::min(used, 5); ++b) {
      label[i] = b;
      if (go(i + 1, std::max(used, b + 1)))
        return true;
    }
    label[i] = 6;
    return false;
  };
  return go(0, 0);
}

inline Graph random_graph(Rng &rng, std::size_t n, int percent) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform(0, 99) < percent)
        g.add_edge(u, v);
  return g;
}

/// Replace every edge named in `edges` by a path through a new vertex.
inline Graph subdivide(const Graph &g, const std::vector<Edge> &edges) {
  Graph out(g.vertex_count() + edges.size());
  Vertex next = g.vertex_count();
  for (const auto &[u, v] : g.edges()) {
    if (std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end()) {
      out.add_edge(u, next);
      out.add_edge(next, v);
      ++next;
    } else {
      out.add_edge(u, v);
    }
  }
  return out;
}

/// Planar graphs on six vertices.
inline std::vector<std::pair<std::string, Graph>> planar_six_vertex_samples() {
  std::vector<std::pair<std::string, Graph>> out;
  Graph octahedron(6);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (v != u + 3)
        octahedron.add_edge(u, v);
  out.emplace_back("octahedron", octahedron);
  Graph wheel(6);
  for (Vertex v = 1; v < 6; ++v) {
    wheel.add_edge(0, v);
    wheel.add_edge(v, v % 5 + 1);
  }
  out.emplace_back("wheel", wheel);
  Graph prism(6);
  for (Vertex v = 0; v < 3; ++v) {
    prism.add_edge(v, (v + 1) % 3);
    prism.add_edge(v + 3, (v + 1) % 3 + 3);
    prism.add_edge(v, v + 3);
  }
  out.emplace_back("prism", prism);
  out.emplace_back("hexagon", cycle_graph(6));
  Graph k24(6);
  for (Vertex u = 0; u < 2; ++u)
    for (Vertex v = 2; v < 6; ++v)
      k24.add_edge(u, v);
  out.emplace_back("K2,4", k24);
  Graph fan(6);
  for (Vertex v = 1; v < 6; ++v)
    fan.add_edge(0, v);
  for (Vertex v = 1; v < 5; ++v)
    fan.add_edge(v, v + 1);
  out.emplace_back("fan", fan);
  return out;
}

/// Whether the closed polylines a and b meet anywhere.
template <std::size_t D> bool polylines_meet(const GeomCycle1<D> &a, const GeomCycle1<D> &b) {
  for (const auto &s : a.segments())
    for (const auto &t : b.segments())
      if (hull_contact<D>(s.v, t.v) != HullContact::disjoint)
        return true;
  return false;
}

inline std::optional<GeomCycle1_3> try_polygon(std::vector<Point3> pts) {
  try {
    return GeomCycle1_3(std::move(pts));
  } catch (const GeometryError &) {
    return std::nullopt;
  } catch (const std::invalid_argument &) {
    return std::nullopt;
  }
}

/// Random disjoint closed polygons with 3-5 vertices on a small integer grid;
/// the grid is tight enough that a good share of pairs are linked.
inline std::pair<GeomCycle1_3, GeomCycle1_3> random_disjoint_pair(Rng &rng, std::int64_t bound = 4) {
  for (;;) {
    auto make = [&]() {
      std::vector<Point3> pts;
      const auto n = rng.uniform(3, 5);
      for (std::int64_t i = 0; i < n; ++i)
        pts.push_back(rng.integer_point<3>(bound));
      return try_polygon(std::move(pts));
    };
    auto a = make();
    auto b = make();
    if (a && b && !polylines_meet(*a, *b))
      return {std::move(*a), std::move(*b)};
  }
}

/// Insert the midpoint of every segment.
template <std::size_t D> GeomCycle1<D> subdivided(const GeomCycle1<D> &c) {
  std::vector<Point<D>> pts;
  const auto &p = c.points();
  for (std::size_t i = 0; i < p.size(); ++i) {
    pts.push_back(p[i]);
    Point<D> mid;
    for (std::size_t k = 0; k < D; ++k)
      mid[k] = (p[i][k] + p[(i + 1) % p.size()][k]) / 2;
    pts.push_back(mid);
  }
  return GeomCycle1<D>(std::move(pts));
}

struct Affine3 {
  std::array<std::array<long, 3>, 3> m;
  std::array<long, 3> t;

  long det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Point3 operator()(const Point3 &p) const {
    Point3 q;
    for (std::size_t i = 0; i < 3; ++i) {
      q[i] = t[i];
      for (std::size_t j = 0; j < 3; ++j)
        q[i] += m[i][j] * p[j];
    }
    return q;
  }

  GeomCycle1_3 operator()(const GeomCycle1_3 &c) const {
    std::vector<Point3> pts;
    for (const auto &p : c.points())
      pts.push_back((*this)(p));
    return GeomCycle1_3(std::move(pts));
  }
};

inline Affine3 random_affine(Rng &rng) {
  for (;;) {
    Affine3 a;
    for (auto &row : a.m)
      for (auto &x : row)
        x = rng.uniform(-3, 3);
    for (auto &x : a.t)
      x = rng.uniform(-10, 10);
    if (a.det() != 0)
      return a;
  }
}

/// Reroute one straight edge of `e` through a single new point placed near
/// its midpoint. Returns nullopt if the result is not an embedding.
inline std::optional<EmbeddedK6> reroute_edge(const EmbeddedK6 &e, const Edge &edge, Rng &rng) {
  if (e.polylines.contains(edge))
    return std::nullopt;
  EmbeddedK6 out = e;
  Point3 p;
  for (std::size_t k = 0; k < 3; ++k)
    p[k] = (e.points[edge.first][k] + e.points[edge.second][k]) / 2 + Rational(static_cast<long>(rng.uniform(-20, 20))) / 4;
  out.points.push_back(p);
  out.polylines[edge] = {out.points.size() - 1};
  if (!verify_embedding3(out).valid())
    return std::nullopt;
  return out;
}

/// K6 with all vertices on a plane: straight edges must cross.
inline EmbeddedK6 planar_k6() {
  EmbeddedK6 e;
  for (long i = 1; i <= 6; ++i)
    e.points.push_back({i, i * i, 0});
  return e;
}

/// Placement of S(K6) with both apexes above the base on a common ray.
inline EmbeddedSuspension same_ray_apexes() {
  EmbeddedSuspension s;
  for (const auto &p : moment_curve_k6().points)
    s.points.push_back(lift<4>(p, 0));
  s.points.push_back({0, 0, 0, 1});
  s.points.push_back({0, 0, 0, 2});
  return s;
}

inline EmbeddedSuspension random_placement4(Rng &rng) {
  EmbeddedSuspension s;
  for (int i = 0; i < 8; ++i)
    s.points.push_back(rng.integer_point<4>(20));
  return s;
}

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Runs the CLI in-process and captures stdout.
struct CliRun {
  int status;
  std::string out;
  std::string err;
};

inline CliRun run(const std::vector<std::string> &args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

} // namespace linklab::testing
