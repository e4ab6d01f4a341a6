#pragma once

#include "linklab/complex.hpp"
#include "linklab/linking.hpp"

namespace linklab {

/// One failed check of an embedding verification.
struct Violation {
  std::string kind; ///< "structure", "coincident-points", "intersection"
  std::string first;
  std::string second;

  friend bool operator==(const Violation &, const Violation &) = default;
};

struct EmbeddingReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

class InvalidEmbedding : public std::runtime_error {
public:
  InvalidEmbedding(const std::string &what, EmbeddingReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const EmbeddingReport &report() const { return report_; }

private:
  EmbeddingReport report_;
};

namespace detail {

inline std::string edge_label(const Edge &e) {
  return "edge " + std::to_string(e.first) + "-" + std::to_string(e.second);
}

inline std::string face_label(const std::array<Vertex, 3> &f) {
  return "face " + std::to_string(f[0]) + "-" + std::to_string(f[1]) + "-" + std::to_string(f[2]);
}

/// Full vertex path of an edge from `u` to `v` given interior points stored
/// in the (min,max) direction.
inline std::vector<std::size_t> oriented_path(const std::map<Edge, std::vector<std::size_t>> &polylines,
                                              Vertex u, Vertex v) {
  const Edge e = make_edge(u, v);
  std::vector<std::size_t> path{e.first};
  if (const auto it = polylines.find(e); it != polylines.end())
    path.insert(path.end(), it->second.begin(), it->second.end());
  path.push_back(e.second);
  if (u != e.first)
    std::reverse(path.begin(), path.end());
  return path;
}

/// A simplex of the subdivided complex, tagged with the cell it lies in.
struct Cell {
  std::vector<std::size_t> v;
  std::string label;
};

template <std::size_t D>
std::vector<Point<D>> corners(const std::vector<Point<D>> &pts, const std::vector<std::size_t> &idx) {
  std::vector<Point<D>> out;
  for (const auto i : idx)
    out.push_back(pts[i]);
  return out;
}

inline std::size_t common_count(const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
  std::size_t n = 0;
  for (const auto x : a)
    n += static_cast<std::size_t>(std::count(b.begin(), b.end(), x));
  return n;
}

template <std::size_t D>
void check_distinct_points(const std::vector<Point<D>> &pts, EmbeddingReport &report) {
  std::map<Point<D>, std::size_t> seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto [it, fresh] = seen.emplace(pts[i], i);
    if (!fresh)
      report.violations.push_back(
          {"coincident-points", "point " + std::to_string(it->second), "point " + std::to_string(i)});
  }
}

/// Checks that every polyline uses in-range, private interior points.
inline void check_polylines(const std::map<Edge, std::vector<std::size_t>> &polylines,
                            std::size_t vertex_count, std::size_t point_count,
                            const std::set<Edge> &allowed, std::map<std::size_t, Edge> &owner,
                            EmbeddingReport &report) {
  for (const auto &[e, interior] : polylines) {
    if (!allowed.contains(e)) {
      report.violations.push_back({"structure", edge_label(e), "polyline on a non-edge"});
      continue;
    }
    for (const auto i : interior) {
      if (i < vertex_count || i >= point_count) {
        report.violations.push_back({"structure", edge_label(e), "bad interior point " + std::to_string(i)});
        continue;
      }
      if (!owner.emplace(i, e).second)
        report.violations.push_back({"structure", edge_label(e), "point " + std::to_string(i) + " reused"});
    }
  }
}

} // namespace detail

/// Straight-line or polyline realization of K6 in rational 3-space. Points
/// 0..5 are the graph vertices; further points are polyline interiors.
struct EmbeddedK6 {
  std::vector<Point3> points;
  /// Interior point indices per edge, ordered from edge.first to edge.second.
  std::map<Edge, std::vector<std::size_t>> polylines;

  std::vector<std::size_t> edge_path(Vertex u, Vertex v) const {
    return detail::oriented_path(polylines, u, v);
  }

  /// The embedded triangle t traversed t.v[0] -> t.v[1] -> t.v[2].
  GeomCycle1_3 cycle(const K6Triangle &t) const {
    std::vector<Point3> pts;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto path = edge_path(t.v[k], t.v[(k + 1) % 3]);
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        pts.push_back(points.at(path[i]));
    }
    return GeomCycle1_3(std::move(pts));
  }

  friend bool operator==(const EmbeddedK6 &, const EmbeddedK6 &) = default;
};

/// Exact check that the straight segments of every edge path form an
/// embedding: segments meet only in shared path points.
inline EmbeddingReport verify_embedding3(const EmbeddedK6 &e) {
  EmbeddingReport report;
  if (e.points.size() < 6) {
    report.violations.push_back({"structure", "points", "fewer than 6 vertices"});
    return report;
  }
  std::map<std::size_t, Edge> owner;
  detail::check_polylines(e.polylines, 6, e.points.size(), k6().edges(), owner, report);
  if (!report.valid())
    return report;
  detail::check_distinct_points(e.points, report);
  if (!report.valid())
    return report;

  std::vector<detail::Cell> cells;
  const Graph graph = k6();
  for (const auto &edge : graph.edges()) {
    const auto path = e.edge_path(edge.first, edge.second);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      cells.push_back({{path[i], path[i + 1]}, detail::edge_label(edge) + " segment " + std::to_string(i)});
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      const Segment3 s1(e.points[cells[i].v[0]], e.points[cells[i].v[1]]);
      const Segment3 s2(e.points[cells[j].v[0]], e.points[cells[j].v[1]]);
      const auto c = seg_seg_disjoint3(s1, s2);
      const auto expected = detail::common_count(cells[i].v, cells[j].v) == 0
                                ? SegmentContact::disjoint
                                : SegmentContact::shared_endpoint_only;
      if (c != expected)
        report.violations.push_back({"intersection", cells[i].label, cells[j].label});
    }
  return report;
}

/// Vertex i at (i, i^2, i^3) for i = 1..6; any four such points are affinely
/// independent, so no two chords meet.
inline EmbeddedK6 moment_curve_k6() {
  EmbeddedK6 e;
  for (long i = 1; i <= 6; ++i)
    e.points.push_back({Rational(i), Rational(i * i), Rational(i * i * i)});
  return e;
}

/// Six integer points in [-bound, bound]^3, resampled until valid.
inline EmbeddedK6 random_generic_k6(std::uint64_t seed, std::int64_t bound = 100) {
  if (bound < 8)
    throw std::invalid_argument("random_generic_k6: bound must be at least 8");
  Rng rng(seed);
  while (true) {
    EmbeddedK6 e;
    for (int i = 0; i < 6; ++i)
      e.points.push_back(rng.integer_point<3>(bound));
    if (verify_embedding3(e).valid())
      return e;
  }
}

/// Realization of S(K6) in rational 4-space. Points 0..5 are the base
/// vertices, 6 and 7 the apexes a and b; further points subdivide cells.
struct EmbeddedSuspension {
  static constexpr Vertex kApexA = 6;
  static constexpr Vertex kApexB = 7;

  std::vector<Point4> points;
  /// Interior point indices per edge, ordered from edge.first to edge.second.
  std::map<Edge, std::vector<std::size_t>> polylines;
  /// Per-face triangulation keyed by the face's vertex triple as it appears
  /// in suspension(k6()); triangles are oriented like that face.
  std::map<std::array<Vertex, 3>, std::vector<std::array<std::size_t, 3>>> triangulations;

  static const TwoComplex &complex() {
    static const TwoComplex c = suspension(k6());
    return c;
  }

  std::vector<std::size_t> edge_path(Vertex u, Vertex v) const {
    return detail::oriented_path(polylines, u, v);
  }

  std::vector<std::array<std::size_t, 3>> face_triangles(const Face &f) const {
    if (const auto it = triangulations.find(f.v); it != triangulations.end())
      return it->second;
    return {f.v};
  }

  GeomCycle1_4 cycle(const K6Triangle &t) const {
    std::vector<Point4> pts;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto path = edge_path(t.v[k], t.v[(k + 1) % 3]);
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        pts.push_back(points.at(path[i]));
    }
    return GeomCycle1_4(std::move(pts));
  }

  /// Geometric surface of an oriented abstract 2-cycle of S(K6).
  GeomCycle2 surface(const AbstractTwoCycle &z) const {
    std::vector<Tri4> tris;
    for (std::size_t k = 0; k < z.faces.size(); ++k)
      for (const auto &t : face_triangles(complex().faces()[z.faces[k]])) {
        const Tri4 tri(points.at(t[0]), points.at(t[1]), points.at(t[2]));
        tris.push_back(z.orientation[k] > 0 ? tri : tri.reversed());
      }
    return GeomCycle2(std::move(tris));
  }

  friend bool operator==(const EmbeddedSuspension &, const EmbeddedSuspension &) = default;
};

/// Exact embedding check of a realized S(K6): structural consistency of the
/// subdivision, then every pair of simplices must meet exactly in the hull
/// of their shared points (and be disjoint when they share none).
inline EmbeddingReport verify_embedding4(const EmbeddedSuspension &e) {
  EmbeddingReport report;
  const auto &c = EmbeddedSuspension::complex();
  if (e.points.size() < 8) {
    report.violations.push_back({"structure", "points", "fewer than 8 vertices"});
    return report;
  }
  const std::set<Edge> allowed(c.edges().begin(), c.edges().end());
  std::map<std::size_t, Edge> edge_owner;
  detail::check_polylines(e.polylines, 8, e.points.size(), allowed, edge_owner, report);

  std::map<std::size_t, std::array<Vertex, 3>> face_owner;
  for (const auto &[key, tris] : e.triangulations) {
    const auto idx = c.face_index(key[0], key[1], key[2]);
    if (!idx || c.faces()[*idx].v != key) {
      report.violations.push_back({"structure", detail::face_label(key), "not an oriented face of S(K6)"});
      continue;
    }
    const Face &f = c.faces()[*idx];
    // The triangulation's boundary must be the face boundary path.
    std::map<Edge, long> chain;
    auto add = [&](std::size_t a, std::size_t b, long s) {
      const Edge k = make_edge(a, b);
      if ((chain[k] += (a < b ? s : -s)) == 0)
        chain.erase(k);
    };
    bool in_range = true;
    for (const auto &t : tris)
      for (std::size_t k = 0; k < 3; ++k) {
        if (t[k] >= e.points.size()) {
          in_range = false;
          continue;
        }
        if (t[k] < 8 && !f.contains(t[k]))
          report.violations.push_back({"structure", detail::face_label(key),
                                       "uses vertex " + std::to_string(t[k]) + " of another cell"});
        if (t[k] >= 8) {
          const auto eo = edge_owner.find(t[k]);
          if (eo != edge_owner.end()) {
            if (f.edge_direction(eo->second) == 0)
              report.violations.push_back({"structure", detail::face_label(key),
                                           "uses point " + std::to_string(t[k]) + " of a foreign edge"});
          } else if (const auto [it, fresh] = face_owner.emplace(t[k], key); !fresh && it->second != key) {
            report.violations.push_back({"structure", detail::face_label(key),
                                         "point " + std::to_string(t[k]) + " shared with another face"});
          }
        }
      }
    if (!in_range) {
      report.violations.push_back({"structure", detail::face_label(key), "point index out of range"});
      continue;
    }
    for (const auto &t : tris)
      for (std::size_t k = 0; k < 3; ++k)
        add(t[k], t[(k + 1) % 3], 1);
    for (std::size_t k = 0; k < 3; ++k) {
      const auto path = e.edge_path(f.v[k], f.v[(k + 1) % 3]);
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        add(path[i], path[i + 1], -1);
    }
    if (!chain.empty())
      report.violations.push_back({"structure", detail::face_label(key), "triangulation boundary mismatch"});
  }
  if (!report.valid())
    return report;
  detail::check_distinct_points(e.points, report);
  if (!report.valid())
    return report;

  std::vector<detail::Cell> segs, tris;
  for (const auto &edge : c.edges()) {
    const auto path = e.edge_path(edge.first, edge.second);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      segs.push_back({{path[i], path[i + 1]}, detail::edge_label(edge) + " segment " + std::to_string(i)});
  }
  for (const auto &f : c.faces()) {
    const auto ft = e.face_triangles(f);
    for (std::size_t i = 0; i < ft.size(); ++i) {
      if (!affinely_independent<4>(detail::corners(e.points, {ft[i][0], ft[i][1], ft[i][2]}))) {
        report.violations.push_back({"structure", detail::face_label(f.v), "flat triangle " + std::to_string(i)});
        continue;
      }
      tris.push_back({{ft[i][0], ft[i][1], ft[i][2]}, detail::face_label(f.v) + " triangle " + std::to_string(i)});
    }
  }
  if (!report.valid())
    return report;

  auto check = [&](const detail::Cell &x, const detail::Cell &y) {
    const std::size_t shared = detail::common_count(x.v, y.v);
    if (shared == std::min(x.v.size(), y.v.size()))
      return; // one is a face of the other
    const auto px = detail::corners(e.points, x.v);
    const auto py = detail::corners(e.points, y.v);
    bool ok;
    if (shared > 0) {
      ok = hull_contact<4>(px, py) == HullContact::shared_only;
    } else if (x.v.size() == 3 && y.v.size() == 3) {
      ok = std::holds_alternative<NoHit>(
          tri_tri_hit4(Tri4(px[0], px[1], px[2]), Tri4(py[0], py[1], py[2])));
    } else if (x.v.size() == 2 && y.v.size() == 3) {
      ok = std::holds_alternative<NoHit>(seg_tri_meets4(Segment4(px[0], px[1]), Tri4(py[0], py[1], py[2])));
    } else {
      ok = hull_contact<4>(px, py) == HullContact::disjoint;
    }
    if (!ok)
      report.violations.push_back({"intersection", x.label, y.label});
  };
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      check(segs[i], segs[j]);
  for (const auto &s : segs)
    for (const auto &t : tris)
      check(s, t);
  for (std::size_t i = 0; i < tris.size(); ++i)
    for (std::size_t j = i + 1; j < tris.size(); ++j)
      check(tris[i], tris[j]);
  return report;
}

/// Lifts the base into w = 0, places a = (apex_a, 1) and b = (apex_b, -1),
/// and cones every edge path up to a and down to b.
inline EmbeddedSuspension sigma6(const EmbeddedK6 &base, const Point3 &apex_a, const Point3 &apex_b) {
  auto report = verify_embedding3(base);
  if (!report.valid())
    throw InvalidEmbedding("sigma6: base is not an embedding", std::move(report));
  EmbeddedSuspension s;
  // Base points keep their indices; the apexes take 6 and 7 and polyline
  // interior points shift up by two.
  auto remap = [](std::size_t i) { return i < 6 ? i : i + 2; };
  for (std::size_t i = 0; i < 6; ++i)
    s.points.push_back(lift<4>(base.points[i], 0));
  s.points.push_back(lift<4>(apex_a, 1));
  s.points.push_back(lift<4>(apex_b, -1));
  for (std::size_t i = 6; i < base.points.size(); ++i)
    s.points.push_back(lift<4>(base.points[i], 0));
  for (const auto &[edge, interior] : base.polylines) {
    std::vector<std::size_t> moved;
    for (const auto i : interior)
      moved.push_back(remap(i));
    s.polylines[edge] = std::move(moved);
  }
  for (const auto &f : EmbeddedSuspension::complex().faces()) {
    if (!base.polylines.contains(make_edge(f.v[0], f.v[1])))
      continue;
    const auto path = s.edge_path(f.v[0], f.v[1]);
    std::vector<std::array<std::size_t, 3>> fan;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      fan.push_back({path[i], path[i + 1], f.v[2]});
    s.triangulations[f.v] = std::move(fan);
  }
  return s;
}

} // namespace linklab
