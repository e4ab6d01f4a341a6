#pragma once

#include "linklab/graph.hpp"
#include "linklab/predicates.hpp"
#include "linklab/random.hpp"

#include <map>
#include <set>

namespace linklab {

class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The two cycles (or cells) intersect, so no linking number exists.
class NotDisjoint : public GeometryError {
public:
  using GeometryError::GeometryError;
};

/// Every random choice within the retry budget hit a degenerate position.
class RetryBudgetExhausted : public GeometryError {
public:
  using GeometryError::GeometryError;
};

inline constexpr int kRetryBudget = 64;

/// Oriented, simple, closed polyline in D-space.
template <std::size_t D> class GeomCycle1 {
public:
  explicit GeomCycle1(std::vector<Point<D>> pts) : pts_(std::move(pts)) {
    const std::size_t n = pts_.size();
    if (n < 3)
      throw GeometryError("a closed polyline needs at least 3 points");
    for (std::size_t i = 0; i < n; ++i)
      if (pts_[i] == pts_[(i + 1) % n])
        throw GeometryError("consecutive polyline points coincide");
    const auto segs = segments();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
        const auto c = hull_contact<D>(segs[i].v, segs[j].v);
        if (c != (adjacent ? HullContact::shared_only : HullContact::disjoint))
          throw GeometryError("polyline is not simple");
      }
  }

  const std::vector<Point<D>> &points() const { return pts_; }

  std::vector<Segment<D>> segments() const {
    std::vector<Segment<D>> out;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      out.emplace_back(pts_[i], pts_[(i + 1) % pts_.size()]);
    return out;
  }

  GeomCycle1 reversed() const { return GeomCycle1(std::vector<Point<D>>(pts_.rbegin(), pts_.rend())); }

private:
  std::vector<Point<D>> pts_;
};

using GeomCycle1_3 = GeomCycle1<3>;
using GeomCycle1_4 = GeomCycle1<4>;

namespace detail {

/// Triangles re-expressed over a deduplicated point table.
struct IndexedTriangles {
  std::vector<Point4> points;
  std::vector<std::array<std::size_t, 3>> tris;
};

inline IndexedTriangles index_triangles(std::span<const Tri4> tris) {
  IndexedTriangles out;
  std::map<Point4, std::size_t> id;
  for (const auto &t : tris) {
    std::array<std::size_t, 3> idx{};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [it, fresh] = id.emplace(t.v[k], out.points.size());
      if (fresh)
        out.points.push_back(t.v[k]);
      idx[k] = it->second;
    }
    out.tris.push_back(idx);
  }
  return out;
}

/// Parity of the permutation sorting three distinct values: +1 even, -1 odd.
inline int sort_parity(std::array<std::size_t, 3> &v) {
  int parity = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j + 1 < 3 - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        parity = -parity;
      }
  return parity;
}

using TriangleChain = std::map<std::array<std::size_t, 3>, long>;

inline void add_triangle(TriangleChain &chain, std::array<std::size_t, 3> t, long coeff) {
  coeff *= sort_parity(t);
  if ((chain[t] += coeff) == 0)
    chain.erase(t);
}

} // namespace detail

/// Oriented closed surface in 4-space made of flat triangles.
class GeomCycle2 {
public:
  explicit GeomCycle2(std::vector<Tri4> tris) : tris_(std::move(tris)) {
    if (tris_.empty())
      throw GeometryError("empty surface");
    const auto ix = detail::index_triangles(tris_);

    std::map<Edge, long> directed;
    std::map<Edge, int> cover;
    for (const auto &t : ix.tris)
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t a = t[k], b = t[(k + 1) % 3];
        const Edge e = make_edge(a, b);
        directed[e] += a < b ? 1 : -1;
        ++cover[e];
      }
    for (const auto &[e, c] : directed)
      if (c != 0)
        throw GeometryError("surface has nonzero boundary");
    for (const auto &[e, c] : cover)
      if (c != 2)
        throw GeometryError("surface edge not on exactly two triangles");

    for (std::size_t v = 0; v < ix.points.size(); ++v) {
      std::map<std::size_t, std::vector<std::size_t>> link;
      for (const auto &t : ix.tris) {
        const auto it = std::find(t.begin(), t.end(), v);
        if (it == t.end())
          continue;
        const auto k = static_cast<std::size_t>(it - t.begin());
        link[t[(k + 1) % 3]].push_back(t[(k + 2) % 3]);
        link[t[(k + 2) % 3]].push_back(t[(k + 1) % 3]);
      }
      std::set<std::size_t> seen{link.begin()->first};
      std::vector<std::size_t> stack{link.begin()->first};
      while (!stack.empty()) {
        const auto x = stack.back();
        stack.pop_back();
        for (const auto y : link[x])
          if (seen.insert(y).second)
            stack.push_back(y);
      }
      if (seen.size() != link.size())
        throw GeometryError("surface vertex link is not a circle");
    }

    for (std::size_t i = 0; i < tris_.size(); ++i)
      for (std::size_t j = i + 1; j < tris_.size(); ++j) {
        const auto &a = ix.tris[i];
        const auto &b = ix.tris[j];
        const bool share = std::any_of(a.begin(), a.end(), [&](std::size_t x) {
          return std::find(b.begin(), b.end(), x) != b.end();
        });
        const auto c = hull_contact<4>(tris_[i].v, tris_[j].v);
        if (c != (share ? HullContact::shared_only : HullContact::disjoint))
          throw GeometryError("surface triangles intersect");
      }
  }

  const std::vector<Tri4> &triangles() const { return tris_; }

  GeomCycle2 reversed() const {
    std::vector<Tri4> out;
    for (const auto &t : tris_)
      out.push_back(t.reversed());
    return GeomCycle2(std::move(out));
  }

  std::vector<Point4> points() const { return detail::index_triangles(tris_).points; }

private:
  std::vector<Tri4> tris_;
};

template <std::size_t D> struct LinkingResult {
  long value = 0;
  Point<D> apex;
  int retries = 0;
};

namespace detail {

template <std::size_t D>
std::vector<Point<D>> all_points(const GeomCycle1<D> &a, std::span<const Point<D>> extra) {
  std::vector<Point<D>> pts = a.points();
  pts.insert(pts.end(), extra.begin(), extra.end());
  return pts;
}

/// Cone of a closed polyline over `apex`; nullopt if any cone triangle is flat.
template <std::size_t D>
std::optional<std::vector<Triangle<D>>> cone(const GeomCycle1<D> &c, const Point<D> &apex) {
  std::vector<Triangle<D>> out;
  for (const auto &s : c.segments()) {
    const std::array<Point<D>, 3> v{apex, s.v[0], s.v[1]};
    if (!affinely_independent<D>(v))
      return std::nullopt;
    out.emplace_back(apex, s.v[0], s.v[1]);
  }
  return out;
}

} // namespace detail

/// Linking number of two disjoint closed polylines in 3-space: the signed
/// count of b's segments crossing the cone of a over a random apex.
inline LinkingResult<3> lk3(const GeomCycle1_3 &a, const GeomCycle1_3 &b, std::uint64_t seed) {
  const auto sa = a.segments();
  const auto sb = b.segments();
  for (const auto &x : sa)
    for (const auto &y : sb)
      if (hull_contact<3>(x.v, y.v) != HullContact::disjoint)
        throw NotDisjoint("lk3: cycles intersect");

  Rng rng(seed);
  const auto pts = detail::all_points<3>(a, b.points());
  const auto box = inflated_box<3>(pts);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    const Point3 apex = rng.grid_point(box);
    const auto cone = detail::cone(a, apex);
    if (!cone)
      continue;
    long total = 0;
    bool degenerate = false;
    for (const auto &s : sb) {
      for (const auto &t : *cone) {
        const auto r = seg_tri_hit3(s, t);
        if (is_degenerate(r)) {
          degenerate = true;
          break;
        }
        total += hit_sign(r);
      }
      if (degenerate)
        break;
    }
    if (!degenerate)
      return {total, apex, attempt};
  }
  throw RetryBudgetExhausted("lk3: no general-position apex found");
}

/// Linking number by signed crossings of a generic planar projection, summed
/// over the crossings where b passes over a.
inline long lk3_projection_oracle(const GeomCycle1_3 &a, const GeomCycle1_3 &b,
                                  std::uint64_t seed = 0) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Matrix m(3, std::vector<Rational>(3));
    for (auto &row : m)
      for (auto &x : row)
        x = Rational(static_cast<long>(rng.uniform(-9, 9)));
    if (determinant(m) <= 0)
      continue;
    auto transform = [&](const Point3 &p) {
      Point3 q;
      for (std::size_t r = 0; r < 3; ++r)
        q[r] = m[r][0] * p[0] + m[r][1] * p[1] + m[r][2] * p[2];
      return q;
    };
    auto image = [&](const GeomCycle1_3 &c) {
      std::vector<std::array<Point3, 2>> out;
      for (const auto &s : c.segments())
        out.push_back({transform(s.v[0]), transform(s.v[1])});
      return out;
    };
    const auto ia = image(a);
    const auto ib = image(b);
    auto cross = [](const Rational &x1, const Rational &y1, const Rational &x2, const Rational &y2) {
      return Rational(x1 * y2 - y1 * x2);
    };

    long total = 0;
    bool degenerate = false;
    for (const auto &[p0, p1] : ia) {
      for (const auto &[q0, q1] : ib) {
        const Rational dax = p1[0] - p0[0], day = p1[1] - p0[1];
        const Rational dbx = q1[0] - q0[0], dby = q1[1] - q0[1];
        const Rational wx = q0[0] - p0[0], wy = q0[1] - p0[1];
        const Rational den = cross(dax, day, dbx, dby);
        if (den == 0) {
          if (cross(dax, day, wx, wy) != 0)
            continue; // parallel, distinct lines
          // Collinear in projection: overlap or touching is degenerate.
          const Rational len = dax * dax + day * day;
          const Rational t0 = (wx * dax + wy * day) / len;
          const Rational t1 = ((q1[0] - p0[0]) * dax + (q1[1] - p0[1]) * day) / len;
          if (std::max(t0, t1) >= 0 && std::min(t0, t1) <= 1) {
            degenerate = true;
            break;
          }
          continue;
        }
        const Rational s = cross(wx, wy, dbx, dby) / den;
        const Rational t = cross(wx, wy, dax, day) / den;
        if (s < 0 || s > 1 || t < 0 || t > 1)
          continue;
        if (s == 0 || s == 1 || t == 0 || t == 1) {
          degenerate = true;
          break;
        }
        const Rational za = p0[2] + s * (p1[2] - p0[2]);
        const Rational zb = q0[2] + t * (q1[2] - q0[2]);
        if (za == zb)
          throw NotDisjoint("lk3_projection_oracle: cycles intersect");
        if (zb > za)
          total += sign(cross(dbx, dby, dax, day));
      }
      if (degenerate)
        break;
    }
    if (!degenerate)
      return total;
  }
  throw RetryBudgetExhausted("lk3_projection_oracle: no generic projection found");
}

inline void require_disjoint(const GeomCycle1_4 &c1, const GeomCycle2 &c2) {
  for (const auto &s : c1.segments())
    for (const auto &t : c2.triangles())
      if (is_degenerate(seg_tri_meets4(s, t)))
        throw NotDisjoint("lk4: curve meets surface");
}

/// Linking number of a closed polyline with a closed oriented surface in
/// 4-space: the signed count of intersections between the cone of c1 over a
/// random apex and the surface triangles.
inline LinkingResult<4> lk4(const GeomCycle1_4 &c1, const GeomCycle2 &c2, std::uint64_t seed) {
  require_disjoint(c1, c2);
  Rng rng(seed);
  const auto surface_pts = c2.points();
  const auto pts = detail::all_points<4>(c1, surface_pts);
  const auto box = inflated_box<4>(pts);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    const Point4 apex = rng.grid_point(box);
    const auto cone = detail::cone(c1, apex);
    if (!cone)
      continue;
    long total = 0;
    bool degenerate = false;
    for (const auto &ct : *cone) {
      for (const auto &st : c2.triangles()) {
        const auto r = tri_tri_hit4(ct, st);
        if (is_degenerate(r)) {
          degenerate = true;
          break;
        }
        total += hit_sign(r);
      }
      if (degenerate)
        break;
    }
    if (!degenerate)
      return {total, apex, attempt};
  }
  throw RetryBudgetExhausted("lk4: no general-position apex found");
}

/// Apexes and base triangle of a surface of the form S(triangle).
struct SuspensionShape {
  std::array<Point4, 2> apexes;
  std::array<Point4, 3> base;
};

/// Recognises a 6-triangle surface as the suspension of a triangle.
inline std::optional<SuspensionShape> suspension_shape(const GeomCycle2 &c2) {
  const auto ix = detail::index_triangles(c2.triangles());
  if (ix.points.size() != 5 || ix.tris.size() != 6)
    return std::nullopt;
  std::vector<int> incidence(5, 0);
  for (const auto &t : ix.tris)
    for (const auto v : t)
      ++incidence[v];
  std::vector<std::size_t> apex, base;
  for (std::size_t v = 0; v < 5; ++v)
    (incidence[v] == 3 ? apex : base).push_back(v);
  if (apex.size() != 2 || base.size() != 3)
    return std::nullopt;
  for (const auto &t : ix.tris) {
    const auto n = std::count_if(t.begin(), t.end(), [&](std::size_t v) {
      return v == apex[0] || v == apex[1];
    });
    if (n != 1)
      return std::nullopt;
  }
  return SuspensionShape{{ix.points[apex[0]], ix.points[apex[1]]},
                         {ix.points[base[0]], ix.points[base[1]], ix.points[base[2]]}};
}

/// Sign relating the segment/3-chain count to lk4's cone/surface count.
inline constexpr long kChainOracleOrientation = 1;

/// Linking number of c1 with a suspension-shaped surface c2 computed on the
/// dual side: c2 bounds the 3-chain made of two tetrahedral cones (one per
/// apex) over a disk spanning the base triangle, and the oracle counts
/// signed crossings of c1's segments through that chain. The disk is coned
/// from a random point so that c1 crosses the chain transversally.
inline long lk4_chain_oracle(const GeomCycle1_4 &c1, const GeomCycle2 &c2, std::uint64_t seed = 0) {
  const auto shape = suspension_shape(c2);
  if (!shape)
    throw GeometryError("lk4_chain_oracle: surface is not suspension-shaped");
  require_disjoint(c1, c2);

  // Point table: apexes 0,1; base 2,3,4; disk centre 5.
  std::vector<Point4> table{shape->apexes[0], shape->apexes[1], shape->base[0], shape->base[1],
                            shape->base[2]};
  const auto key = [&](const Point4 &p) {
    return static_cast<std::size_t>(std::find(table.begin(), table.end(), p) - table.begin());
  };
  detail::TriangleChain surface;
  for (const auto &t : c2.triangles())
    detail::add_triangle(surface, {key(t.v[0]), key(t.v[1]), key(t.v[2])}, 1);

  Rng rng(seed);
  const auto pts = detail::all_points<4>(c1, table);
  const auto box = inflated_box<4>(pts, 1);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    table.resize(5);
    table.push_back(rng.grid_point(box));
    const std::size_t centre = 5;

    struct SignedTet {
      std::array<std::size_t, 4> v;
      long coeff;
    };
    std::vector<SignedTet> tets;
    detail::TriangleChain boundary;
    for (const std::size_t apex : {std::size_t{0}, std::size_t{1}})
      for (const auto &[i, j] : {std::pair{2, 3}, std::pair{3, 4}, std::pair{4, 2}}) {
        const std::array<std::size_t, 4> v{apex, centre, static_cast<std::size_t>(i),
                                           static_cast<std::size_t>(j)};
        // d[x0 x1 x2 x3] = [x1x2x3] - [x0x2x3] + [x0x1x3] - [x0x1x2];
        // the surface face [apex i j] carries coefficient -1.
        std::array<std::size_t, 3> outer{apex, v[2], v[3]};
        auto sorted = outer;
        const long parity = detail::sort_parity(sorted);
        const auto it = surface.find(sorted);
        if (it == surface.end())
          throw GeometryError("lk4_chain_oracle: surface face missing");
        const long coeff = -it->second * parity;
        tets.push_back({v, coeff});
        detail::add_triangle(boundary, {v[1], v[2], v[3]}, coeff);
        detail::add_triangle(boundary, {v[0], v[2], v[3]}, -coeff);
        detail::add_triangle(boundary, {v[0], v[1], v[3]}, coeff);
        detail::add_triangle(boundary, {v[0], v[1], v[2]}, -coeff);
      }
    if (boundary != surface)
      throw GeometryError("lk4_chain_oracle: surface orientation is inconsistent");

    long total = 0;
    bool degenerate = false;
    for (const auto &tet : tets) {
      const std::array<Point4, 4> corners{table[tet.v[0]], table[tet.v[1]], table[tet.v[2]],
                                          table[tet.v[3]]};
      if (!affinely_independent<4>(corners)) {
        degenerate = true;
        break;
      }
      const Tetrahedron<4> solid(corners[0], corners[1], corners[2], corners[3]);
      for (const auto &s : c1.segments()) {
        const auto r = seg_tet_hit4(s, solid);
        if (is_degenerate(r)) {
          degenerate = true;
          break;
        }
        total += tet.coeff * hit_sign(r);
      }
      if (degenerate)
        break;
    }
    if (!degenerate)
      return kChainOracleOrientation * total;
  }
  throw RetryBudgetExhausted("lk4_chain_oracle: no general-position disk found");
}

} // namespace linklab
