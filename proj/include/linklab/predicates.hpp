#pragma once

#include "linklab/geometry.hpp"

#include <stdexcept>
#include <variant>

namespace linklab {

/// Oriented closed segment; the endpoint order is its orientation.
template <std::size_t D> struct Segment {
  std::array<Point<D>, 2> v;

  Segment(Point<D> a, Point<D> b) : v{std::move(a), std::move(b)} {
    if (v[0] == v[1])
      throw std::invalid_argument("segment endpoints coincide");
  }
  Vec<D> direction() const { return v[1] - v[0]; }
};

/// Oriented closed triangle; the vertex order is its orientation.
template <std::size_t D> struct Triangle {
  std::array<Point<D>, 3> v;

  Triangle(Point<D> a, Point<D> b, Point<D> c) : v{std::move(a), std::move(b), std::move(c)} {
    if (!affinely_independent<D>(v))
      throw std::invalid_argument("degenerate triangle");
  }
  Triangle reversed() const { return Triangle(v[0], v[2], v[1]); }
};

/// Oriented tetrahedron, only needed in 4-space for bounding 3-chains.
template <std::size_t D> struct Tetrahedron {
  std::array<Point<D>, 4> v;

  Tetrahedron(Point<D> a, Point<D> b, Point<D> c, Point<D> d)
      : v{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (!affinely_independent<D>(v))
      throw std::invalid_argument("degenerate tetrahedron");
  }
};

using Segment3 = Segment<3>;
using Segment4 = Segment<4>;
using Tri3 = Triangle<3>;
using Tri4 = Triangle<4>;

/// A transverse intersection point strictly inside both simplices.
template <std::size_t D> struct SignedHit {
  Point<D> location;
  int sign = 0;
  std::vector<Rational> first_barycentric;
  std::vector<Rational> second_barycentric;
};

struct NoHit {};
/// Singular or boundary-touching contact. Callers re-randomize.
struct Degenerate {};

template <std::size_t D> using HitResult = std::variant<NoHit, SignedHit<D>, Degenerate>;

template <std::size_t D> bool is_degenerate(const HitResult<D> &r) {
  return std::holds_alternative<Degenerate>(r);
}

/// Signed contribution of a hit result (0 for none; undefined for degenerate).
template <std::size_t D> int hit_sign(const HitResult<D> &r) {
  if (const auto *h = std::get_if<SignedHit<D>>(&r))
    return h->sign;
  return 0;
}

/// Intersection of a k-simplex with an m-simplex in D-space where k + m = D.
/// The affine hulls meet in a single point when the tangent matrix
/// [u_1..u_k, v_1..v_m] is nonsingular; its determinant sign is the hit sign.
template <std::size_t D>
HitResult<D> transverse_hit(std::span<const Point<D>> p, std::span<const Point<D>> q) {
  const std::size_t k = p.size() - 1;
  const std::size_t m = q.size() - 1;
  if (k + m != D)
    throw std::invalid_argument("transverse_hit: dimensions must sum to the ambient dimension");
  if (!boxes_overlap(bounding_box(p), bounding_box(q)))
    return NoHit{};

  // p0 + sum s_i u_i - sum t_j v_j = q0
  std::vector<Vec<D>> tangents;
  for (std::size_t i = 1; i <= k; ++i)
    tangents.push_back(p[i] - p[0]);
  for (std::size_t j = 1; j <= m; ++j)
    tangents.push_back(q[j] - q[0]);
  Matrix sys = columns<D>(tangents);
  for (std::size_t r = 0; r < D; ++r)
    for (std::size_t c = k; c < D; ++c)
      sys[r][c] = -sys[r][c];
  const Vec<D> rhs = q[0] - p[0];
  const auto x = solve(sys, rhs);
  if (!x) {
    if (hull_contact<D>(p, q) == HullContact::disjoint)
      return NoHit{};
    return Degenerate{};
  }

  auto barycentric = [&](std::size_t offset, std::size_t count) {
    std::vector<Rational> w(count + 1);
    w[0] = 1;
    for (std::size_t i = 0; i < count; ++i) {
      w[i + 1] = (*x)[offset + i];
      w[0] -= w[i + 1];
    }
    return w;
  };
  auto wp = barycentric(0, k);
  auto wq = barycentric(k, m);

  bool boundary = false;
  for (const auto *w : {&wp, &wq})
    for (const auto &c : *w) {
      if (c < 0)
        return NoHit{};
      if (c == 0)
        boundary = true;
    }
  if (boundary)
    return Degenerate{};

  SignedHit<D> hit;
  hit.location = combine<D>(p, wp);
  hit.sign = sign(determinant(columns<D>(tangents)));
  hit.first_barycentric = std::move(wp);
  hit.second_barycentric = std::move(wq);
  return hit;
}

/// Classification of two closed segments in 3-space.
enum class SegmentContact { disjoint, shared_endpoint_only, violation };

inline SegmentContact seg_seg_disjoint3(const Segment3 &s1, const Segment3 &s2) {
  int common = 0;
  for (const auto &a : s1.v)
    for (const auto &b : s2.v)
      if (a == b)
        ++common;
  const auto contact = hull_contact<3>(s1.v, s2.v);
  if (common == 0)
    return contact == HullContact::disjoint ? SegmentContact::disjoint : SegmentContact::violation;
  if (common == 1 && contact == HullContact::shared_only)
    return SegmentContact::shared_endpoint_only;
  return SegmentContact::violation;
}

/// Segment against triangle in 3-space. Sign is sign_det3(d, v1, v2) with d
/// the segment direction and v1, v2 the triangle edge vectors from v[0].
inline HitResult<3> seg_tri_hit3(const Segment3 &s, const Tri3 &t) {
  return transverse_hit<3>(s.v, t.v);
}

/// Triangle against triangle in 4-space. Sign is sign_det4(u1, u2, v1, v2).
inline HitResult<4> tri_tri_hit4(const Tri4 &t1, const Tri4 &t2) {
  return transverse_hit<4>(t1.v, t2.v);
}

/// Segment against tetrahedron in 4-space. Sign is sign_det4(d, e1, e2, e3).
inline HitResult<4> seg_tet_hit4(const Segment4 &s, const Tetrahedron<4> &t) {
  return transverse_hit<4>(s.v, t.v);
}

/// A segment and a triangle in 4-space generically miss; any contact of the
/// closed cells (including a shared vertex) is reported as degenerate.
inline HitResult<4> seg_tri_meets4(const Segment4 &s, const Tri4 &t) {
  if (hull_contact<4>(s.v, t.v) == HullContact::disjoint)
    return NoHit{};
  return Degenerate{};
}

} // namespace linklab
