#pragma once

#include "linklab/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace linklab {

template <std::size_t D> using Point = std::array<Rational, D>;
template <std::size_t D> using Vec = std::array<Rational, D>;

using Point3 = Point<3>;
using Point4 = Point<4>;
using Vec3 = Vec<3>;
using Vec4 = Vec<4>;

template <std::size_t D> Vec<D> operator-(const Point<D> &a, const Point<D> &b) {
  Vec<D> r;
  for (std::size_t i = 0; i < D; ++i)
    r[i] = a[i] - b[i];
  return r;
}

template <std::size_t D> Point<D> operator+(const Point<D> &a, const Vec<D> &b) {
  Point<D> r;
  for (std::size_t i = 0; i < D; ++i)
    r[i] = a[i] + b[i];
  return r;
}

template <std::size_t D> Vec<D> scaled(const Vec<D> &v, const Rational &s) {
  Vec<D> r;
  for (std::size_t i = 0; i < D; ++i)
    r[i] = v[i] * s;
  return r;
}

/// Affine combination sum_i w_i * p_i; weights are not checked to sum to one.
template <std::size_t D>
Point<D> combine(std::span<const Point<D>> pts, std::span<const Rational> w) {
  Point<D> r;
  for (std::size_t i = 0; i < D; ++i)
    r[i] = 0;
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (std::size_t i = 0; i < D; ++i)
      r[i] += w[k] * pts[k][i];
  return r;
}

template <std::size_t D> Point<D> lift(const Point<D - 1> &p, const Rational &last) {
  Point<D> r;
  for (std::size_t i = 0; i + 1 < D; ++i)
    r[i] = p[i];
  r[D - 1] = last;
  return r;
}

/// Dense row-major rational matrix used by the small solvers below.
using Matrix = std::vector<std::vector<Rational>>;

/// Gaussian elimination to reduced row echelon form in place; returns the
/// pivot columns. Columns at or beyond `ncols` are carried along but never
/// chosen as pivots (augmented right-hand sides).
inline std::vector<std::size_t> row_reduce(Matrix &m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0)
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[row], m[p]);
    const Rational inv = 1 / m[row][col];
    for (auto &x : m[row])
      x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0)
        continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c)
        m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  return row_reduce(m, cols).size();
}

/// Exact determinant of a square matrix.
inline Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != col) {
      std::swap(m[p], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0)
        continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c)
        m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Solves the square system m x = rhs; nullopt when m is singular.
inline std::optional<std::vector<Rational>> solve(const Matrix &m,
                                                  std::span<const Rational> rhs) {
  const std::size_t n = m.size();
  Matrix aug = m;
  for (std::size_t r = 0; r < n; ++r)
    aug[r].push_back(rhs[r]);
  if (row_reduce(aug, n).size() < n)
    return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r)
    x[r] = aug[r][n];
  return x;
}

/// Matrix whose columns are the given vectors.
template <std::size_t D> Matrix columns(std::span<const Vec<D>> cols) {
  Matrix m(D, std::vector<Rational>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < D; ++r)
      m[r][c] = cols[c][r];
  return m;
}

inline int sign_det3(const Vec3 &u1, const Vec3 &u2, const Vec3 &u3) {
  const std::array<Vec3, 3> cols{u1, u2, u3};
  return sign(determinant(columns<3>(cols)));
}

inline int sign_det4(const Vec4 &u1, const Vec4 &u2, const Vec4 &u3, const Vec4 &u4) {
  const std::array<Vec4, 4> cols{u1, u2, u3, u4};
  return sign(determinant(columns<4>(cols)));
}

/// True when the points are affinely independent (so at most D+1 of them).
template <std::size_t D> bool affinely_independent(std::span<const Point<D>> pts) {
  if (pts.size() <= 1)
    return true;
  if (pts.size() > D + 1)
    return false;
  std::vector<Vec<D>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i)
    diffs.push_back(pts[i] - pts[0]);
  return rank(columns<D>(diffs)) == diffs.size();
}

template <std::size_t D> struct Box {
  Point<D> lo, hi;
};

template <std::size_t D> Box<D> bounding_box(std::span<const Point<D>> pts) {
  Box<D> b{pts[0], pts[0]};
  for (const auto &p : pts)
    for (std::size_t i = 0; i < D; ++i) {
      if (p[i] < b.lo[i])
        b.lo[i] = p[i];
      if (p[i] > b.hi[i])
        b.hi[i] = p[i];
    }
  return b;
}

template <std::size_t D> bool boxes_overlap(const Box<D> &a, const Box<D> &b) {
  for (std::size_t i = 0; i < D; ++i)
    if (a.hi[i] < b.lo[i] || b.hi[i] < a.lo[i])
      return false;
  return true;
}

/// How two closed simplices (given by vertex lists) meet.
enum class HullContact {
  disjoint,    ///< empty intersection
  shared_only, ///< intersection is exactly the hull of the common vertices
  overlap,     ///< anything more
};

namespace detail {

/// Maximises `objective . x` over { x >= 0 : a x = b } by enumerating basic
/// feasible solutions. Returns nullopt when infeasible. The feasible region
/// must be bounded; the systems built here are tiny (at most 6 columns).
inline std::optional<Rational> max_over_polytope(Matrix a, std::span<const Rational> b,
                                                 std::span<const Rational> objective) {
  const std::size_t n = objective.size();
  for (std::size_t r = 0; r < a.size(); ++r)
    a[r].push_back(b[r]);
  const auto pivots = row_reduce(a, n);
  const std::size_t r = pivots.size();
  for (std::size_t row = r; row < a.size(); ++row)
    if (a[row][n] != 0)
      return std::nullopt;
  a.resize(r);

  std::optional<Rational> best;
  std::vector<std::size_t> basis(r);
  // Enumerate r-subsets of the columns in lexicographic order.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::size_t k = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (pick[c])
        basis[k++] = c;
    Matrix sub(r, std::vector<Rational>(r));
    std::vector<Rational> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j)
        sub[i][j] = a[i][basis[j]];
      rhs[i] = a[i][n];
    }
    const auto x = solve(sub, rhs);
    if (!x)
      continue;
    if (std::any_of(x->begin(), x->end(), [](const Rational &v) { return v < 0; }))
      continue;
    Rational value = 0;
    for (std::size_t j = 0; j < r; ++j)
      value += objective[basis[j]] * (*x)[j];
    if (!best || value > *best)
      best = value;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

} // namespace detail

/// Exact classification of conv(p) ∩ conv(q). Vertices are matched as common
/// when their coordinates are equal. Each vertex list must be affinely
/// independent (a non-degenerate simplex).
template <std::size_t D>
HullContact hull_contact(std::span<const Point<D>> p, std::span<const Point<D>> q) {
  std::vector<bool> p_shared(p.size(), false), q_shared(q.size(), false);
  std::vector<Point<D>> all(p.begin(), p.end());
  bool any_shared = false;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const auto it = std::find(p.begin(), p.end(), q[j]);
    if (it != p.end()) {
      p_shared[static_cast<std::size_t>(it - p.begin())] = true;
      q_shared[j] = true;
      any_shared = true;
    } else {
      all.push_back(q[j]);
    }
  }

  if (!any_shared && !boxes_overlap(bounding_box(p), bounding_box(q)))
    return HullContact::disjoint;
  // Faces of one simplex meet exactly in their common face.
  if (affinely_independent<D>(all))
    return any_shared ? HullContact::shared_only : HullContact::disjoint;

  // Variables: barycentric weights of p then of q.
  const std::size_t n = p.size() + q.size();
  Matrix a(D + 2, std::vector<Rational>(n));
  std::vector<Rational> b(D + 2, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t d = 0; d < D; ++d)
      a[d][i] = p[i][d];
    a[D][i] = 1;
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (std::size_t d = 0; d < D; ++d)
      a[d][p.size() + j] = -q[j][d];
    a[D + 1][p.size() + j] = 1;
  }
  b[D] = 1;
  b[D + 1] = 1;
  std::vector<Rational> objective(n, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    objective[i] = p_shared[i] ? 0 : 1;
  for (std::size_t j = 0; j < q.size(); ++j)
    objective[p.size() + j] = q_shared[j] ? 0 : 1;

  const auto best = detail::max_over_polytope(std::move(a), b, objective);
  if (!best)
    return HullContact::disjoint;
  return *best > 0 ? HullContact::overlap : HullContact::shared_only;
}

template <std::size_t D>
HullContact hull_contact(std::initializer_list<Point<D>> p, std::initializer_list<Point<D>> q) {
  return hull_contact<D>(std::span<const Point<D>>(p.begin(), p.size()),
                         std::span<const Point<D>>(q.begin(), q.size()));
}

} // namespace linklab
